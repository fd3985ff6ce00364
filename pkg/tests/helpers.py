"""Shared builders for the test modules."""

import random

from rcdim.graded import Convention, SignedGradedDim
from rcdim.selmer import H1Profile, Place, PlaceKind, build_generator_space, make_setup


CRITERIA_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> bool:
    """Print and remember one PASS/FAIL line for an acceptance criterion."""
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    CRITERIA_LINES.append(line)
    return ok


def _random_signed(rng, weights, total, convention):
    """Spread ``total`` letters over ``weights`` with random signs."""
    letters = [(rng.choice(weights), rng.choice((1, -1))) for _ in range(total)]
    return SignedGradedDim.from_letters(letters, convention)


def random_generator_space(rng: random.Random):
    """A generator space with random genus, g', m, places and (sometimes) exact H^1 profiles.

    Exact-mode Frobenius profiles at good places keep weights >= m+1, the
    range that makes the generators mixed of negative weights.
    """
    genus = rng.randint(2, 4)
    gprime = rng.randint(1, 2)
    m = rng.choice((1, 3, 5))
    places = [Place("p", PlaceKind.P_ADIC)]
    for i in range(rng.randint(1, 3)):
        if rng.random() < 0.7:
            places.append(Place(f"g{i}", PlaceKind.GOOD))
        else:
            places.append(Place(f"b{i}", PlaceKind.BAD, rng.randint(0, gprime)))
    if not any(pl.kind is PlaceKind.GOOD for pl in places):
        places.append(Place("g", PlaceKind.GOOD))
    hodge = rng.choice(("heuristic", "exact"))
    profiles = {}
    if hodge == "exact":
        h1_dim = rng.randint(2, 4 * genus)
        ht = _random_signed(rng, list(range(0, m + 2)), h1_dim, Convention.HODGE_TATE)
        frob = {
            pl.name: _random_signed(rng, [m + 1, m + 2, m + 3], h1_dim, Convention.FROBENIUS)
            for pl in places
            if pl.kind is PlaceKind.GOOD
        }
        profiles[m] = H1Profile(ht, frob)
    setup = make_setup(genus, gprime, places, profiles)
    return setup, build_generator_space(setup, m, hodge)


HODGE_PROFILE = {"by_m": {"1": {"ht": "{0:(4,0), 2:(4,0)}", "frob": {"l": "{2:(6,0), 3:(2,0)}"}}}}

CONFIG_TEXT = """\
# genus-2 run, same as the pinned witness
genus = 2
gprime = 1
m = 1
k = 2
bk = true
"""


def canned_invocations(workdir):
    """The 20 CLI invocations of the contract test, with their expected exit codes.

    Writes the config and hodge-profile files they reference into ``workdir``.
    """
    import json
    from pathlib import Path

    workdir = Path(workdir)
    cfg = workdir / "run.cfg"
    cfg.write_text(CONFIG_TEXT)
    hp = workdir / "h1.json"
    hp.write_text(json.dumps(HODGE_PROFILE))
    bad_json = workdir / "broken.json"
    bad_json.write_text("{not json")
    return [
        (["witt", "2", "3"], 0),
        (["witt", "10", "1", "--json"], 0),
        (["witt", "3", "4"], 0),
        (["graded-witt", "{-1:1, -2:1}", "2", "--json"], 0),
        (["graded-witt", "{0:(2,0)}", "2"], 0),
        (["profile", "--gprime", "1", "--m", "4", "--json"], 0),
        (["profile", "--gprime", "2", "--m", "2", "--a", "1"], 0),
        (["generator", "--genus", "2", "--gprime", "1", "--m", "3", "--json"], 0),
        (["selmer-bound", "--genus", "2", "--m", "3", "--k", "2", "--bk", "--json"], 0),
        (["check", "modular", "--n", "6", "--T", "2", "--json"], 0),
        (["check", "modular", "--n", "5", "--T", "2", "--json"], 1),
        (["check", "genus2", "--genus", "2", "--m", "1", "--k", "1", "--bk"], 2),
        (["check", "genus2", "--genus", "2", "--m", "1", "--k", "2"], 2),
        (["check", "genus2", "--config", str(cfg), "--json"], 0),
        (["check", "genus2", "--config", str(cfg), "--hodge-profile", str(hp), "--json"], 0),
        (["search", "modular", "--T", "3"], 0),
        (["search", "modular", "--T", "2", "--admissible", "even", "--json"], 0),
        (["search", "genus2", "--genus", "2", "--bk", "--budget-k", "0", "--budget-m", "1"], 1),
        (["check", "genus2", "--config", str(cfg), "--hodge-profile", str(bad_json)], 2),
        (["witt", "2", "x"], 2),
    ]
