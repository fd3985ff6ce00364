"""Command-line front end.

Exit codes: 0 success / inequality holds, 1 inequality fails, search
exhausted or oracle disagreement, 2 invalid input.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from dataclasses import dataclass, fields
from typing import Callable, Optional, Sequence

from . import __version__
from .freelie import (
    DEFAULT_ORACLE_BUDGET,
    OracleBudgetExceeded,
    graded_witt,
    lie_sigma_trace,
    lyndon_count,
    lyndon_profile,
    witt,
)
from .graded import (
    Convention,
    FundamentalRep,
    GradedDim,
    SignedGradedDim,
    max_entry_ratio,
    sym_frob_grading,
    sym_ht_grading,
    sym_ht_signed,
    sym_power,
    sym_pure_grading,
    sym_sigma_trace,
)
from .inequality import SCHEMA, Modes, SearchExhausted, check_genus2, check_modular, search_genus2, search_modular
from .selmer import (
    BlochKatoRequired,
    H1Profile,
    Place,
    PlaceKind,
    build_generator_space,
    f0_base_dim,
    make_setup,
    selmer_upper_bound,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    case: Optional[str] = None
    genus: Optional[int] = None
    gprime: int = 1
    m: Optional[int] = None
    k: Optional[int] = None
    n: Optional[int] = None
    num_T: Optional[int] = None
    places: Optional[str] = None
    f0_mode: str = "paper-rule"
    minus_mode: str = "paper-bound"
    hodge_mode: str = "heuristic"
    hodge_profile: Optional[str] = None
    parabolic_dim: Optional[int] = None
    bk: bool = False
    output: str = "text"
    budget_k: int = 20
    budget_m: int = 99
    budget_n: int = 10_000
    admissible: str = "all"

    def modes(self) -> Modes:
        return Modes(
            f0=self.f0_mode,
            minus=self.minus_mode,
            hodge=self.hodge_mode,
            reductive="parabolic" if self.parabolic_dim is not None else "full",
            parabolic_dim=self.parabolic_dim,
        )

    def validate(self, need: Sequence[str] = (), odd_m: bool = False) -> None:
        for name in need:
            if getattr(self, name) is None:
                raise ConfigError(f"missing required parameter {name!r}")
        if self.case not in (None, "genus2", "modular"):
            raise ConfigError(f"case must be genus2 or modular, got {self.case!r}")
        if self.gprime < 1:
            raise ConfigError("gprime must be >= 1")
        if self.genus is not None and self.genus < 2:
            raise ConfigError("genus must be >= 2")
        if self.m is not None and self.m < 1:
            raise ConfigError("m must be >= 1")
        if odd_m and self.m is not None and self.m % 2 == 0:
            raise ConfigError("m must be odd")
        if self.k is not None and (self.k < 0 or self.k % 2):
            raise ConfigError("k must be even")
        if self.n is not None and self.n < 1:
            raise ConfigError("n must be >= 1")
        if self.num_T is not None and self.num_T < 2:
            raise ConfigError("T must contain p and at least one prime of S (T >= 2)")
        if self.output not in ("text", "json"):
            raise ConfigError("output must be text or json")
        try:
            self.modes()
        except ValueError as exc:
            raise ConfigError(str(exc)) from None


_INT_FIELDS = {f.name for f in fields(RunConfig) if f.type in ("int", "Optional[int]")}
_BOOL_FIELDS = {"bk"}


def load_config_file(path: str) -> dict:
    """Read a flat ``key = value`` file whose keys are RunConfig field names."""
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#",))
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_string("[run]\n" + fh.read())
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    known = {f.name for f in fields(RunConfig)}
    out = {}
    for key, raw in parser["run"].items():
        key = key.replace("-", "_")
        if key not in known:
            raise ConfigError(f"unknown config key {key!r}")
        if key in _BOOL_FIELDS:
            out[key] = parser["run"].getboolean(key)
        elif key in _INT_FIELDS:
            try:
                out[key] = int(raw)
            except ValueError:
                raise ConfigError(f"config key {key!r} needs an integer, got {raw!r}") from None
        else:
            out[key] = raw.strip()
    return out


def parse_places(text: str) -> list[Place]:
    """Parse ``name:p``, ``name:good`` and ``name:bad[:a]`` separated by commas."""
    kinds = {"p": PlaceKind.P_ADIC, "p-adic": PlaceKind.P_ADIC, "good": PlaceKind.GOOD, "bad": PlaceKind.BAD}
    places = []
    for item in text.split(","):
        parts = [p.strip() for p in item.strip().split(":")]
        if len(parts) not in (2, 3) or parts[1] not in kinds:
            raise ConfigError(f"bad place spec {item!r} (use name:p, name:good or name:bad[:a])")
        kind = kinds[parts[1]]
        a = None
        if len(parts) == 3:
            if kind is not PlaceKind.BAD:
                raise ConfigError(f"only bad places take an a-parameter: {item!r}")
            try:
                a = int(parts[2])
            except ValueError:
                raise ConfigError(f"a-parameter must be an integer: {item!r}") from None
        places.append(Place(parts[0], kind, a))
    return places


def load_hodge_profiles(path: str, m: Optional[int]) -> dict[int, H1Profile]:
    """Read H^1 profiles from JSON.

    Either ``{"ht": "{w:(d,t), ...}", "frob": {"place": "..."}}`` for the
    configured m, or ``{"by_m": {"3": {...}, "5": {...}}}``.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read hodge profile {path}: {exc}") from None

    def one(d: dict) -> H1Profile:
        ht = SignedGradedDim.from_text(d["ht"], Convention.HODGE_TATE)
        frob = {k: SignedGradedDim.from_text(v, Convention.FROBENIUS) for k, v in d.get("frob", {}).items()}
        return H1Profile(ht, frob)

    try:
        if "by_m" in data:
            return {int(k): one(v) for k, v in data["by_m"].items()}
        if m is None:
            raise ConfigError("a single-m hodge profile needs --m")
        return {m: one(data)}
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed hodge profile: {exc}") from None


def _admissible(spec: str) -> Optional[Callable[[int], bool]]:
    if spec == "all":
        return None
    if spec == "even":
        return lambda n: n % 2 == 0
    if spec == "odd":
        return lambda n: n % 2 == 1
    try:
        allowed = {int(x) for x in spec.split(",")}
    except ValueError:
        raise ConfigError(f"admissible must be all, even, odd or a comma list, got {spec!r}") from None
    return allowed.__contains__


def _setup(cfg: RunConfig):
    places = parse_places(cfg.places) if cfg.places else None
    profiles = load_hodge_profiles(cfg.hodge_profile, cfg.m) if cfg.hodge_profile else {}
    if cfg.hodge_mode == "exact" and not profiles:
        raise ConfigError("exact hodge mode needs --hodge-profile")
    return make_setup(cfg.genus, cfg.gprime, places, profiles)


# ---------------------------------------------------------------------------
# output helpers


def _emit(cfg_output: str, payload: dict, text_lines: list[str]) -> None:
    if cfg_output == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2))
    else:
        print("\n".join(text_lines))


def _report_lines(rep) -> list[str]:
    params = " ".join(f"{k}={v}" for k, v in rep.params.items() if not isinstance(v, list))
    lines = [f"case: {rep.case}  {params}"]
    width = max(len(t.name) for t in rep.lhs_terms)
    for t in rep.lhs_terms:
        lines.append(f"  {t.name:<{width}} = {t.value}   ({t.provenance})")
    if rep.layers:
        lines.append("  layers: k'  total  h2_local  sha  minus  bound")
        for lb in rep.layers:
            lines.append(
                f"          {lb.kprime}  {lb.layer_total}  {lb.h2_local_total}  {lb.sha_term}  "
                f"{lb.minus_dim}  {lb.layer_bound}"
            )
    rel = "<" if rep.holds else ">="
    lines.append(f"lhs = {rep.lhs_total} {rel} rhs = {rep.rhs}: {'HOLDS' if rep.holds else 'FAILS'}")
    for label in rep.mode_labels:
        lines.append(f"  mode: {label}")
    return lines


# ---------------------------------------------------------------------------
# subcommands


def cmd_witt(args, cfg: RunConfig) -> int:
    t, s = args.t, args.s
    if t < 0 or s < 1:
        raise ConfigError("witt needs t >= 0 and s >= 1")
    value = witt(t, s)
    try:
        oracle = lyndon_count(t, s, args.oracle_budget)
    except OracleBudgetExceeded:
        oracle = None
    agree = None if oracle is None else oracle == value
    if oracle is None:
        tag = "[oracle: skipped]"
    else:
        tag = f"[oracle: {oracle} {'✓' if agree else '✗'}]"
    _emit(cfg.output, {"command": "witt", "t": t, "s": s, "value": value, "oracle": oracle, "agree": agree},
          [f"d_{t}({s}) = {value} {tag}"])
    return EXIT_FALSE if agree is False else EXIT_OK


def _parse_profile_arg(text: str, convention: Convention):
    try:
        if "(" in text:
            return SignedGradedDim.from_text(text, convention)
        return GradedDim.from_text(text, convention)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def cmd_graded_witt(args, cfg: RunConfig) -> int:
    conv = Convention(args.convention)
    gen = _parse_profile_arg(args.profile, conv)
    if args.n < 1:
        raise ConfigError("n must be >= 1")
    graded = graded_witt(gen.graded if isinstance(gen, SignedGradedDim) else gen, args.n)
    trace = lie_sigma_trace(gen.total(), gen.trace(), args.n) if isinstance(gen, SignedGradedDim) else None
    try:
        orc = lyndon_profile(gen, args.n, args.oracle_budget)
    except OracleBudgetExceeded:
        orc = None
    agree = None
    if orc is not None:
        agree = orc.graded == graded and (trace is None or orc.trace == trace)
    lines = [f"graded_witt({gen.to_text()}, {args.n}) = {graded.to_text()}  total {graded.total()}"]
    if trace is not None:
        lines.append(f"involution trace = {trace}")
    lines.append("[oracle: skipped]" if orc is None else f"[oracle: {orc.graded.to_text()} {'✓' if agree else '✗'}]")
    _emit(cfg.output, {
        "command": "graded-witt", "generators": gen.to_text(), "n": args.n, "profile": graded.to_text(),
        "total": graded.total(), "trace": trace, "agree": agree,
    }, lines)
    return EXIT_FALSE if agree is False else EXIT_OK


def cmd_profile(args, cfg: RunConfig) -> int:
    if cfg.m is None or cfg.m < 1:
        raise ConfigError("profile needs --m >= 1")
    m = cfg.m
    if args.a is not None:
        rep = FundamentalRep(cfg.gprime, {"l": args.a})
        frob = sym_frob_grading(rep, "l", m)
        frob_kind = f"l-adic bad (a={args.a})"
    else:
        rep = FundamentalRep(cfg.gprime)
        frob = sym_pure_grading(rep, m)
        frob_kind = "l-adic good (pure)"
    ht = sym_ht_grading(rep, m)
    tr = sym_sigma_trace(rep, m)
    lines = [
        f"Sym^{m} V, g' = {cfg.gprime}, dim = {ht.total()}",
        f"  hodge-tate: {ht.to_text()}  total {ht.total()}  max-entry ratio {max_entry_ratio(ht)}",
        f"  frobenius [{frob_kind}]: {frob.to_text()}  total {frob.total()}  max-entry ratio {max_entry_ratio(frob)}",
        f"  conjugation trace {tr}: plus {(ht.total() + tr) // 2}, minus {(ht.total() - tr) // 2}",
    ]
    _emit(cfg.output, {
        "command": "profile", "gprime": cfg.gprime, "m": m, "a": args.a,
        "hodge_tate": ht.to_text(), "frobenius": frob.to_text(), "total": ht.total(),
        "ht_max_entry_ratio": str(max_entry_ratio(ht)), "frob_max_entry_ratio": str(max_entry_ratio(frob)),
        "sigma_trace": tr,
    }, lines)
    return EXIT_OK


def cmd_generator(args, cfg: RunConfig) -> int:
    cfg.validate(("genus", "m"), odd_m=True)
    setup = _setup(cfg)
    gen = build_generator_space(setup, cfg.m, cfg.hodge_mode)
    lines = [
        f"U_0 = H^1* (x) Sym^{cfg.m} V: total {gen.total} = {gen.h1_dim} x {gen.sym_dim}",
        f"  conjugation: trace {gen.trace}, plus {gen.plus}, minus {gen.minus}",
        f"  F^0 base dim {f0_base_dim(gen)}",
        f"  hodge-tate profile {gen.profile_ht.graded.to_text()}",
    ]
    for name, prof in gen.profile_frob.items():
        lines.append(f"  frobenius profile at {name}: {prof.graded.to_text()}")
    lines.append(f"  mode: {gen.mode_label}")
    _emit(cfg.output, {
        "command": "generator", "m": cfg.m, "total": gen.total, "h1_dim": gen.h1_dim, "sym_dim": gen.sym_dim,
        "trace": gen.trace, "f0_base": f0_base_dim(gen), "profile_ht": gen.profile_ht.to_text(),
        "profile_frob": {k: v.to_text() for k, v in gen.profile_frob.items()}, "modes": [gen.mode_label],
    }, lines)
    return EXIT_OK


def cmd_selmer_bound(args, cfg: RunConfig) -> int:
    cfg.validate(("genus", "m", "k"), odd_m=True)
    setup = _setup(cfg)
    gen = build_generator_space(setup, cfg.m, cfg.hodge_mode)
    rep = selmer_upper_bound(setup, gen, cfg.k, cfg.bk, cfg.minus_mode)
    lines = [f"Selmer bound for U_(k={cfg.k}, m={cfg.m}): {rep.total_bound}"]
    lines.append("  k'  total  h2_local  sha  minus  bound")
    for lb in rep.per_layer:
        lines.append(f"  {lb.kprime}  {lb.layer_total}  {lb.h2_local_total}  {lb.sha_term}  {lb.minus_dim}  {lb.layer_bound}")
    lines += [f"  mode: {x}" for x in rep.mode_labels]
    _emit(cfg.output, {
        "command": "selmer-bound", "k": cfg.k, "m": cfg.m, "total_bound": rep.total_bound,
        "bk_assumed": rep.bk_assumed, "per_layer": [lb.to_dict() for lb in rep.per_layer],
        "modes": list(rep.mode_labels),
    }, lines)
    return EXIT_OK


def cmd_check(args, cfg: RunConfig) -> int:
    if cfg.case == "modular":
        cfg.validate(("n", "num_T"))
        rep = check_modular(cfg.n, cfg.num_T)
    else:
        cfg.validate(("genus", "m", "k"), odd_m=True)
        if not cfg.bk:
            raise ConfigError("genus2 checks are conditional on Bloch-Kato: pass --bk")
        rep = check_genus2(_setup(cfg), cfg.k, cfg.m, cfg.modes(), bk=True)
    if cfg.output == "json":
        print(json.dumps(rep.to_dict(), sort_keys=True, indent=2))
    else:
        print("\n".join(_report_lines(rep)))
    return EXIT_OK if rep.holds else EXIT_FALSE


def cmd_search(args, cfg: RunConfig) -> int:
    if cfg.case == "modular":
        cfg.validate(("num_T",))
        try:
            n = search_modular(cfg.num_T, _admissible(cfg.admissible), cfg.budget_n)
        except SearchExhausted as exc:
            _emit(cfg.output, {"command": "search", "case": "modular", "witness": None,
                               "largest_attempted": cfg.budget_n}, [f"exhausted: {exc}"])
            return EXIT_FALSE
        _emit(cfg.output, {"command": "search", "case": "modular", "num_T": cfg.num_T, "witness": n},
              [f"minimal n = {n}"])
        return EXIT_OK
    cfg.validate(("genus",))
    if not cfg.bk:
        raise ConfigError("genus2 searches are conditional on Bloch-Kato: pass --bk")
    res = search_genus2(_setup(cfg), cfg.budget_k, cfg.budget_m, cfg.modes(), bk=True)
    trail = [
        {"k": r.params["k"], "m": r.params["m"], "lhs_total": r.lhs_total, "rhs": r.rhs, "holds": r.holds}
        for r in res.reports
    ]
    payload = {
        "command": "search", "case": "genus2",
        "witness": list(res.witness) if res.witness else None,
        "largest_attempted": list(res.largest_attempted) if res.largest_attempted else None,
        "trail": trail, "modes": res.reports[-1].mode_labels if res.reports else [],
    }
    if res.found:
        lines = [f"minimal (k, m) = {res.witness}  after {len(res.reports)} candidates"]
        lines += _report_lines(res.reports[-1])
        _emit(cfg.output, payload, lines)
        return EXIT_OK
    _emit(cfg.output, payload, [f"exhausted budget: largest attempted (k, m) = {res.largest_attempted}"])
    return EXIT_FALSE


def _oracle_profiles() -> list[SignedGradedDim]:
    """Signed generator profiles with total <= 4 and weights in [-3, 0]."""
    from itertools import combinations_with_replacement

    letters = [(w, s) for w in range(-3, 1) for s in (1, -1)]
    out = []
    for size in range(1, 5):
        for combo in combinations_with_replacement(letters, size):
            out.append(SignedGradedDim.from_letters(combo))
    return out


def run_oracle_suite(budget: int = DEFAULT_ORACLE_BUDGET, max_len: int = 6) -> list[tuple[str, bool]]:
    results = []
    ok = all(witt(t, s) == lyndon_count(t, s, budget) for t in range(1, 5) for s in range(1, 9))
    results.append(("witt vs Lyndon count (t<=4, s<=8)", ok))
    ok = True
    profiles = _oracle_profiles()
    for gen in profiles:
        for n in range(1, max_len + 1):
            orc = lyndon_profile(gen, n, budget)
            if orc.graded != graded_witt(gen.graded, n) or orc.trace != lie_sigma_trace(gen.total(), gen.trace(), n):
                ok = False
    results.append((f"graded/signed Witt vs Lyndon profile ({len(profiles)} profiles, n<={max_len})", ok))
    ok = True
    for g in range(1, 5):
        rep = FundamentalRep(g, {"l": g // 2})
        for m in range(1, 13):
            ok &= sym_power(rep.ht_profile(), m) == sym_ht_signed(rep, m)
            ok &= sym_power(rep.frob_profile("l").graded, m) == sym_frob_grading(rep, "l", m)
    results.append(("symmetric power closed forms vs monomial count (g'<=4, m<=12)", ok))
    return results


def cmd_oracle(args, cfg: RunConfig) -> int:
    results = run_oracle_suite(args.oracle_budget)
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results]
    _emit(cfg.output, {"command": "oracle", "results": [{"name": n, "pass": ok} for n, ok in results]}, lines)
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FALSE


# ---------------------------------------------------------------------------
# argument parsing


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seedless", action="store_true", help="accepted for scripts; every computation is deterministic")
    p.add_argument("--config", help="flat key = value file with RunConfig fields; flags override it")
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)


def _curve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--genus", type=int)
    p.add_argument("--gprime", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--places", help="e.g. p:p,l:good,q:bad:1")
    p.add_argument("--f0-mode", choices=("paper-rule", "graded-witt"))
    p.add_argument("--minus-mode", choices=("paper-bound", "exact-trace"))
    p.add_argument("--hodge-mode", choices=("heuristic", "exact"))
    p.add_argument("--hodge-profile", help="JSON file with H^1 profiles (implies --hodge-mode exact)")
    p.add_argument("--parabolic-dim", type=int, help="use this dim F^0 R instead of dim R")
    p.add_argument("--bk", action="store_true", default=None, help="assume the Bloch-Kato conjecture")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcdim", description="Exact dimension counts and Selmer bounds for relative-completion quotients.")
    parser.add_argument("--version", action="version", version=f"rcdim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witt", help="Witt formula with Lyndon-word check")
    _common(p)
    p.add_argument("t", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("graded-witt", help="weight profile of a free Lie component")
    _common(p)
    p.add_argument("profile", help="generator profile, e.g. '{-1:1, -2:1}' or '{0:(2,0)}'")
    p.add_argument("n", type=int)
    p.add_argument("--convention", choices=[c.value for c in Convention], default="hodge-tate")
    p.set_defaults(func=cmd_graded_witt)

    p = sub.add_parser("profile", help="grading profiles of Sym^m V")
    _common(p)
    p.add_argument("--gprime", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int, help="a-parameter of a bad l-adic place")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("generator", help="generator space U_0 of U_m")
    _common(p)
    _curve_args(p)
    p.set_defaults(func=cmd_generator)

    p = sub.add_parser("selmer-bound", help="layer-by-layer Selmer bound")
    _common(p)
    _curve_args(p)
    p.set_defaults(func=cmd_selmer_bound)

    for name, func, helptext in (("check", cmd_check, "evaluate the dimension inequality"),
                                 ("search", cmd_search, "search for the smallest witness")):
        p = sub.add_parser(name, help=helptext)
        _common(p)
        p.add_argument("case", choices=("genus2", "modular"))
        _curve_args(p)
        p.add_argument("--n", type=int, help="Eisenstein index (modular)")
        p.add_argument("--T", dest="num_T", type=int, help="#T, counting p (modular)")
        p.add_argument("--budget-k", type=int)
        p.add_argument("--budget-m", type=int)
        p.add_argument("--budget-n", type=int)
        p.add_argument("--admissible", help="all, even, odd or a comma list of n (modular search)")
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", help="run every formula against its enumeration oracle")
    _common(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def _config_from(args) -> RunConfig:
    values: dict = {}
    if getattr(args, "config", None):
        values.update(load_config_file(args.config))
    for f in fields(RunConfig):
        v = getattr(args, f.name, None)
        if v is not None:
            values[f.name] = v
    if getattr(args, "json", False):
        values["output"] = "json"
    if values.get("hodge_profile") and "hodge_mode" not in values:
        values["hodge_mode"] = "exact"
    cfg = RunConfig(**values)
    cfg.validate()
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        cfg = _config_from(args)
        return args.func(args, cfg)
    except (ConfigError, BlochKatoRequired, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"rcdim: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
