"""The dimension inequality

    dim H^1_f(G_T, U^et) + dim F^0 U^dR + dim R^dR < dim U^dR

for the genus >= 2 quotients U_{k,m} and for the Eisenstein quotient U_n of
a modular curve, plus searches for the smallest parameters where it holds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from .freelie import witt
from .selmer import (
    F0_MODES,
    HODGE_MODES,
    MINUS_MODES,
    CurveSetup,
    LayerBound,
    build_generator_space,
    eisenstein_generator_space,
    f0_layer_dim,
    f0_base_dim,
    layer_total,
    selmer_upper_bound,
)

__all__ = [
    "SCHEMA",
    "Modes",
    "Term",
    "InequalityReport",
    "SearchExhausted",
    "Genus2SearchResult",
    "reductive_dim",
    "check_genus2",
    "check_modular",
    "search_modular",
    "search_genus2",
    "per_layer_margins",
    "witt_rhs",
]

SCHEMA = "rcdim/1"


class SearchExhausted(RuntimeError):
    """No admissible parameter below the search ceiling satisfies the inequality."""


@dataclass(frozen=True)
class Modes:
    f0: str = "paper-rule"
    minus: str = "paper-bound"
    hodge: str = "heuristic"
    # "full" uses dim R; "parabolic" uses a user-supplied dim F^0 R
    reductive: str = "full"
    parabolic_dim: Optional[int] = None

    def __post_init__(self):
        if self.f0 not in F0_MODES:
            raise ValueError(f"f0 mode must be one of {F0_MODES}, got {self.f0!r}")
        if self.minus not in MINUS_MODES:
            raise ValueError(f"minus mode must be one of {MINUS_MODES}, got {self.minus!r}")
        if self.hodge not in HODGE_MODES:
            raise ValueError(f"hodge mode must be one of {HODGE_MODES}, got {self.hodge!r}")
        if self.reductive not in ("full", "parabolic"):
            raise ValueError(f"reductive mode must be 'full' or 'parabolic', got {self.reductive!r}")
        if self.reductive == "parabolic" and (self.parabolic_dim is None or self.parabolic_dim < 0):
            raise ValueError("parabolic reductive mode needs a nonnegative parabolic_dim")


@dataclass(frozen=True)
class Term:
    name: str
    value: int
    provenance: str = ""


@dataclass
class InequalityReport:
    case: str
    params: dict
    lhs_terms: list[Term]
    lhs_total: int
    rhs: int
    holds: bool
    mode_labels: list[str] = field(default_factory=list)
    layers: list[LayerBound] = field(default_factory=list)

    def __post_init__(self):
        if self.lhs_total != sum(t.value for t in self.lhs_terms):
            raise AssertionError("lhs_total is not the sum of the lhs terms")
        if self.holds != (self.lhs_total < self.rhs):
            raise AssertionError("holds flag disagrees with lhs_total < rhs")

    def term(self, name: str) -> int:
        for t in self.lhs_terms:
            if t.name == name:
                return t.value
        raise KeyError(name)

    @property
    def margin(self) -> int:
        return self.rhs - self.lhs_total

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "case": self.case,
            "params": dict(self.params),
            "lhs_terms": [{"name": t.name, "value": t.value, "provenance": t.provenance} for t in self.lhs_terms],
            "lhs_total": self.lhs_total,
            "rhs": self.rhs,
            "holds": self.holds,
            "modes": list(self.mode_labels),
            "layers": [lb.to_dict() for lb in self.layers],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InequalityReport":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {d.get('schema')!r}")
        return cls(
            case=d["case"],
            params=dict(d["params"]),
            lhs_terms=[Term(t["name"], t["value"], t.get("provenance", "")) for t in d["lhs_terms"]],
            lhs_total=d["lhs_total"],
            rhs=d["rhs"],
            holds=d["holds"],
            mode_labels=list(d.get("modes", [])),
            layers=[LayerBound.from_dict(x) for x in d.get("layers", [])],
        )

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> "InequalityReport":
        return cls.from_dict(json.loads(text))


def reductive_dim(gprime: int) -> int:
    """dim Sp(2g') = g'(2g'+1); SL_2 = Sp_2 has dimension 3."""
    if gprime < 1:
        raise ValueError(f"gprime must be >= 1, got {gprime}")
    return gprime * (2 * gprime + 1)


def check_genus2(setup: CurveSetup, k: int, m: int, modes: Modes = Modes(), bk: bool = False) -> InequalityReport:
    """Evaluate the inequality for U_{k,m}, k even and m odd."""
    if k < 0 or k % 2:
        raise ValueError(f"k must be even, got {k}")
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be a positive odd integer, got {m}")
    gen = build_generator_space(setup, m, modes.hodge)
    selmer = selmer_upper_bound(setup, gen, k, bk, modes.minus)

    f0_chosen = 0
    f0_other = 0
    other = "graded-witt" if modes.f0 == "paper-rule" else "paper-rule"
    for kp in range(k + 1):
        f0_chosen += f0_layer_dim(gen, kp, modes.f0)
        f0_other += f0_layer_dim(gen, kp, other)
    if modes.reductive == "full":
        red = Term("reductive_term", reductive_dim(setup.rep.gprime), "dim Sp(2g')")
    else:
        red = Term("reductive_term", modes.parabolic_dim, "user-supplied dim F^0 R")
    terms = [
        Term("selmer_bound", selmer.total_bound, "sum over layers of local H^2 + Sha^2 + minus eigenspace"),
        Term("f0_unipotent", f0_chosen, f"F^0 count, {modes.f0}"),
        red,
    ]
    rhs = sum(layer_total(gen, kp) for kp in range(k + 1))
    labels = list(selmer.mode_labels) + [f"f0: {modes.f0}", f"reductive: {modes.reductive}"]
    if f0_other != f0_chosen:
        labels.append(f"f0-disagreement: {modes.f0}={f0_chosen} {other}={f0_other}")
    lhs = sum(t.value for t in terms)
    params = {
        "genus": setup.genus,
        "gprime": setup.rep.gprime,
        "k": k,
        "m": m,
        "num_T": setup.num_T,
        "places": [pl.describe() for pl in setup.places_T],
        "generator_total": gen.total,
        "f0_base": f0_base_dim(gen),
    }
    return InequalityReport("genus2", params, terms, lhs, rhs, lhs < rhs, labels, list(selmer.per_layer))


def check_modular(n: int, num_T: int) -> InequalityReport:
    """Evaluate the inequality for the Eisenstein quotient U_n = (Sym^2n V)(2n+1).

    F^0 U_n^dR = 0 and dim SL_2 = 3, so this is
    dim H^1(G_T, U_n) + 3 < 2n + 1 with H^1 bounded by #T + (n + 1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if num_T < 2:
        raise ValueError(f"#T counts S and p, so it must be >= 2, got {num_T}")
    gen = eisenstein_generator_space(n, num_T=num_T)
    selmer = selmer_upper_bound(None, gen, 0, True, "exact-trace")
    layer = selmer.per_layer[0]
    if layer.minus_dim != n + 1 or layer.h2_local_total != num_T:
        raise AssertionError(f"Eisenstein assembly off: minus={layer.minus_dim}, h2={layer.h2_local_total}")
    rhs = layer_total(gen, 0)
    if rhs != 2 * n + 1:
        raise AssertionError(f"dim U_n = {rhs}, expected {2 * n + 1}")
    terms = [
        Term("selmer_bound", selmer.total_bound, "#T local terms (each <= 1) + dim U_n^- = n+1"),
        Term("f0_unipotent", f0_layer_dim(gen, 0), "F^0 U_n = 0"),
        Term("reductive_term", reductive_dim(1), "dim SL_2"),
    ]
    lhs = sum(t.value for t in terms)
    params = {"n": n, "num_T": num_T, "dim_U": rhs, "minus_dim": layer.minus_dim}
    labels = list(selmer.mode_labels)
    return InequalityReport("modular", params, terms, lhs, rhs, lhs < rhs, labels, list(selmer.per_layer))


def search_modular(
    num_T: int,
    admissible: Optional[Callable[[int], bool]] = None,
    ceiling: int = 10_000,
) -> int:
    """Smallest admissible n for which the modular inequality holds."""
    for n in range(1, ceiling + 1):
        if admissible is not None and not admissible(n):
            continue
        if check_modular(n, num_T).holds:
            return n
    raise SearchExhausted(f"no admissible n <= {ceiling} satisfies the inequality for #T = {num_T}")


@dataclass
class Genus2SearchResult:
    witness: Optional[tuple[int, int]]  # (k, m)
    reports: list[InequalityReport]
    largest_attempted: Optional[tuple[int, int]]

    @property
    def found(self) -> bool:
        return self.witness is not None


def search_genus2(
    setup: CurveSetup,
    k_max: int,
    m_max: int,
    modes: Modes = Modes(),
    bk: bool = False,
) -> Genus2SearchResult:
    """Scan odd m ascending, then even k ascending; return the first (k, m) where the inequality holds."""
    reports: list[InequalityReport] = []
    last = None
    for m in range(1, m_max + 1, 2):
        for k in range(0, k_max + 1, 2):
            rep = check_genus2(setup, k, m, modes, bk)
            reports.append(rep)
            last = (k, m)
            if rep.holds:
                return Genus2SearchResult((k, m), reports, last)
    return Genus2SearchResult(None, reports, last)


def per_layer_margins(report: InequalityReport) -> list[int]:
    """layer_total - (layer Selmer bound) for each layer of a genus2 report.

    F^0 is not split per layer in the report, so it is left out here.
    """
    return [lb.layer_total - lb.layer_bound for lb in report.layers]


def witt_rhs(gen_total: int, k: int) -> int:
    """dim U_{k} computed straight from the Witt formula on the generator total."""
    return sum(witt(gen_total, kp + 1) for kp in range(k + 1))
