"""Cohomological dimension bounds for finite-type quotients of the unipotent radical.

The generator space of the quotient attached to Sym^m V is

    U_0 = H^1(X, Sym^m V)^* (x) Sym^m V,

and the quotient's Lie algebra is free on U_0, so its descending central
series layers ``Gr_k'`` are the degree ``k'+1`` free Lie components. For
each layer the Euler characteristic formula gives

    dim H^1(G_T, Gr_k') = dim H^2(G_T, Gr_k') + dim Gr_k'^-,

and H^2 is bounded by the local terms ``dim Gr_0^v (Gr_k')^*(1)`` over
``v`` in T plus Sha^2, which vanishes under Bloch-Kato. Everything is
computed exactly from weight profiles; no asymptotic constants appear.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Union

from .exactmath import binom, exact_div
from .freelie import graded_witt, lie_sigma_trace, witt
from .graded import (
    Convention,
    FundamentalRep,
    GradedDim,
    SignedGradedDim,
    sym_frob_signed,
    sym_ht_signed,
    sym_pure_signed,
)

__all__ = [
    "PlaceKind",
    "Place",
    "H1Profile",
    "CurveSetup",
    "GeneratorSpace",
    "LayerBound",
    "SelmerBoundReport",
    "BlochKatoRequired",
    "F0_MODES",
    "MINUS_MODES",
    "HODGE_MODES",
    "make_setup",
    "build_generator_space",
    "eisenstein_generator_space",
    "f0_from_factors",
    "f0_base_dim",
    "f0_layer_dim",
    "f0_layer_from_profile",
    "local_h2_bound",
    "minus_dim",
    "layer_total",
    "selmer_upper_bound",
]

F0_MODES = ("paper-rule", "graded-witt")
MINUS_MODES = ("paper-bound", "exact-trace")
HODGE_MODES = ("heuristic", "exact")


class BlochKatoRequired(ValueError):
    """A finite Selmer bound was requested without assuming Bloch-Kato."""


class PlaceKind(str, enum.Enum):
    P_ADIC = "p-adic"
    GOOD = "l-adic-good"
    BAD = "l-adic-bad"


@dataclass(frozen=True)
class Place:
    name: str
    kind: PlaceKind
    a: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", PlaceKind(self.kind))
        if self.kind is not PlaceKind.BAD and self.a is not None:
            raise ValueError(f"place {self.name}: only bad places take an a-parameter")

    @property
    def is_ladic(self) -> bool:
        return self.kind is not PlaceKind.P_ADIC

    def describe(self) -> str:
        if self.kind is PlaceKind.BAD:
            return f"{self.name}:bad:{self.a}"
        return f"{self.name}:{'p' if self.kind is PlaceKind.P_ADIC else 'good'}"


@dataclass(frozen=True)
class H1Profile:
    """User-supplied weight profiles of H^1(X, Sym^m V) for one m.

    ``ht`` is the Hodge-Tate profile (required); ``frob`` optionally gives
    Frobenius profiles per l-adic place name. Missing Frobenius profiles
    default to pure weight m+1.
    """

    ht: SignedGradedDim
    frob: Mapping[str, SignedGradedDim] = field(default_factory=dict)

    def __post_init__(self):
        if self.ht.convention is not Convention.HODGE_TATE:
            raise ValueError("H1Profile.ht must be in the Hodge-Tate convention")
        for name, prof in self.frob.items():
            if prof.convention is not Convention.FROBENIUS:
                raise ValueError(f"H1Profile.frob[{name!r}] must be in the Frobenius convention")
            if prof.total() != self.ht.total():
                raise ValueError(f"H1Profile.frob[{name!r}] has a different total than ht")


@dataclass(frozen=True)
class CurveSetup:
    """The curve X (by genus), the fundamental representation and the places T.

    ``h1_profiles`` maps m to a user-supplied H1Profile (exact Hodge mode).
    """

    genus: Optional[int]
    rep: FundamentalRep
    places_T: tuple[Place, ...]
    h1_profiles: Mapping[int, H1Profile] = field(default_factory=dict)
    modular: bool = False

    def __post_init__(self):
        object.__setattr__(self, "places_T", tuple(self.places_T))
        names = [p.name for p in self.places_T]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate place names in T: {names}")
        n_p = sum(p.kind is PlaceKind.P_ADIC for p in self.places_T)
        if n_p != 1:
            raise ValueError(f"T must contain exactly one p-adic place, found {n_p}")
        if not self.modular and (self.genus is None or self.genus < 2):
            raise ValueError(f"hyperbolic setups need genus >= 2, got {self.genus}")
        for p in self.places_T:
            if p.kind is PlaceKind.BAD and p.name not in self.rep.ladic_a:
                raise ValueError(f"bad place {p.name!r} has no a-parameter in the representation")

    @property
    def num_T(self) -> int:
        return len(self.places_T)

    def place(self, name: str) -> Place:
        for p in self.places_T:
            if p.name == name:
                return p
        raise KeyError(f"no place named {name!r} in T")


def make_setup(
    genus: Optional[int],
    gprime: int,
    places: Optional[Sequence[Place]] = None,
    h1_profiles: Optional[Mapping[int, H1Profile]] = None,
    modular: bool = False,
) -> CurveSetup:
    """Build a CurveSetup, deriving the representation's a-parameters from the places.

    Default T is one p-adic place ``p`` and one good l-adic place ``l``.
    Bad places without an a-parameter get a = 0, with a warning.
    """
    if places is None:
        places = (Place("p", PlaceKind.P_ADIC), Place("l", PlaceKind.GOOD))
    fixed = []
    for pl in places:
        if pl.kind is PlaceKind.BAD and pl.a is None:
            warnings.warn(f"bad place {pl.name!r} has no a-parameter; using a = 0", stacklevel=2)
            pl = Place(pl.name, PlaceKind.BAD, 0)
        fixed.append(pl)
    rep = FundamentalRep(gprime, {pl.name: pl.a for pl in fixed if pl.kind is PlaceKind.BAD})
    return CurveSetup(genus, rep, tuple(fixed), dict(h1_profiles or {}), modular)


@dataclass(frozen=True)
class GeneratorSpace:
    """U_0 = H^1* (x) Sym^m V with its weight profiles.

    ``profile_ht`` is the Hodge-Tate profile of U_0 (used at p and for F^0);
    ``profile_frob`` maps each l-adic place to the Frobenius profile of U_0.
    ``h1_ht`` and ``sym_ht`` keep the two Hodge-Tate tensor factors.
    """

    m: int
    profile_ht: SignedGradedDim
    profile_frob: Mapping[str, SignedGradedDim]
    total: int
    h1_dim: int
    sym_dim: int
    h1_ht: SignedGradedDim
    sym_ht: SignedGradedDim
    places: tuple[Place, ...]
    hodge_mode: str
    kind: str = "hyperbolic"

    @property
    def trace(self) -> int:
        return self.profile_ht.trace()

    @property
    def plus(self) -> int:
        return self.profile_ht.plus()

    @property
    def minus(self) -> int:
        return self.profile_ht.minus()

    @property
    def mode_label(self) -> str:
        if self.kind == "eisenstein":
            return "generator: eisenstein quotient"
        if self.hodge_mode == "heuristic":
            return "hodge: heuristic (H^1 split evenly over HT weights 0 and m+1)"
        return "hodge: exact (rigorous given the supplied H^1 profile)"


@lru_cache(maxsize=None)
def _sym_frob_cached(gprime: int, kind: PlaceKind, a: Optional[int], m: int) -> SignedGradedDim:
    if kind is PlaceKind.GOOD:
        return sym_pure_signed(FundamentalRep(gprime), m)
    return sym_frob_signed(FundamentalRep(gprime, {"_": a}), "_", m)


@lru_cache(maxsize=None)
def _sym_ht_cached(gprime: int, m: int) -> SignedGradedDim:
    return sym_ht_signed(FundamentalRep(gprime), m)


@lru_cache(maxsize=1024)
def _dual_tensor(h1: SignedGradedDim, sym: SignedGradedDim) -> SignedGradedDim:
    return h1.dual().tensor(sym)


def _assemble(
    rep: FundamentalRep,
    m: int,
    h1_ht: SignedGradedDim,
    h1_frob: Mapping[str, SignedGradedDim],
    places: Sequence[Place],
    hodge_mode: str,
    kind: str,
) -> GeneratorSpace:
    sym_ht = _sym_ht_cached(rep.gprime, m)
    profile_ht = _dual_tensor(h1_ht, sym_ht)
    sym_dim = sym_ht.total()
    total = h1_ht.total() * sym_dim
    profile_frob = {}
    for pl in places:
        if not pl.is_ladic:
            continue
        sym_f = _sym_frob_cached(rep.gprime, pl.kind, pl.a, m)
        prof = _dual_tensor(h1_frob[pl.name], sym_f)
        if pl.kind is PlaceKind.GOOD and prof.graded.weights and max(prof.graded.weights) > -1:
            raise ValueError(
                f"good place {pl.name!r}: generator Frobenius weights must be negative, "
                f"got {prof.graded.to_text()}"
            )
        profile_frob[pl.name] = prof
    for name, prof in [("ht", profile_ht), *profile_frob.items()]:
        if prof.total() != total:
            raise AssertionError(f"generator profile {name} has total {prof.total()}, expected {total}")
    return GeneratorSpace(
        m=m,
        profile_ht=profile_ht,
        profile_frob=profile_frob,
        total=total,
        h1_dim=h1_ht.total(),
        sym_dim=sym_dim,
        h1_ht=h1_ht,
        sym_ht=sym_ht,
        places=tuple(places),
        hodge_mode=hodge_mode,
        kind=kind,
    )


def build_generator_space(setup: CurveSetup, m: int, hodge: str = "heuristic") -> GeneratorSpace:
    """Generator space of the quotient attached to Sym^m V, m odd.

    Heuristic mode takes dim H^1 = (2g-2) dim Sym^m V (compact curve), split
    evenly between Hodge-Tate weights 0 and m+1 with zero conjugation trace
    in each, and pure of Frobenius weight m+1 at every l-adic place. Exact
    mode reads H^1 from ``setup.h1_profiles[m]``.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be a positive odd integer, got {m}")
    if hodge not in HODGE_MODES:
        raise ValueError(f"unknown hodge mode {hodge!r}")
    rep = setup.rep
    sym_dim = binom(m + rep.dim - 1, rep.dim - 1)
    if hodge == "heuristic":
        if setup.genus is None:
            raise ValueError("heuristic Hodge mode needs a genus")
        h1_dim = (2 * setup.genus - 2) * sym_dim
        half = h1_dim // 2
        h1_ht = SignedGradedDim({0: (half, 0), m + 1: (half, 0)}, Convention.HODGE_TATE)
        h1_frob = {
            pl.name: SignedGradedDim({m + 1: (h1_dim, 0)}, Convention.FROBENIUS)
            for pl in setup.places_T
            if pl.is_ladic
        }
    else:
        try:
            given = setup.h1_profiles[m]
        except KeyError:
            raise ValueError(f"exact Hodge mode needs a supplied H^1 profile for m = {m}") from None
        h1_ht = given.ht
        h1_frob = {}
        for pl in setup.places_T:
            if pl.is_ladic:
                h1_frob[pl.name] = given.frob.get(
                    pl.name, SignedGradedDim({m + 1: (h1_ht.total(), h1_ht.trace())}, Convention.FROBENIUS)
                )
    return _assemble(rep, m, h1_ht, h1_frob, setup.places_T, hodge, "hyperbolic")


def eisenstein_places(num_T: int) -> tuple[Place, ...]:
    """Default T for the modular case: p plus num_T - 1 l-adic places.

    The l-adic places are modelled as bad with a = 1 (V mixed of weights 0
    and 2), the case in which the local bound of 1 is attained.
    """
    if num_T < 2:
        raise ValueError(f"T = S + {{p}} needs at least 2 places, got {num_T}")
    return (Place("p", PlaceKind.P_ADIC),) + tuple(Place(f"l{i}", PlaceKind.BAD, 1) for i in range(1, num_T))


def eisenstein_generator_space(n: int, places: Optional[Sequence[Place]] = None, num_T: int = 2) -> GeneratorSpace:
    """The Eisenstein quotient (Sym^2n V)(2n+1) as a one-layer generator space.

    Written as H^1-line^* (x) Sym^2n V with the Eisenstein line Q_p(-2n-1):
    Hodge-Tate weight 2n+1, Frobenius weight 4n+2, conjugation sign -1.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if places is None:
        places = eisenstein_places(num_T)
    rep = FundamentalRep(1, {pl.name: pl.a for pl in places if pl.kind is PlaceKind.BAD})
    CurveSetup(None, rep, tuple(places), modular=True)  # validates T
    h1_ht = SignedGradedDim({2 * n + 1: (1, -1)}, Convention.HODGE_TATE)
    line = SignedGradedDim({4 * n + 2: (1, -1)}, Convention.FROBENIUS)
    h1_frob = {pl.name: line for pl in places if pl.is_ladic}
    return _assemble(rep, 2 * n, h1_ht, h1_frob, places, "exact", "eisenstein")


# ---------------------------------------------------------------------------
# the individual terms


@lru_cache(maxsize=1024)
def f0_from_factors(h1_ht: GradedDim, sym_ht: GradedDim) -> int:
    """sum_j dim Gr_j H^1 * dim Gr_{-j} Sym^{-m} V: weight 0 of H^1 (x) dual(Sym^m V)."""
    return h1_ht.tensor(sym_ht.dual())[0]


def f0_base_dim(gen: GeneratorSpace) -> int:
    return f0_from_factors(gen.h1_ht.graded, gen.sym_ht.graded)


def f0_layer_from_profile(profile: GradedDim, kprime: int, mode: str = "paper-rule") -> int:
    """F^0 count of layer k' of the free Lie algebra on a Hodge-Tate profile.

    ``paper-rule`` counts brackets of length k'+1 on the weight-0 generators
    only; ``graded-witt`` reads weight 0 off the full graded Witt profile.
    """
    if kprime < 0:
        raise ValueError(f"k' must be >= 0, got {kprime}")
    if mode == "paper-rule":
        return witt(profile[0], kprime + 1)
    if mode == "graded-witt":
        return graded_witt(profile, kprime + 1)[0]
    raise ValueError(f"unknown f0 mode {mode!r}")


def f0_layer_dim(gen: GeneratorSpace, kprime: int, mode: str = "paper-rule") -> int:
    if kprime == 0:
        return f0_base_dim(gen)
    return f0_layer_from_profile(gen.profile_ht.graded, kprime, mode)


def layer_total(gen: GeneratorSpace, kprime: int) -> int:
    return witt(gen.total, kprime + 1)


def _place_of(gen: GeneratorSpace, place: Union[str, Place]) -> Place:
    if isinstance(place, Place):
        return place
    for pl in gen.places:
        if pl.name == place:
            return pl
    raise KeyError(f"no place named {place!r}")


@lru_cache(maxsize=4096)
def _twisted_dual_weight0(profile: GradedDim, n: int) -> int:
    return graded_witt(profile, n).dual().twist(1)[0]


def local_h2_bound(gen: GeneratorSpace, place: Union[str, Place], kprime: int) -> int:
    """Upper bound dim Gr_0^v (Gr_k')^*(1) for dim H^2(G_v, Gr_k') (Tate local duality).

    Hodge-Tate grading at p, Frobenius weights at l. At good l-adic places
    the generators have negative weights, so for k' >= 2 the twisted dual of
    the layer has only positive weights and the bound is 0.
    """
    if kprime < 0:
        raise ValueError(f"k' must be >= 0, got {kprime}")
    pl = _place_of(gen, place)
    if pl.kind is PlaceKind.P_ADIC:
        prof = gen.profile_ht.graded
    else:
        prof = gen.profile_frob[pl.name].graded
    value = _twisted_dual_weight0(prof, kprime + 1)
    if pl.kind is PlaceKind.GOOD and kprime >= 2 and value:
        raise AssertionError(f"purity violated at {pl.name!r}, k' = {kprime}: {value}")
    return value


def minus_dim(gen: GeneratorSpace, kprime: int, mode: str = "paper-bound") -> int:
    """Dimension (or upper bound) of the -1 eigenspace of complex conjugation on layer k'.

    ``exact-trace`` uses the involution trace of the free Lie component.
    ``paper-bound``: at k' = 0 the generator's own eigenspace dimension, at
    even k' half the layer (valid when the generator trace is 0), otherwise
    the whole layer.
    """
    if kprime < 0:
        raise ValueError(f"k' must be >= 0, got {kprime}")
    n = kprime + 1
    total = witt(gen.total, n)
    if mode == "exact-trace":
        tr = lie_sigma_trace(gen.total, gen.trace, n)
        return exact_div(total - tr, 2, "minus eigenspace")
    if mode != "paper-bound":
        raise ValueError(f"unknown minus mode {mode!r}")
    if kprime == 0:
        return gen.minus
    if kprime % 2 == 0 and gen.trace == 0:
        return exact_div(total, 2, "halved layer")
    return total


@dataclass(frozen=True)
class LayerBound:
    kprime: int
    layer_total: int
    h2_local: tuple[tuple[str, int], ...]
    h2_local_total: int
    sha_term: int
    minus_dim: int
    layer_bound: int
    provenance: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "kprime": self.kprime,
            "layer_total": self.layer_total,
            "h2_local": [[n, v] for n, v in self.h2_local],
            "h2_local_total": self.h2_local_total,
            "sha_term": self.sha_term,
            "minus_dim": self.minus_dim,
            "layer_bound": self.layer_bound,
            "provenance": list(self.provenance),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LayerBound":
        return cls(
            kprime=d["kprime"],
            layer_total=d["layer_total"],
            h2_local=tuple((n, v) for n, v in d["h2_local"]),
            h2_local_total=d["h2_local_total"],
            sha_term=d["sha_term"],
            minus_dim=d["minus_dim"],
            layer_bound=d["layer_bound"],
            provenance=tuple(d.get("provenance", ())),
        )


@dataclass(frozen=True)
class SelmerBoundReport:
    per_layer: tuple[LayerBound, ...]
    total_bound: int
    bk_assumed: bool
    mode_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.total_bound != sum(lb.layer_bound for lb in self.per_layer):
            raise AssertionError("total bound is not the sum of the layer bounds")


def selmer_upper_bound(
    setup: Optional[CurveSetup],
    gen: GeneratorSpace,
    k: int,
    bk: bool,
    minus_mode: str = "paper-bound",
) -> SelmerBoundReport:
    """Upper bound on dim H^1(G_T, U_k), hence on dim H^1_f, layer by layer.

    Refuses to run without ``bk``: the vanishing of Sha^2 has no
    unconditional substitute.
    """
    if not bk:
        raise BlochKatoRequired(
            "unconditional bound unavailable: the Sha^2 term vanishes only under the "
            "Bloch-Kato conjecture (pass bk=True to assume it)"
        )
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    places = setup.places_T if setup is not None else gen.places
    layers = []
    for kp in range(k + 1):
        local = tuple((pl.name, local_h2_bound(gen, pl, kp)) for pl in places)
        h2 = sum(v for _, v in local)
        mdim = minus_dim(gen, kp, minus_mode)
        prov = [
            "h2_local: weight-0 graded of the twisted dual layer (Tate local duality)",
            f"minus_dim: {minus_mode}",
        ]
        if gen.kind == "hyperbolic" and kp == 0:
            prov.append("sha_term: 0 assumed under the BK flag (weight -1 layer)")
        else:
            prov.append("sha_term: 0 under Bloch-Kato (Poitou-Tate duality)")
        layers.append(
            LayerBound(
                kprime=kp,
                layer_total=layer_total(gen, kp),
                h2_local=local,
                h2_local_total=h2,
                sha_term=0,
                minus_dim=mdim,
                layer_bound=h2 + 0 + mdim,
                provenance=tuple(prov),
            )
        )
    labels = (gen.mode_label, f"minus: {minus_mode}", "bk: assumed")
    return SelmerBoundReport(tuple(layers), sum(lb.layer_bound for lb in layers), True, labels)
