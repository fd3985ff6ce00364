"""Weight-graded dimension profiles, with and without an involution trace.

A profile is a finite map ``weight -> dimension`` (``GradedDim``) or
``weight -> (dimension, trace of the involution)`` (``SignedGradedDim``).
Every profile carries the weight convention it lives in:

* ``Convention.FROBENIUS``: Frobenius weights, the cyclotomic twist Q_p(1) has weight -2;
* ``Convention.HODGE_TATE``: Hodge-Tate weights, Q_p(1) has weight -1.

Combining or comparing profiles across conventions raises ``ConventionError``.
"""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .exactmath import binom, multichoose

__all__ = [
    "Convention",
    "ConventionError",
    "GradedDim",
    "SignedGradedDim",
    "FundamentalRep",
    "tensor",
    "dual",
    "tate_twist",
    "sym_power",
    "sym_ht_grading",
    "sym_ht_signed",
    "sym_frob_grading",
    "sym_frob_signed",
    "sym_pure_grading",
    "sym_pure_signed",
    "sym_sigma_trace",
    "max_entry_ratio",
    "ht_max_entry_bound",
]


class Convention(str, enum.Enum):
    FROBENIUS = "frobenius"
    HODGE_TATE = "hodge-tate"

    @property
    def twist_step(self) -> int:
        """Weight of Q_p(1) in this convention."""
        return -2 if self is Convention.FROBENIUS else -1


class ConventionError(ValueError):
    """Raised when profiles in different weight conventions are mixed."""


def _check_same(a: Convention, b: Convention) -> None:
    if a is not b:
        raise ConventionError(f"cannot mix {a.value} and {b.value} profiles")


_PAIR_RE = re.compile(r"\s*(-?\d+)\s*:\s*(-?\d+)\s*")
_SIGNED_RE = re.compile(r"\s*(-?\d+)\s*:\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*")


def _split_items(text: str) -> list[str]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"profile text must be enclosed in braces: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return []
    # split on commas that are not inside parentheses
    items, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur))
    return items


class GradedDim:
    """Finite weight -> dimension map in canonical form (no zero entries)."""

    __slots__ = ("_entries", "convention", "_hash")

    def __init__(
        self,
        entries: Mapping[int, int] | Iterable[tuple[int, int]] = (),
        convention: Convention = Convention.HODGE_TATE,
    ):
        acc: dict[int, int] = defaultdict(int)
        items = entries.items() if isinstance(entries, Mapping) else entries
        for w, d in items:
            acc[int(w)] += int(d)
        for w, d in acc.items():
            if d < 0:
                raise ValueError(f"negative dimension {d} at weight {w}")
        self._entries = tuple(sorted((w, d) for w, d in acc.items() if d))
        self.convention = Convention(convention)
        self._hash = None

    # -- access ------------------------------------------------------------
    def __getitem__(self, w: int) -> int:
        for ww, d in self._entries:
            if ww == w:
                return d
        return 0

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._entries

    def as_dict(self) -> dict[int, int]:
        return dict(self._entries)

    @property
    def weights(self) -> list[int]:
        return [w for w, _ in self._entries]

    def total(self) -> int:
        return sum(d for _, d in self._entries)

    def max_entry(self) -> int:
        return max((d for _, d in self._entries), default=0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    # -- structure ---------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedDim):
            return NotImplemented
        _check_same(self.convention, other.convention)
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._entries, self.convention))
        return self._hash

    def __repr__(self) -> str:
        return f"GradedDim({self.to_text()}, {self.convention.value})"

    def to_text(self) -> str:
        return "{" + ", ".join(f"{w}:{d}" for w, d in self._entries) + "}"

    @classmethod
    def from_text(cls, text: str, convention: Convention = Convention.HODGE_TATE) -> "GradedDim":
        entries = []
        for item in _split_items(text):
            mt = _PAIR_RE.fullmatch(item)
            if not mt:
                raise ValueError(f"bad profile entry {item!r}")
            entries.append((int(mt.group(1)), int(mt.group(2))))
        return cls(entries, convention)

    # -- operations --------------------------------------------------------
    def tensor(self, other: "GradedDim") -> "GradedDim":
        _check_same(self.convention, other.convention)
        acc: dict[int, int] = defaultdict(int)
        for w1, d1 in self._entries:
            for w2, d2 in other._entries:
                acc[w1 + w2] += d1 * d2
        return GradedDim(acc, self.convention)

    def dual(self) -> "GradedDim":
        return GradedDim({-w: d for w, d in self._entries}, self.convention)

    def shift(self, s: int) -> "GradedDim":
        return GradedDim({w + s: d for w, d in self._entries}, self.convention)

    def twist(self, j: int) -> "GradedDim":
        return self.shift(j * self.convention.twist_step)

    def scale(self, c: int) -> "GradedDim":
        return GradedDim({w: c * d for w, d in self._entries}, self.convention)

    def with_convention(self, convention: Convention) -> "GradedDim":
        return GradedDim(self._entries, convention)


class SignedGradedDim:
    """Finite weight -> (dimension, involution trace) map.

    At each weight ``dim = plus + minus`` and ``trace = plus - minus``, so
    ``|trace| <= dim`` and ``trace = dim (mod 2)``.
    """

    __slots__ = ("_entries", "convention", "_graded", "_total", "_trace", "_hash")

    def __init__(
        self,
        entries: Mapping[int, tuple[int, int]] | Iterable[tuple[int, tuple[int, int]]] = (),
        convention: Convention = Convention.HODGE_TATE,
    ):
        acc: dict[int, list[int]] = defaultdict(lambda: [0, 0])
        items = entries.items() if isinstance(entries, Mapping) else entries
        for w, (d, t) in items:
            acc[int(w)][0] += int(d)
            acc[int(w)][1] += int(t)
        out = []
        for w, (d, t) in sorted(acc.items()):
            if abs(t) > d or (d - t) % 2:
                raise ValueError(f"inconsistent (dim, trace) = ({d}, {t}) at weight {w}")
            if d:
                out.append((w, (d, t)))
        self._entries = tuple(out)
        self.convention = Convention(convention)
        self._graded = None
        self._hash = None
        self._total = sum(d for _, (d, _) in out)
        self._trace = sum(t for _, (_, t) in out)

    @classmethod
    def from_letters(
        cls, letters: Iterable[tuple[int, int]], convention: Convention = Convention.HODGE_TATE
    ) -> "SignedGradedDim":
        """Build from an alphabet of (weight, sign) letters, sign in {+1, -1}."""
        acc: dict[int, tuple[int, int]] = {}
        for w, s in letters:
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")
            d, t = acc.get(w, (0, 0))
            acc[w] = (d + 1, t + s)
        return cls(acc, convention)

    @classmethod
    def from_graded(cls, g: GradedDim, trace_of=None) -> "SignedGradedDim":
        """Attach traces to a GradedDim; ``trace_of(w, d)`` defaults to 0 traces."""
        if trace_of is None:
            trace_of = lambda w, d: 0  # noqa: E731
        return cls({w: (d, trace_of(w, d)) for w, d in g.items()}, g.convention)

    def __getitem__(self, w: int) -> tuple[int, int]:
        for ww, dt in self._entries:
            if ww == w:
                return dt
        return (0, 0)

    def items(self) -> tuple[tuple[int, tuple[int, int]], ...]:
        return self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def graded(self) -> GradedDim:
        if self._graded is None:
            self._graded = GradedDim({w: d for w, (d, _) in self._entries}, self.convention)
        return self._graded

    def total(self) -> int:
        return self._total

    def trace(self) -> int:
        return self._trace

    def plus(self) -> int:
        return (self.total() + self.trace()) // 2

    def minus(self) -> int:
        return (self.total() - self.trace()) // 2

    def letters(self) -> list[tuple[int, int]]:
        """Alphabet of (weight, sign) letters realizing this profile."""
        out = []
        for w, (d, t) in self._entries:
            plus = (d + t) // 2
            out.extend([(w, 1)] * plus)
            out.extend([(w, -1)] * (d - plus))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGradedDim):
            return NotImplemented
        _check_same(self.convention, other.convention)
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._entries, self.convention))
        return self._hash

    def __repr__(self) -> str:
        return f"SignedGradedDim({self.to_text()}, {self.convention.value})"

    def to_text(self) -> str:
        return "{" + ", ".join(f"{w}:({d},{t})" for w, (d, t) in self._entries) + "}"

    @classmethod
    def from_text(cls, text: str, convention: Convention = Convention.HODGE_TATE) -> "SignedGradedDim":
        entries = []
        for item in _split_items(text):
            mt = _SIGNED_RE.fullmatch(item)
            if not mt:
                raise ValueError(f"bad signed profile entry {item!r}")
            entries.append((int(mt.group(1)), (int(mt.group(2)), int(mt.group(3)))))
        return cls(entries, convention)

    def tensor(self, other: "SignedGradedDim") -> "SignedGradedDim":
        _check_same(self.convention, other.convention)
        acc: dict[int, list[int]] = defaultdict(lambda: [0, 0])
        for w1, (d1, t1) in self._entries:
            for w2, (d2, t2) in other._entries:
                acc[w1 + w2][0] += d1 * d2
                acc[w1 + w2][1] += t1 * t2
        return SignedGradedDim({w: tuple(v) for w, v in acc.items()}, self.convention)

    def dual(self) -> "SignedGradedDim":
        return SignedGradedDim({-w: dt for w, dt in self._entries}, self.convention)

    def twist(self, j: int) -> "SignedGradedDim":
        step = j * self.convention.twist_step
        sign = -1 if j % 2 else 1
        return SignedGradedDim({w + step: (d, sign * t) for w, (d, t) in self._entries}, self.convention)


Profile = Union[GradedDim, SignedGradedDim]


def tensor(a: Profile, b: Profile) -> Profile:
    if type(a) is not type(b):
        raise TypeError("tensor needs two profiles of the same kind")
    return a.tensor(b)


def dual(a: Profile) -> Profile:
    return a.dual()


def tate_twist(a: Profile, j: int) -> Profile:
    """Twist by the j-th power of the cyclotomic character.

    Weights move by ``-2j`` (Frobenius) or ``-j`` (Hodge-Tate); complex
    conjugation acts on Q_p(1) by -1, so traces pick up ``(-1)**j``.
    """
    return a.twist(j)


# ---------------------------------------------------------------------------
# the fundamental representation and its symmetric powers


@dataclass(frozen=True)
class FundamentalRep:
    """V = H^1 of the Kodaira-Parshin fibre, of dimension 2 * gprime.

    ``ladic_a`` maps a bad-reduction place name to the parameter ``a`` of
    its Frobenius weight distribution ``(a, 2g' - 2a, a)`` on weights 0, 1, 2.
    Complex conjugation has eigenvalues ``+1`` and ``-1`` with multiplicity
    ``gprime`` each (its eigenspaces are isotropic for the Weil pairing),
    so ``sigma_trace_on_V`` must be 0.
    """

    gprime: int
    ladic_a: Mapping[str, int] = field(default_factory=dict)
    sigma_trace_on_V: int = 0

    def __post_init__(self):
        if self.gprime < 1:
            raise ValueError(f"gprime must be >= 1, got {self.gprime}")
        for place, a in self.ladic_a.items():
            if not 0 <= a <= self.gprime:
                raise ValueError(f"a-parameter at {place} must lie in [0, {self.gprime}], got {a}")
        if self.sigma_trace_on_V != 0:
            raise ValueError(
                "sigma_trace_on_V must be 0: the +1/-1 eigenspaces of complex conjugation "
                "are isotropic for the symplectic form, hence of equal dimension"
            )

    @property
    def dim(self) -> int:
        return 2 * self.gprime

    def ht_profile(self) -> SignedGradedDim:
        """Hodge-Tate profile of V: weights 0 and 1, g' each.

        The involution is modelled with its +1 eigenvectors in weight 0 and
        its -1 eigenvectors in weight 1, which reproduces the trace on every
        symmetric power.
        """
        g = self.gprime
        return SignedGradedDim({0: (g, g), 1: (g, -g)}, Convention.HODGE_TATE)

    def frob_profile(self, place: str) -> SignedGradedDim:
        """Frobenius profile of V at a bad place: (a, 2g'-2a, a) on weights 0, 1, 2."""
        a = self.a_at(place)
        mid = 2 * self.gprime - 2 * a
        return SignedGradedDim({0: (a, a), 1: (mid, 0), 2: (a, -a)}, Convention.FROBENIUS)

    def pure_profile(self) -> SignedGradedDim:
        """Frobenius profile of V at a good place: pure of weight 1."""
        return SignedGradedDim({1: (self.dim, 0)}, Convention.FROBENIUS)

    def a_at(self, place: str) -> int:
        try:
            return self.ladic_a[place]
        except KeyError:
            raise KeyError(f"no a-parameter recorded for place {place!r}") from None


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"symmetric power degree must be >= 1, got {m}")


def sym_power(profile: Profile, m: int) -> Profile:
    """Sym^m of an arbitrary (signed) profile, by counting weighted monomials.

    Works letter class by letter class: a class of ``c`` letters of weight ``w``
    and sign ``s`` contributes ``multichoose(c, i)`` monomials of weight ``i*w``
    and sign ``s**i`` in degree ``i``.
    """
    if m < 0:
        raise ValueError(f"symmetric power degree must be >= 0, got {m}")
    signed = isinstance(profile, SignedGradedDim)
    classes: dict[tuple[int, int], int] = defaultdict(int)
    if signed:
        for w, s in profile.letters():
            classes[(w, s)] += 1
    else:
        for w, d in profile.items():
            classes[(w, 1)] += d
    # state: (degree, weight, sign) -> count
    states: dict[tuple[int, int, int], int] = {(0, 0, 1): 1}
    ordered = sorted(classes.items())
    for idx, ((w, s), c) in enumerate(ordered):
        counts = [multichoose(c, i) for i in range(m + 1)]
        last = idx == len(ordered) - 1
        nxt: dict[tuple[int, int, int], int] = defaultdict(int)
        for (deg, wt, sg), cnt in states.items():
            # the last class must fill the remaining degree exactly
            for i in (m - deg,) if last else range(m - deg + 1):
                nxt[(deg + i, wt + i * w, sg * (s if i % 2 else 1))] += cnt * counts[i]
        states = nxt
    acc: dict[int, list[int]] = defaultdict(lambda: [0, 0])
    for (deg, wt, sg), cnt in states.items():
        if deg == m and cnt:
            acc[wt][0] += cnt
            acc[wt][1] += sg * cnt
    if signed:
        return SignedGradedDim({w: tuple(v) for w, v in acc.items()}, profile.convention)
    return GradedDim({w: v[0] for w, v in acc.items()}, profile.convention)


def sym_ht_grading(rep: FundamentalRep, m: int) -> GradedDim:
    """Hodge-Tate profile of Sym^m V.

    Weight w in [0, m] carries C(m-w+g'-1, g'-1) * C(w+g'-1, g'-1).
    """
    _check_m(m)
    g = rep.gprime
    return GradedDim(
        {w: binom(m - w + g - 1, g - 1) * binom(w + g - 1, g - 1) for w in range(m + 1)},
        Convention.HODGE_TATE,
    )


def sym_ht_signed(rep: FundamentalRep, m: int) -> SignedGradedDim:
    """Hodge-Tate profile of Sym^m V with the involution trace (-1)**w * dim at weight w."""
    ht = sym_ht_grading(rep, m)
    return SignedGradedDim({w: (d, d if w % 2 == 0 else -d) for w, d in ht.items()}, ht.convention)


def sym_frob_grading(rep: FundamentalRep, place: str, m: int) -> GradedDim:
    """Frobenius profile of Sym^m V at a bad place with parameter a.

    Weight w collects sum over i+j+k = m, j+2k = w of
    C(i+a-1, a-1) * C(j+2g'-2a-1, 2g'-2a-1) * C(k+a-1, a-1).
    """
    _check_m(m)
    a = rep.a_at(place)
    b = 2 * rep.gprime - 2 * a
    acc: dict[int, int] = defaultdict(int)
    for k in range(m + 1):
        for j in range(m - k + 1):
            i = m - j - k
            acc[j + 2 * k] += multichoose(a, i) * multichoose(b, j) * multichoose(a, k)
    return GradedDim(acc, Convention.FROBENIUS)


def sym_frob_signed(rep: FundamentalRep, place: str, m: int) -> SignedGradedDim:
    _check_m(m)
    return sym_power(rep.frob_profile(place), m)


def sym_pure_grading(rep: FundamentalRep, m: int) -> GradedDim:
    """Frobenius profile of Sym^m V at a good place: pure of weight m."""
    _check_m(m)
    return GradedDim({m: binom(m + rep.dim - 1, rep.dim - 1)}, Convention.FROBENIUS)


def sym_pure_signed(rep: FundamentalRep, m: int) -> SignedGradedDim:
    _check_m(m)
    return SignedGradedDim({m: (binom(m + rep.dim - 1, rep.dim - 1), sym_sigma_trace(rep, m))}, Convention.FROBENIUS)


def sym_sigma_trace(rep: FundamentalRep, m: int) -> int:
    """Trace of complex conjugation on Sym^m V.

    With eigenvalues {+1 x g', -1 x g'} on V this is
    sum_j (-1)**j C(m-j+g'-1, g'-1) C(j+g'-1, g'-1).
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    g = rep.gprime
    return sum((-1) ** j * binom(m - j + g - 1, g - 1) * binom(j + g - 1, g - 1) for j in range(m + 1))


def max_entry_ratio(profile: GradedDim) -> Fraction:
    """Largest single-weight dimension as a fraction of the total."""
    total = profile.total()
    if total == 0:
        return Fraction(0)
    return Fraction(profile.max_entry(), total)


def ht_max_entry_bound(gprime: int, m: int) -> Fraction:
    """Upper bound C(m/2 + g'-1, g'-1)**2 on the largest Hodge-Tate entry of Sym^m V.

    The binomial is evaluated at the (possibly half-integer) point m/2 as a
    polynomial; factor by factor (m-w+i)(w+i) <= (m/2+i)**2.
    """
    half = Fraction(m, 2)
    b = Fraction(1)
    for i in range(1, gprime):
        b *= (half + i) / i
    return b * b
