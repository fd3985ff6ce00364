"""Dimensions of the homogeneous components of free Lie algebras.

Formula side (Moebius sums):

* ``witt(t, s)``: dimension of the degree-s component on t generators;
* ``graded_witt(gen, n)``: the same, refined by weight, for a graded
  generator space with weight generating function f(q):
  ``l_n(q) = (1/n) sum_{d | n} mu(d) f(q^d)^(n/d)``;
* ``lie_sigma_trace``: trace of an involution on the degree-n component,
  ``(1/n) sum_{d | n} mu(d) T(d)^(n/d)`` with ``T(d)`` the trace of the
  involution's d-th power on the generators.

Oracle side (explicit enumeration, independent of the Moebius path):
``lyndon_count`` and ``lyndon_profile`` walk Lyndon words with Duval's
algorithm. Lyndon words of length n index a basis of the degree-n
component, and the standard bracketing of a word over eigenvector letters
is an eigenvector whose sign is the product of its letters' signs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .exactmath import divisors, exact_div, mobius
from .graded import Convention, GradedDim, SignedGradedDim

__all__ = [
    "LieLayerProfile",
    "OracleBudgetExceeded",
    "DEFAULT_ORACLE_BUDGET",
    "witt",
    "graded_witt",
    "lie_sigma_trace",
    "lie_layer",
    "lyndon_words",
    "lyndon_count",
    "lyndon_profile",
]

DEFAULT_ORACLE_BUDGET = 10**7


class OracleBudgetExceeded(RuntimeError):
    """An enumeration oracle was asked for more words than its budget allows."""


@dataclass(frozen=True)
class LieLayerProfile:
    """Weight profile, involution trace and total of one free-Lie component."""

    bracket_length: int
    graded: GradedDim
    trace: int
    total: int

    def __post_init__(self):
        if self.graded.total() != self.total:
            raise ValueError("graded profile does not sum to the total")
        if abs(self.trace) > self.total or (self.total - self.trace) % 2:
            raise ValueError(f"inconsistent trace {self.trace} for total {self.total}")

    @property
    def plus(self) -> int:
        return (self.total + self.trace) // 2

    @property
    def minus(self) -> int:
        return (self.total - self.trace) // 2

    @property
    def f0(self) -> int:
        """Dimension in Hodge-Tate weight 0 (every bracket counted, any letter weights)."""
        return self.graded[0]


def witt(t: int, s: int) -> int:
    """d_t(s) = (1/s) sum_{l | s} mu(l) t^(s/l)."""
    if t < 0:
        raise ValueError(f"number of generators must be >= 0, got {t}")
    if s < 1:
        raise ValueError(f"degree must be >= 1, got {s}")
    num = sum(mobius(l) * t ** (s // l) for l in divisors(s))
    return exact_div(num, s, f"Witt sum for d_{t}({s})")


def _laurent_power(poly: tuple[tuple[int, int], ...], e: int) -> dict[int, int]:
    """poly(q)**e for a Laurent polynomial with nonnegative coefficients.

    Uses Kronecker substitution: the coefficients are packed into one big
    integer with byte-aligned slots wide enough to hold every coefficient of
    the power, so a single integer ``pow`` does the convolution.
    """
    if e == 0:
        return {0: 1}
    if not poly:
        return {}
    wmin = poly[0][0]
    span = poly[-1][0] - wmin
    total = sum(c for _, c in poly)
    slot = (total**e).bit_length() // 8 + 1
    buf = bytearray((span + 1) * slot)
    for w, c in poly:
        off = (w - wmin) * slot
        buf[off : off + slot] = c.to_bytes(slot, "little")
    packed = pow(int.from_bytes(bytes(buf), "little"), e)
    nslots = span * e + 1
    raw = packed.to_bytes(nslots * slot, "little")
    out = {}
    base = e * wmin
    for i in range(nslots):
        c = int.from_bytes(raw[i * slot : (i + 1) * slot], "little")
        if c:
            out[base + i] = c
    return out


@lru_cache(maxsize=4096)
def _graded_witt_cached(entries: tuple[tuple[int, int], ...], n: int) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = defaultdict(int)
    for d in divisors(n):
        mu = mobius(d)
        if mu == 0:
            continue
        for w, c in _laurent_power(entries, n // d).items():
            acc[w * d] += mu * c
    out = []
    for w in sorted(acc):
        c = exact_div(acc[w], n, f"graded Witt sum at weight {w}, degree {n}")
        if c < 0:
            raise ArithmeticError(f"negative graded Witt coefficient at weight {w}")
        if c:
            out.append((w, c))
    return tuple(out)


def graded_witt(gen: GradedDim, n: int) -> GradedDim:
    """Weight profile of the degree-n component of the free Lie algebra on ``gen``."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if isinstance(gen, SignedGradedDim):
        gen = gen.graded
    return GradedDim(_graded_witt_cached(gen.items(), n), gen.convention)


def lie_sigma_trace(gen_total: int, gen_trace: int, n: int) -> int:
    """Trace of an involution on the degree-n free Lie component.

    The involution acts on the generators with trace ``gen_trace``; its odd
    powers have that trace and its even powers are the identity.
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if abs(gen_trace) > gen_total or (gen_total - gen_trace) % 2:
        raise ValueError(f"inconsistent generator trace {gen_trace} for total {gen_total}")
    num = 0
    for d in divisors(n):
        t_d = gen_trace if d % 2 else gen_total
        num += mobius(d) * t_d ** (n // d)
    return exact_div(num, n, f"involution trace in degree {n}")


def lie_layer(gen: SignedGradedDim, n: int) -> LieLayerProfile:
    """Formula-side LieLayerProfile for the degree-n component."""
    return LieLayerProfile(
        bracket_length=n,
        graded=graded_witt(gen.graded, n),
        trace=lie_sigma_trace(gen.total(), gen.trace(), n),
        total=witt(gen.total(), n),
    )


# ---------------------------------------------------------------------------
# oracles


def _check_budget(alphabet_size: int, length: int, budget: int) -> None:
    if alphabet_size**length > budget:
        raise OracleBudgetExceeded(
            f"enumerating words of length {length} over {alphabet_size} letters "
            f"exceeds the budget of {budget}"
        )


def lyndon_words(alphabet_size: int, length: int, budget: int = DEFAULT_ORACLE_BUDGET) -> Iterator[tuple[int, ...]]:
    """Lyndon words of exactly ``length`` letters over ``range(alphabet_size)``.

    Duval's algorithm generates every Lyndon word of length <= ``length`` in
    lexicographic order; only the full-length ones are yielded.
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if alphabet_size < 0:
        raise ValueError(f"alphabet size must be >= 0, got {alphabet_size}")
    _check_budget(alphabet_size, length, budget)
    if alphabet_size == 0:
        return
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == length:
            yield tuple(w)
        while len(w) < length:
            w.append(w[-m])
        while w and w[-1] == alphabet_size - 1:
            w.pop()


def lyndon_count(alphabet_size: int, length: int, budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    return sum(1 for _ in lyndon_words(alphabet_size, length, budget))


Generators = Union[GradedDim, SignedGradedDim, Sequence[tuple[int, int]]]


def lyndon_profile(gen: Generators, length: int, budget: int = DEFAULT_ORACLE_BUDGET) -> LieLayerProfile:
    """Enumerate Lyndon words over a (weight, sign)-labelled alphabet.

    Each word contributes the sum of its letters' weights and the product of
    their signs. A plain GradedDim gets sign +1 on every letter.
    """
    if isinstance(gen, SignedGradedDim):
        letters, conv = gen.letters(), gen.convention
    elif isinstance(gen, GradedDim):
        letters, conv = [(w, 1) for w, d in gen.items() for _ in range(d)], gen.convention
    else:
        letters, conv = list(gen), Convention.HODGE_TATE
    acc: dict[int, int] = defaultdict(int)
    trace = 0
    total = 0
    for word in lyndon_words(len(letters), length, budget):
        wt, sg = 0, 1
        for i in word:
            wt += letters[i][0]
            sg *= letters[i][1]
        acc[wt] += 1
        trace += sg
        total += 1
    return LieLayerProfile(length, GradedDim(acc, conv), trace, total)
