"""Exact integer primitives: binomials, the Moebius function, divisors.

Everything here works on Python ints, so no count in the package can overflow.
"""

from __future__ import annotations

import math

__all__ = ["binom", "multichoose", "mobius", "divisors", "factorize", "exact_div"]


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def multichoose(nvars: int, degree: int) -> int:
    """Number of monomials of the given degree in `nvars` variables.

    Equal to C(degree + nvars - 1, nvars - 1), with the zero-variable case
    handled explicitly (one empty monomial in degree 0, nothing above).
    """
    if nvars < 0 or degree < 0:
        raise ValueError(f"multichoose needs nonnegative arguments, got ({nvars}, {degree})")
    if nvars == 0:
        return 1 if degree == 0 else 0
    return math.comb(degree + nvars - 1, nvars - 1)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs stay well below 10**6)."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    """Integer division that refuses to round.

    A nonzero remainder in a Moebius sum means the caller has a bug, so this
    raises ArithmeticError instead of truncating.
    """
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q
