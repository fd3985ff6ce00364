import itertools

import pytest

from rcdim.freelie import (
    LieLayerProfile,
    OracleBudgetExceeded,
    graded_witt,
    lie_layer,
    lie_sigma_trace,
    lyndon_count,
    lyndon_profile,
    lyndon_words,
    witt,
)
from rcdim.graded import GradedDim, SignedGradedDim


@pytest.mark.parametrize("t, s, expected", [(7, 1, 7), (2, 3, 2), (3, 4, 18), (2, 2, 1), (1, 5, 0)])
def test_witt_examples(t, s, expected):
    assert witt(t, s) == expected


def test_witt_rejects_bad_input():
    with pytest.raises(ValueError):
        witt(2, 0)
    with pytest.raises(ValueError):
        witt(-1, 2)


@pytest.mark.parametrize("a, n, expected", [(2, 2, 1), (2, 4, 3), (1, 2, 0), (1, 1, 1)])
def test_lyndon_count_examples(a, n, expected):
    assert lyndon_count(a, n) == expected


def test_lyndon_words_are_lyndon():
    words = list(lyndon_words(3, 4))
    assert words == sorted(words)
    for w in words:
        rotations = [w[i:] + w[:i] for i in range(1, len(w))]
        assert all(w < r for r in rotations)
    assert list(lyndon_words(2, 3)) == [(0, 0, 1), (0, 1, 1)]


def test_witt_against_lyndon():
    for t in range(1, 5):
        for s in range(1, 9):
            assert witt(t, s) == lyndon_count(t, s)


def test_graded_witt_examples():
    f = GradedDim({-1: 3, 0: 2})
    assert graded_witt(f, 1) == f
    assert graded_witt(GradedDim({-1: 1, -2: 1}), 2) == GradedDim({-3: 1})
    assert graded_witt(GradedDim({0: 2}), 3) == GradedDim({0: 2})


def test_sigma_trace_examples():
    assert lie_sigma_trace(2, 0, 2) == -1
    assert lie_sigma_trace(3, 3, 2) == 3
    for g in range(1, 5):
        for n in (1, 3, 5, 7):
            assert lie_sigma_trace(2 * g, 0, n) == 0


def test_sigma_trace_identity_involution():
    for t in range(1, 5):
        for n in range(1, 9):
            assert lie_sigma_trace(t, t, n) == witt(t, n)


def test_lyndon_profile_examples():
    p = lyndon_profile(SignedGradedDim({0: (2, 0)}), 3)
    assert (p.total, p.trace) == (2, 0)
    p = lyndon_profile(SignedGradedDim({-1: (1, 1), -2: (1, -1)}), 2)
    assert p.graded == GradedDim({-3: 1}) and p.trace == -1
    assert lyndon_profile(SignedGradedDim({0: (1, 1)}), 2).total == 0


def test_layer_f0_counts_weight_zero():
    layer = lie_layer(SignedGradedDim({-1: (1, 1), 1: (1, -1), 0: (2, 0)}), 2)
    assert layer.f0 == layer.graded[0] == 2


def _signed_family(max_total=4, weights=range(-3, 1)):
    seen = set()
    for total in range(1, max_total + 1):
        for ws in itertools.combinations_with_replacement(weights, total):
            for signs in itertools.product((1, -1), repeat=total):
                prof = SignedGradedDim.from_letters(zip(ws, signs))
                if prof not in seen:
                    seen.add(prof)
                    yield prof


def test_graded_and_signed_witt_against_oracle():
    count = 0
    for prof in _signed_family(max_total=3):
        count += 1
        for n in range(1, 6):
            assert lie_layer(prof, n) == lyndon_profile(prof, n)
    assert count >= 50


def test_graded_witt_on_unsigned_profile_against_oracle():
    gen = GradedDim({-2: 1, -1: 2, 0: 1})
    for n in range(1, 7):
        assert graded_witt(gen, n) == lyndon_profile(gen, n).graded


def test_halving_law():
    for total in (2, 4, 6):
        prof = SignedGradedDim({0: (total, 0)})
        for n in (1, 3, 5, 7):
            layer = lie_layer(prof, n)
            assert 2 * layer.minus == layer.total


def test_necklace_identity():
    # prod_n (1 - x^n)^(-witt(t, n)) = 1 / (1 - t x) up to x^10
    order = 10
    for t in range(1, 5):
        series = [1] + [0] * order
        for n in range(1, order + 1):
            for _ in range(witt(t, n)):
                # multiply by 1 / (1 - x^n)
                for i in range(n, order + 1):
                    series[i] += series[i - n]
        assert series == [t**i for i in range(order + 1)]


def test_graded_witt_large_profile_is_exact():
    gen = GradedDim({w: (w % 5) + 1 for w in range(-100, 100)})
    layer = graded_witt(gen, 9)
    assert layer.total() == witt(gen.total(), 9)


def test_oracle_budget():
    with pytest.raises(OracleBudgetExceeded):
        lyndon_count(10, 8)
    with pytest.raises(OracleBudgetExceeded):
        lyndon_profile(SignedGradedDim({0: (4, 0)}), 6, budget=100)
    assert lyndon_count(10, 6, budget=10**6) == witt(10, 6)


def test_layer_profile_validation():
    with pytest.raises(ValueError):
        LieLayerProfile(2, GradedDim({0: 2}), 0, 3)
    with pytest.raises(ValueError):
        LieLayerProfile(2, GradedDim({0: 2}), 1, 2)
