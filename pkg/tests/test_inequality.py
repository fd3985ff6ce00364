import pytest

from rcdim.inequality import (
    SCHEMA,
    InequalityReport,
    Modes,
    SearchExhausted,
    Term,
    check_genus2,
    check_modular,
    per_layer_margins,
    reductive_dim,
    search_genus2,
    search_modular,
    witt_rhs,
)
from rcdim.selmer import build_generator_space, make_setup

# First witness found by the genus-2 scan (g=2, g'=1, T = {p, one good place}).
# Regression pin produced by this tool; nothing external names the pair.
PINNED_WITNESS = (2, 1)


@pytest.fixture(scope="module")
def g2():
    return make_setup(2, 1)


@pytest.mark.parametrize("g, expected", [(1, 3), (2, 10), (3, 21)])
def test_reductive_dim(g, expected):
    assert reductive_dim(g) == expected


def test_modular_examples():
    rep = check_modular(6, 2)
    assert rep.holds and (rep.lhs_total, rep.rhs) == (12, 13)
    rep = check_modular(5, 2)
    assert not rep.holds and rep.lhs_total == rep.rhs == 11
    assert not check_modular(1, 2).holds


def test_modular_threshold():
    for t in range(2, 21):
        for n in range(1, 101):
            rep = check_modular(n, t)
            assert rep.holds == (n > t + 3)
            assert rep.rhs == 2 * n + 1
            assert rep.params["minus_dim"] == n + 1


def test_search_modular():
    assert search_modular(2) == 6
    assert search_modular(4) == 8
    assert search_modular(2, lambda n: n % 2 == 0) == 6
    assert search_modular(3, lambda n: n % 2 == 0) == 8
    with pytest.raises(SearchExhausted):
        search_modular(10, ceiling=5)


def test_genus2_rhs_small(g2):
    assert check_genus2(g2, 0, 1, bk=True).rhs == 8


def test_genus2_rhs_is_witt_sum(g2):
    for m in (1, 3, 5):
        total = build_generator_space(g2, m).total
        for k in range(0, 9, 2):
            assert check_genus2(g2, k, m, bk=True).rhs == witt_rhs(total, k)


def test_genus2_validation(g2):
    with pytest.raises(ValueError, match="k must be even"):
        check_genus2(g2, 1, 1, bk=True)
    with pytest.raises(ValueError):
        check_genus2(g2, 2, 2, bk=True)


def test_genus2_pinned_report(g2):
    rep = check_genus2(g2, 2, 1, bk=True)
    assert rep.holds
    assert (rep.lhs_total, rep.rhs) == (194, 204)
    assert rep.term("selmer_bound") == 186
    assert rep.term("f0_unipotent") == 5
    assert rep.term("reductive_term") == 3
    assert "f0-disagreement: paper-rule=5 graded-witt=33" in rep.mode_labels
    assert [(lb.layer_total, lb.h2_local_total, lb.minus_dim) for lb in rep.layers] == [
        (8, 2, 4),
        (28, 36, 28),
        (168, 32, 84),
    ]


def test_exact_trace_lhs_never_larger(g2):
    for m in (1, 3, 5):
        for k in range(0, 9, 2):
            default = check_genus2(g2, k, m, Modes(), True)
            exact = check_genus2(g2, k, m, Modes(minus="exact-trace"), True)
            assert exact.lhs_total <= default.lhs_total


def test_holds_persists_in_k():
    # Cumulative version: layer-by-layer margins alternate in sign because
    # the odd-k' layers are bounded by their full dimension.
    for g, gp in [(2, 1), (2, 2), (3, 1)]:
        setup = make_setup(g, gp)
        for m in (1, 3, 5):
            holds = [check_genus2(setup, k, m, bk=True).holds for k in range(0, 17, 2)]
            if True in holds:
                assert all(holds[holds.index(True):])


def test_per_layer_margins_alternate(g2):
    margins = per_layer_margins(check_genus2(g2, 6, 1, bk=True))
    assert all(x < 0 for x in margins[1::2])
    assert all(x > 0 for x in margins[2::2])


def test_search_genus2_pinned(g2):
    res = search_genus2(g2, 20, 99, Modes(), bk=True)
    assert res.found and res.witness == PINNED_WITNESS
    bigger = search_genus2(g2, 40, 151, Modes(), bk=True)
    assert bigger.witness == PINNED_WITNESS


def test_search_genus2_degenerate_budget(g2):
    res = search_genus2(g2, 0, 1, Modes(), bk=True)
    assert not res.found and res.largest_attempted == (0, 1)


def test_parabolic_mode(g2):
    rep = check_genus2(g2, 2, 1, Modes(reductive="parabolic", parabolic_dim=2), True)
    assert rep.term("reductive_term") == 2
    with pytest.raises(ValueError):
        Modes(reductive="parabolic")
    with pytest.raises(ValueError):
        Modes(f0="nope")


def test_json_roundtrip(g2):
    for rep in (check_genus2(g2, 2, 3, bk=True), check_modular(7, 3)):
        back = InequalityReport.from_json(rep.to_json())
        assert back == rep
        assert back.to_dict()["schema"] == SCHEMA


def test_report_consistency_checks():
    with pytest.raises(AssertionError):
        InequalityReport("x", {}, [Term("a", 1)], 2, 5, True)
    with pytest.raises(AssertionError):
        InequalityReport("x", {}, [Term("a", 1)], 1, 1, True)
    with pytest.raises(ValueError):
        InequalityReport.from_dict({"schema": "other/0"})
