import pytest

from dpcover import (
    InvalidInputError,
    SearchSpec,
    complete_graph,
    dual_dp_bounds,
    dual_dp_k4,
    dual_dp_main_term,
    dual_dp_small_complete,
    falling_factorial,
    search_exhaustive,
)


def test_dual_dp_k4_values():
    assert dual_dp_k4(2) == 2
    assert dual_dp_k4(4) == 60
    assert dual_dp_k4(5) == 182
    assert dual_dp_k4(7) == 984
    with pytest.raises(InvalidInputError):
        dual_dp_k4(1)


def test_small_complete_values():
    assert dual_dp_small_complete(2, 5) == 20
    assert dual_dp_small_complete(3, 2) == 2
    assert dual_dp_small_complete(3, 3) == 9
    assert dual_dp_small_complete(2, 1) == 0
    with pytest.raises(InvalidInputError):
        dual_dp_small_complete(4, 5)
    with pytest.raises(InvalidInputError):
        dual_dp_small_complete(3, 1)


def test_small_complete_k3_matches_exhaustive_search():
    result = search_exhaustive(SearchSpec(complete_graph(3), 3, mode="max"))
    assert result.max_value == dual_dp_small_complete(3, 3)


def test_main_term_values():
    assert dual_dp_main_term(4, 6) == 462
    assert dual_dp_main_term(4, 2) == 16 - 48 + 60 - 26 == 2
    # the main term is a formula, not a count; it can go negative
    assert dual_dp_main_term(5, 1) == 1 - 10 + 45 - (120 - 10 - 15) == -59
    with pytest.raises(InvalidInputError):
        dual_dp_main_term(3, 5)


def test_bounds_thresholds_and_slack():
    assert dual_dp_bounds(4, 10).threshold == 132
    assert dual_dp_bounds(5, 10).threshold == 2057
    pair = dual_dp_bounds(4, 133)
    assert pair.lower == pair.main_term - 64
    assert pair.upper == pair.main_term + 64
    assert pair.lower <= pair.upper


def test_falling_factorial():
    assert falling_factorial(4, 4) == 24
    assert falling_factorial(4, 3) == 0
    assert falling_factorial(5, 7) == 2520
    with pytest.raises(InvalidInputError):
        falling_factorial(0, 3)


def test_dual_vs_main_term_parity():
    for m in range(2, 500):
        f = dual_dp_main_term(4, m)
        v = dual_dp_k4(m)
        if m % 2 == 0:
            assert v == f
        else:
            assert v == f - 3
        assert abs(v - f) <= 2**6


def test_dual_dominates_chromatic():
    for m in range(2, 10001):
        assert dual_dp_k4(m) >= falling_factorial(4, m)
    for m in range(2, 10001):
        assert dual_dp_small_complete(3, m) >= falling_factorial(3, m)
