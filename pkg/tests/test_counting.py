import itertools

import pytest

from dpcover import (
    ColorSetSpec,
    CountOverflowError,
    FullCover,
    InvalidInputError,
    Permutation,
    ResourceLimitError,
    SignedGraph,
    all_negative_signing,
    canonical_cover,
    catalog_subgraphs,
    chromatic_whitney,
    complete_graph,
    count_brute,
    count_inclusion_exclusion,
    count_k4_identity,
    count_signed,
    cycle_stats,
    even_pairing_cover,
    falling_factorial,
    random_cover,
)
from dpcover.covers import CycleStats

K4 = complete_graph(4)


def _star_covers_k4(m):
    """All star-normalized K4 covers at fold m: identity at v1, free elsewhere."""
    ident = Permutation.identity(m)
    for a, b, c in itertools.product(itertools.permutations(range(m)), repeat=3):
        yield FullCover(K4, m, (ident, ident, ident, Permutation(a), Permutation(b), Permutation(c)))


def test_count_brute_examples():
    assert count_brute(canonical_cover(complete_graph(3), 3)).value == 6
    assert count_brute(even_pairing_cover(4, 4)).value == 60
    assert count_brute(canonical_cover(complete_graph(2), 1)).value == 0


def test_count_brute_budget():
    with pytest.raises(ResourceLimitError):
        count_brute(canonical_cover(K4, 100), budget=10**6)


def test_count_ie_examples():
    assert count_inclusion_exclusion(canonical_cover(K4, 5)).value == 120
    c = even_pairing_cover(5, 4)
    assert count_inclusion_exclusion(c).value == count_brute(c).value


def test_count_ie_equals_brute_random():
    for seed in range(40):
        c = random_cover(K4, 3, seed)
        assert count_inclusion_exclusion(c).value == count_brute(c).value


def test_count_ie_equals_brute_exhaustive_m2():
    for c in _star_covers_k4(2):
        assert count_inclusion_exclusion(c).value == count_brute(c).value


def test_count_ie_subset_limit(monkeypatch):
    monkeypatch.setenv("DPCOVER_SUBSET_LIMIT", "4")
    with pytest.raises(ResourceLimitError):
        count_inclusion_exclusion(canonical_cover(K4, 2))
    monkeypatch.setenv("DPCOVER_SUBSET_LIMIT", "6")
    assert count_inclusion_exclusion(canonical_cover(K4, 2)).value == 0
    monkeypatch.setenv("DPCOVER_SUBSET_LIMIT", "nope")
    with pytest.raises(InvalidInputError):
        count_inclusion_exclusion(canonical_cover(K4, 2))


def test_count_ie_on_non_complete_graph():
    from dpcover import Graph

    square = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    for seed in range(10):
        c = random_cover(square, 3, seed)
        assert count_inclusion_exclusion(c).value == count_brute(c).value


def test_k4_identity_matches_brute_on_canonical():
    cat = catalog_subgraphs(K4)
    c = canonical_cover(K4, 4)
    stats = cycle_stats(c, cat)
    assert count_k4_identity(stats, 4).value == count_brute(c).value == 24


def test_k4_identity_even_profile():
    # all triangles dead, all 4-cycles full: the even-fold extremal profile
    stats = CycleStats(t=(0, 0, 0, 0), q=(6, 6, 6), mi=(0,) * 6, z=(0,))
    assert count_k4_identity(stats, 6).value == 462
    assert count_brute(even_pairing_cover(4, 6)).value == 462


def test_k4_identity_odd_profile():
    stats = CycleStats(t=(0, 0, 0, 0), q=(5, 2, 5), mi=(0,) * 6, z=(0,))
    assert count_k4_identity(stats, 5).value == 182


def test_k4_identity_validation():
    with pytest.raises(InvalidInputError):
        count_k4_identity(CycleStats((0,), (0,), (0,), (0,)), 3)
    with pytest.raises(InvalidInputError):
        count_k4_identity(CycleStats((9, 0, 0, 0), (0, 0, 0), (0,) * 6, (0,)), 3)


def test_whitney_examples():
    assert chromatic_whitney(complete_graph(3), 3).value == 6
    assert chromatic_whitney(K4, 4).value == 24
    assert chromatic_whitney(complete_graph(5), 7).value == 2520


def test_whitney_matches_falling_factorial():
    for n in range(1, 7):
        g = complete_graph(n)
        for m in range(0, 13):
            assert chromatic_whitney(g, m).value == falling_factorial(n, m)


def test_whitney_matches_ie_on_canonical():
    for n in range(2, 6):
        g = complete_graph(n)
        for m in (2, 3, 5):
            assert chromatic_whitney(g, m).value == count_inclusion_exclusion(canonical_cover(g, m)).value


def test_whitney_overflow_guard():
    with pytest.raises(CountOverflowError):
        chromatic_whitney(complete_graph(6), 10**11)


def test_whitney_subset_limit():
    with pytest.raises(ResourceLimitError):
        chromatic_whitney(complete_graph(8), 2)


def test_color_set_spec():
    odd = ColorSetSpec.for_size(5)
    assert odd.colors == (-2, -1, 0, 1, 2)
    even = ColorSetSpec.for_size(4)
    assert even.colors == (-2, -1, 1, 2)
    assert 0 not in even.colors
    assert ColorSetSpec.for_size(1).colors == (0,)
    with pytest.raises(InvalidInputError):
        ColorSetSpec.for_size(0)
    with pytest.raises(InvalidInputError):
        ColorSetSpec(3, (1, 2))


def test_count_signed_examples():
    assert count_signed(all_negative_signing(4), ColorSetSpec.for_size(2)).value == 2
    assert count_signed(all_negative_signing(4), ColorSetSpec.for_size(4)).value == 60
    assert count_signed(all_negative_signing(1), ColorSetSpec.for_size(3)).value == 3


def test_count_signed_all_positive_equals_chromatic():
    for n in (2, 3, 4):
        g = complete_graph(n)
        sg = SignedGraph(g, tuple(1 for _ in range(g.t)))
        for lam in (2, 3, 4, 5):
            assert count_signed(sg, ColorSetSpec.for_size(lam)).value == chromatic_whitney(g, lam).value


def test_count_signed_budget():
    with pytest.raises(ResourceLimitError):
        count_signed(all_negative_signing(4), ColorSetSpec.for_size(100), budget=10**6)
