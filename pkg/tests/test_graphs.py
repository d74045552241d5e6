import json
from itertools import combinations
from math import comb

import pytest

from dpcover import (
    Graph,
    InvalidInputError,
    SignedGraph,
    catalog_subgraphs,
    complete_graph,
    edge_subset_structure,
    graph_from_json,
    graph_to_json,
    resolve_graph,
)


def test_complete_graph_sizes():
    assert complete_graph(4).t == 6
    assert complete_graph(1).t == 0
    k5 = complete_graph(5)
    assert k5.t == 10
    assert k5.edges[0] == (0, 1)
    assert k5.edges[-1] == (3, 4)


def test_complete_graph_rejects_zero():
    with pytest.raises(InvalidInputError):
        complete_graph(0)


def test_graph_normalizes_edges():
    g = Graph(4, ((2, 0), (1, 0)))
    assert g.edges == ((0, 1), (0, 2))
    assert g.edge_index(2, 0) == 1


def test_graph_validation():
    with pytest.raises(InvalidInputError):
        Graph(3, ((0, 0),))
    with pytest.raises(InvalidInputError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(InvalidInputError):
        Graph(3, ((0, 3),))


def test_catalog_k4():
    cat = catalog_subgraphs(complete_graph(4))
    assert len(cat.triangles) == 4
    assert len(cat.four_cycles) == 3
    assert len(cat.diamonds) == 6
    assert len(cat.k4s) == 1
    # the fixed traversal order of the three 4-cycles on one quadruple
    assert cat.four_cycles == ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3))


def test_catalog_k3():
    cat = catalog_subgraphs(complete_graph(3))
    assert len(cat.triangles) == 1
    assert len(cat.four_cycles) == 0
    assert len(cat.diamonds) == 0
    assert len(cat.k4s) == 0


def _scan_counts(g):
    """Independent brute count of subgraph copies by explicit edge checks."""
    tri = sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    )
    four = 0
    dia = 0
    kf = 0
    for quad in combinations(range(g.n), 4):
        a, b, c, d = quad
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if all(g.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
                four += 1
        pairs = list(combinations(quad, 2))
        for missing in pairs:
            if all(g.has_edge(u, v) for u, v in pairs if (u, v) != missing):
                dia += 1
        if all(g.has_edge(u, v) for u, v in pairs):
            kf += 1
    return tri, four, dia, kf


def test_catalog_k5_against_scan():
    g = complete_graph(5)
    cat = catalog_subgraphs(g)
    counts = (len(cat.triangles), len(cat.four_cycles), len(cat.diamonds), len(cat.k4s))
    assert counts == _scan_counts(g)
    assert counts == (10, 15, 30, 5)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_catalog_closed_forms_complete(n):
    cat = catalog_subgraphs(complete_graph(n))
    assert len(cat.triangles) == comb(n, 3)
    assert len(cat.four_cycles) == 3 * comb(n, 4)
    assert len(cat.diamonds) == 6 * comb(n, 4)
    assert len(cat.k4s) == comb(n, 4)


def test_catalog_non_complete():
    square = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    cat = catalog_subgraphs(square)
    assert (len(cat.triangles), len(cat.four_cycles), len(cat.diamonds), len(cat.k4s)) == (0, 1, 0, 0)

    diamond = Graph(4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)))
    cat = catalog_subgraphs(diamond)
    assert (len(cat.triangles), len(cat.four_cycles), len(cat.diamonds), len(cat.k4s)) == (2, 1, 1, 0)
    assert cat.diamonds[0][1] == (0, 3)


def test_subset_structure_triangle():
    g = complete_graph(4)
    triangle = [g.edge_index(0, 1), g.edge_index(0, 2), g.edge_index(1, 2)]
    s = edge_subset_structure(g, triangle)
    assert s.component_count == 2
    assert sum(len(w) for w in s.fundamental_cycles) == 1
    assert s.components == ((0, 1, 2), (3,))


def test_subset_structure_empty_and_full():
    g = complete_graph(4)
    empty = edge_subset_structure(g, [])
    assert empty.component_count == 4
    assert all(len(w) == 0 for w in empty.fundamental_cycles)

    full = edge_subset_structure(g, range(6))
    assert full.component_count == 1
    assert len(full.fundamental_cycles[0]) == 3  # cyclomatic number 6 - 4 + 1


def test_subset_structure_bad_index():
    with pytest.raises(InvalidInputError):
        edge_subset_structure(complete_graph(3), [5])


def test_cyclomatic_identity_all_subsets_k4():
    g = complete_graph(4)
    for mask in range(1 << 6):
        subset = [i for i in range(6) if mask >> i & 1]
        s = edge_subset_structure(g, subset)
        cycles = sum(len(w) for w in s.fundamental_cycles)
        assert s.component_count + len(subset) - g.n == cycles
        # per component: edges restricted to it minus (size - 1) non-forest edges
        for verts, walks in zip(s.components, s.fundamental_cycles):
            inside = sum(1 for i in subset if g.edges[i][0] in verts)
            assert len(walks) == inside - (len(verts) - 1)


def test_subset_structure_order_independent():
    g = complete_graph(4)
    subset = [5, 0, 3]
    a = edge_subset_structure(g, subset)
    b = edge_subset_structure(g, list(reversed(subset)))
    c = edge_subset_structure(g, set(subset))
    assert a == b == c


def test_graph_json_roundtrip():
    g = complete_graph(4)
    assert graph_from_json(graph_to_json(g)) == g
    obj = graph_to_json(g)
    assert obj["edges"][0] == [1, 2]  # files are 1-indexed


def test_graph_json_signs():
    obj = {"n": 2, "edges": [[1, 2]], "signs": {"1-2": -1}}
    sg = graph_from_json(obj)
    assert isinstance(sg, SignedGraph)
    assert sg.signs == (-1,)
    with pytest.raises(InvalidInputError):
        graph_from_json({"n": 2, "edges": [[1, 2]], "signs": {"1-2": 0}})
    with pytest.raises(InvalidInputError):
        graph_from_json({"n": 3, "edges": [[1, 2], [2, 3]], "signs": {"1-2": 1}})


def test_resolve_graph(tmp_path):
    assert resolve_graph("K4") == complete_graph(4)
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3]]}))
    g = resolve_graph(str(path))
    assert g == Graph(3, ((0, 1), (1, 2)))
    with pytest.raises(InvalidInputError):
        resolve_graph("K99")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(InvalidInputError):
        resolve_graph(str(bad))
