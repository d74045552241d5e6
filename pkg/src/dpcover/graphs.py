"""Simple undirected graphs, small-subgraph catalogs, and edge-subset structure.

Vertices are 0-indexed internally.  All file formats present 1-indexed
labels, matching the usual v_1..v_n naming of small graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import InvalidInputError

#: Graph names accepted anywhere a graph file path is expected.
BUILTIN_GRAPHS = tuple(f"K{n}" for n in range(2, 9))


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1 with a lexicographically ordered edge list.

    Edges are stored as (i, j) pairs with i < j; the position of a pair in
    ``edges`` is its edge index, used by covers and edge-subset operations.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"graph needs at least one vertex, got n={self.n}")
        normalized = []
        for e in self.edges:
            try:
                u, v = int(e[0]), int(e[1])
            except (TypeError, ValueError, IndexError) as exc:
                raise InvalidInputError(f"bad edge {e!r}") from exc
            if u == v:
                raise InvalidInputError(f"loop at vertex {u} not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInputError(f"edge {e!r} has endpoint outside 0..{self.n - 1}")
            normalized.append((min(u, v), max(u, v)))
        if len(set(normalized)) != len(normalized):
            raise InvalidInputError("parallel edges not allowed")
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})

    @property
    def t(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise InvalidInputError(f"({u},{v}) is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return tuple(sorted(out))

    def is_complete(self) -> bool:
        return self.t == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class SignedGraph:
    """A graph with a sign in {+1, -1} on each edge, stored in edge order."""

    graph: Graph
    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        object.__setattr__(self, "signs", signs)
        if len(signs) != self.graph.t:
            raise InvalidInputError(
                f"expected {self.graph.t} signs, got {len(signs)}"
            )
        if any(s not in (1, -1) for s in signs):
            raise InvalidInputError("edge signs must be +1 or -1")


@dataclass(frozen=True)
class SubgraphCatalog:
    """All triangles, 4-cycles, diamonds, and K4 copies of a graph.

    Subgraph copies are not required to be induced.  4-cycles are stored as
    one canonical traversal per copy: lowest vertex first, then its smaller
    cycle-neighbor.  Diamonds (K4 minus an edge) are recorded as the vertex
    quadruple plus the designated missing edge.
    """

    graph: Graph
    triangles: tuple[tuple[int, int, int], ...]
    four_cycles: tuple[tuple[int, int, int, int], ...]
    diamonds: tuple[tuple[tuple[int, int, int, int], tuple[int, int]], ...]
    k4s: tuple[tuple[int, int, int, int], ...]


@dataclass(frozen=True)
class EdgeSubsetStructure:
    """Component and cycle-space structure of a spanning edge subset.

    ``components`` partitions all n vertices (isolated vertices included).
    ``fundamental_cycles[c]`` holds, for component c, one closed walk per
    non-forest edge, each walk a tuple of (edge_index, direction) steps
    starting and ending at the component root.  Direction +1 traverses the
    stored low-to-high orientation, -1 the reverse.
    """

    component_count: int
    components: tuple[tuple[int, ...], ...]
    fundamental_cycles: tuple[tuple[tuple[tuple[int, int], ...], ...], ...]


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidInputError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def catalog_subgraphs(g: Graph) -> SubgraphCatalog:
    """Enumerate triangle/4-cycle/diamond/K4 copies of g in a fixed order.

    Triangles and K4s are listed by sorted vertex tuple; the three possible
    4-cycles on each vertex quadruple a<b<c<d appear as (a,b,c,d),
    (a,b,d,c), (a,c,b,d); diamonds are listed per quadruple by missing edge.
    """
    triangles = tuple(
        trip
        for trip in combinations(range(g.n), 3)
        if g.has_edge(trip[0], trip[1]) and g.has_edge(trip[0], trip[2]) and g.has_edge(trip[1], trip[2])
    )

    four_cycles = []
    diamonds = []
    k4s = []
    for quad in combinations(range(g.n), 4):
        a, b, c, d = quad
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if all(g.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
                four_cycles.append(cyc)
        quad_edges = list(combinations(quad, 2))
        present = sum(1 for u, v in quad_edges if g.has_edge(u, v))
        for missing in quad_edges:
            others = [e for e in quad_edges if e != missing]
            if all(g.has_edge(u, v) for u, v in others):
                diamonds.append((quad, missing))
        if present == 6:
            k4s.append(quad)

    return SubgraphCatalog(g, triangles, tuple(four_cycles), tuple(diamonds), tuple(k4s))


def edge_subset_structure(g: Graph, subset) -> EdgeSubsetStructure:
    """Components and fundamental cycles of the spanning subgraph with edge set subset.

    The spanning forest is breadth-first, rooted at each component's smallest
    vertex.  Each non-forest edge (u, v) yields the closed walk
    root -> u -> v -> root used to express its cycle constraint at the root.
    """
    subset = sorted(set(int(i) for i in subset))
    for i in subset:
        if not 0 <= i < g.t:
            raise InvalidInputError(f"edge index {i} out of range 0..{g.t - 1}")

    adj = {v: [] for v in range(g.n)}
    for i in subset:
        u, v = g.edges[i]
        adj[u].append((v, i))
        adj[v].append((u, i))

    visited = [False] * g.n
    components = []
    cycles_per_component = []

    for root in range(g.n):
        if visited[root]:
            continue
        # BFS tree: parent_step[v] = (parent, edge_index, direction parent->v)
        parent_step = {root: None}
        visited[root] = True
        order = [root]
        queue = [root]
        tree_edges = set()
        while queue:
            u = queue.pop(0)
            for w, i in sorted(adj[u]):
                if not visited[w]:
                    visited[w] = True
                    direction = 1 if g.edges[i][0] == u else -1
                    parent_step[w] = (u, i, direction)
                    tree_edges.add(i)
                    order.append(w)
                    queue.append(w)

        def path_from_root(v):
            steps = []
            while parent_step[v] is not None:
                u, i, direction = parent_step[v]
                steps.append((i, direction))
                v = u
            steps.reverse()
            return steps

        walks = []
        comp_vertices = set(order)
        for i in subset:
            u, v = g.edges[i]
            if i in tree_edges or u not in comp_vertices:
                continue
            down = path_from_root(u)
            up = [(j, -d) for j, d in reversed(path_from_root(v))]
            walks.append(tuple(down + [(i, 1)] + up))

        components.append(tuple(sorted(order)))
        cycles_per_component.append(tuple(walks))

    return EdgeSubsetStructure(len(components), tuple(components), tuple(cycles_per_component))


# ---------------------------------------------------------------------------
# File format: {"n": int, "edges": [[i, j], ...], "signs": {"i-j": +-1}} with
# 1-indexed vertices.  Builtin names "K2".."K8" stand in for complete graphs.
# ---------------------------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.edges]}


def graph_from_json(obj: dict) -> Graph | SignedGraph:
    """Parse the graph file format; returns a SignedGraph when signs are present."""
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise InvalidInputError("graph object needs 'n' and 'edges' fields")
    try:
        n = int(obj["n"])
        edges = tuple((int(e[0]) - 1, int(e[1]) - 1) for e in obj["edges"])
    except (TypeError, ValueError, IndexError) as exc:
        raise InvalidInputError("malformed graph object") from exc
    g = Graph(n, edges)
    if "signs" not in obj or obj["signs"] is None:
        return g
    if not isinstance(obj["signs"], dict):
        raise InvalidInputError("'signs' must map edge keys to +1/-1")
    signs = [1] * g.t
    listed = set()
    for key, value in obj["signs"].items():
        try:
            a, b = (int(part) for part in key.split("-"))
        except ValueError as exc:
            raise InvalidInputError(f"bad sign key {key!r}, expected 'i-j'") from exc
        idx = g.edge_index(a - 1, b - 1)
        if int(value) not in (1, -1):
            raise InvalidInputError(f"sign for {key} must be +1 or -1")
        signs[idx] = int(value)
        listed.add(idx)
    if len(listed) != g.t:
        raise InvalidInputError("signs must cover exactly the edges of the graph")
    return SignedGraph(g, tuple(signs))


def resolve_graph(spec: str) -> Graph | SignedGraph:
    """Turn a builtin name (K2..K8) or a JSON file path into a graph."""
    if spec in BUILTIN_GRAPHS:
        return complete_graph(int(spec[1:]))
    path = Path(spec)
    if not path.exists():
        raise InvalidInputError(
            f"{spec!r} is neither a builtin graph name ({', '.join(BUILTIN_GRAPHS)}) nor a file"
        )
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{spec}: invalid JSON: {exc}") from exc
    return graph_from_json(obj)
