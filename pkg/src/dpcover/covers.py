"""Full m-fold covers of a graph encoded as one permutation per edge.

A full m-fold cover assigns every vertex a fiber of m points and every
edge a perfect matching between the two fibers, i.e. a permutation.  The
permutation on edge (i, j) with i < j maps the fiber index at vertex i to
the matched fiber index at vertex j; traversing the edge backwards applies
the inverse.

An independent transversal (one fiber point per vertex, no matching edge
inside) is a proper coloring of the cover; the counting module counts
them.  This module provides construction, validation, fiber relabeling,
walk composites, and the per-subgraph cycle statistics that drive the
K4 counting identity.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import InvalidInputError
from .graphs import Graph, SubgraphCatalog
from .perms import Permutation


@dataclass(frozen=True)
class FullCover:
    graph: Graph
    m: int
    sigma: tuple[Permutation, ...]

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInputError(f"fold number must be >= 1, got {self.m}")
        sigma = tuple(self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if len(sigma) != self.graph.t:
            raise InvalidInputError(
                f"cover needs one permutation per edge: expected {self.graph.t}, got {len(sigma)}"
            )
        for perm, edge in zip(sigma, self.graph.edges):
            if perm.size != self.m:
                raise InvalidInputError(
                    f"permutation on edge {edge} has size {perm.size}, expected m={self.m}"
                )

    def edge_permutation(self, u: int, v: int) -> Permutation:
        return self.sigma[self.graph.edge_index(u, v)]


@dataclass(frozen=True)
class CycleStats:
    """Per-subgraph lift counts: triangles t, 4-cycles q, diamonds mi, K4s z.

    Entries follow the order of the catalog the stats were computed from.
    Every entry lies in [0, m]; a diamond count never exceeds either of its
    two triangle counts, and a K4 count never exceeds any of its four.
    """

    t: tuple[int, ...]
    q: tuple[int, ...]
    mi: tuple[int, ...]
    z: tuple[int, ...]


def build_cover(g: Graph, m: int, sigma_map) -> FullCover:
    """Validate an edge -> permutation mapping into a FullCover.

    ``sigma_map`` must provide exactly one permutation per edge of g, keyed
    by vertex pair in either orientation.
    """
    normalized = {}
    for key, perm in sigma_map.items():
        try:
            u, v = int(key[0]), int(key[1])
        except (TypeError, ValueError, IndexError) as exc:
            raise InvalidInputError(f"bad edge key {key!r}") from exc
        if not g.has_edge(u, v):
            raise InvalidInputError(f"({u},{v}) is not an edge of the graph")
        idx = g.edge_index(u, v)
        if idx in normalized:
            raise InvalidInputError(f"duplicate permutation for edge ({u},{v})")
        if not isinstance(perm, Permutation):
            perm = Permutation(tuple(perm))
        normalized[idx] = perm
    if len(normalized) != g.t:
        missing = [g.edges[i] for i in range(g.t) if i not in normalized]
        raise InvalidInputError(f"missing permutations for edges {missing}")
    return FullCover(g, m, tuple(normalized[i] for i in range(g.t)))


def canonical_cover(g: Graph, m: int) -> FullCover:
    """The cover with the identity on every edge (the canonical labeling)."""
    ident = Permutation.identity(m)
    return FullCover(g, m, tuple(ident for _ in range(g.t)))


def random_cover(g: Graph, m: int, seed: int) -> FullCover:
    """Uniformly random permutation per edge from a seeded generator."""
    if m < 1:
        raise InvalidInputError(f"fold number must be >= 1, got {m}")
    rng = random.Random(seed)
    sigma = []
    for _ in range(g.t):
        images = list(range(m))
        rng.shuffle(images)
        sigma.append(Permutation(tuple(images)))
    return FullCover(g, m, tuple(sigma))


def star_normalize(c: FullCover, root: int) -> FullCover:
    """Relabel fibers so every edge at root carries the identity permutation.

    Fiber relabeling is a cover isomorphism, so the number of proper
    colorings is unchanged.  Only fibers of the root's neighbors move.
    """
    g = c.graph
    if not 0 <= root < g.n:
        raise InvalidInputError(f"root {root} out of range 0..{g.n - 1}")

    ident = Permutation.identity(c.m)
    relabel = [ident] * g.n
    for idx, (u, v) in enumerate(g.edges):
        if u == root:
            relabel[v] = c.sigma[idx].inverse()
        elif v == root:
            relabel[u] = c.sigma[idx]

    sigma = []
    for idx, (u, v) in enumerate(g.edges):
        sigma.append(relabel[v].compose(c.sigma[idx]).compose(relabel[u].inverse()))
    return FullCover(g, c.m, tuple(sigma))


def composite_along_walk(c: FullCover, walk) -> Permutation:
    """Compose edge permutations along a closed vertex walk.

    ``walk`` is a sequence of vertices whose consecutive pairs are edges and
    whose first and last vertices agree.  Edges traversed against their
    stored low-to-high orientation contribute the inverse permutation.
    """
    walk = [int(v) for v in walk]
    if not walk:
        raise InvalidInputError("walk must contain at least one vertex")
    if walk[0] != walk[-1]:
        raise InvalidInputError(f"walk is not closed: starts at {walk[0]}, ends at {walk[-1]}")
    g = c.graph
    acc = Permutation.identity(c.m)
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise InvalidInputError(f"walk step ({a},{b}) is not an edge")
        perm = c.sigma[g.edge_index(a, b)]
        step = perm if a < b else perm.inverse()
        acc = step.compose(acc)
    return acc


def _subgraph_plan(g: Graph, vertices, edge_pairs):
    """Spanning-tree propagation plan for counting copies of a connected subgraph.

    tree_steps propagate the root's fiber value to every other subgraph
    vertex; check_edges carry the remaining constraints, each expressed in
    the stored low-to-high orientation with the graph's edge index.
    """
    vertices = tuple(sorted(vertices))
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in edge_pairs))
    root = vertices[0]
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {root}
    queue = [root]
    tree_steps = []
    tree_pairs = set()
    while queue:
        u = queue.pop(0)
        for w in sorted(adj[u]):
            if w not in seen:
                seen.add(w)
                tree_steps.append((w, u, g.edge_index(u, w), u < w))
                tree_pairs.add((min(u, w), max(u, w)))
                queue.append(w)
    check_edges = tuple((u, v, g.edge_index(u, v)) for u, v in edges if (u, v) not in tree_pairs)
    return root, tuple(tree_steps), check_edges


@lru_cache(maxsize=None)
def _catalog_plans(cat: SubgraphCatalog):
    """Propagation plans for every catalog entry, in catalog order."""
    g = cat.graph
    tri = tuple(
        _subgraph_plan(g, trip, [(trip[0], trip[1]), (trip[0], trip[2]), (trip[1], trip[2])])
        for trip in cat.triangles
    )
    four = tuple(
        _subgraph_plan(g, cyc, [(cyc[i], cyc[(i + 1) % 4]) for i in range(4)])
        for cyc in cat.four_cycles
    )
    dia = tuple(
        _subgraph_plan(
            g,
            quad,
            [e for e in ((quad[i], quad[j]) for i in range(4) for j in range(i + 1, 4)) if e != missing],
        )
        for quad, missing in cat.diamonds
    )
    k4 = tuple(
        _subgraph_plan(g, quad, [(quad[i], quad[j]) for i in range(4) for j in range(i + 1, 4)])
        for quad in cat.k4s
    )
    return tri, four, dia, k4


def _run_plan(plan, fwd, bwd, m) -> int:
    """Count root fiber values whose propagation satisfies every check edge."""
    root, tree_steps, check_edges = plan
    vals = {}
    count = 0
    for x in range(m):
        vals[root] = x
        for w, u, idx, forward in tree_steps:
            vals[w] = fwd[idx][vals[u]] if forward else bwd[idx][vals[u]]
        ok = True
        for u, v, idx in check_edges:
            if fwd[idx][vals[u]] != vals[v]:
                ok = False
                break
        if ok:
            count += 1
    return count


def _cover_tables(c: FullCover):
    fwd = [p.images for p in c.sigma]
    bwd = []
    for images in fwd:
        inv = [0] * c.m
        for x, y in enumerate(images):
            inv[y] = x
        bwd.append(tuple(inv))
    return fwd, bwd


def cycle_stats(c: FullCover, cat: SubgraphCatalog) -> CycleStats:
    """Lift counts for every catalog entry of the cover's base graph.

    Each count is the number of root fiber values extending to a full copy
    of the subgraph in the subcover.  For a triangle (or any single cycle)
    this equals the number of fixed points of the walk composite.
    """
    if cat.graph != c.graph:
        raise InvalidInputError("catalog was built from a different graph")
    tri_plans, four_plans, dia_plans, k4_plans = _catalog_plans(cat)
    fwd, bwd = _cover_tables(c)
    m = c.m
    t = tuple(_run_plan(p, fwd, bwd, m) for p in tri_plans)
    q = tuple(_run_plan(p, fwd, bwd, m) for p in four_plans)
    mi = tuple(_run_plan(p, fwd, bwd, m) for p in dia_plans)
    z = tuple(_run_plan(p, fwd, bwd, m) for p in k4_plans)
    return CycleStats(t, q, mi, z)


def is_cover_triangle_free(c: FullCover, cat: SubgraphCatalog) -> bool:
    """True iff no base triangle lifts, i.e. the cover graph has no triangle.

    For a simple base graph every triangle of the cover projects onto a
    triangle of the base, so checking the listed triangles suffices.
    """
    if cat.graph != c.graph:
        raise InvalidInputError("catalog was built from a different graph")
    return all(
        composite_along_walk(c, (a, b, cc, a)).fixed_point_count() == 0
        for a, b, cc in cat.triangles
    )


# ---------------------------------------------------------------------------
# File format: {"m": int, "perms": {"i-j": [1-indexed images], ...}} with
# i < j keys in the same 1-indexed labels as the graph file.
# ---------------------------------------------------------------------------

def cover_to_json(c: FullCover) -> dict:
    perms = {
        f"{u + 1}-{v + 1}": c.sigma[i].one_indexed()
        for i, (u, v) in enumerate(c.graph.edges)
    }
    return {"m": c.m, "perms": perms}


def cover_from_json(g: Graph, obj: dict) -> FullCover:
    if not isinstance(obj, dict) or "m" not in obj or "perms" not in obj:
        raise InvalidInputError("cover object needs 'm' and 'perms' fields")
    try:
        m = int(obj["m"])
    except (TypeError, ValueError) as exc:
        raise InvalidInputError("bad fold number") from exc
    if not isinstance(obj["perms"], dict):
        raise InvalidInputError("'perms' must map edge keys to image lists")
    sigma_map = {}
    for key, images in obj["perms"].items():
        try:
            a, b = (int(part) for part in key.split("-"))
        except ValueError as exc:
            raise InvalidInputError(f"bad cover key {key!r}, expected 'i-j'") from exc
        sigma_map[(a - 1, b - 1)] = Permutation.from_one_indexed(images)
    cover = build_cover(g, m, sigma_map)
    return cover


def load_cover(g: Graph, path) -> FullCover:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidInputError(f"cannot read cover file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: invalid JSON: {exc}") from exc
    return cover_from_json(g, obj)
