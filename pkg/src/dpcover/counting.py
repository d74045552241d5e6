"""Exact counters for proper colorings of full covers and signed graphs.

Five independent routes are provided and cross-checked by the test suite:

* count_brute           -- direct enumeration of transversals with pruning
* count_inclusion_exclusion -- signed sum over edge subsets; each subset
                           contributes the product, over components, of the
                           number of fiber values fixed by every
                           fundamental-cycle composite of that component
* count_k4_identity     -- closed-form evaluation from K4 cycle statistics
* chromatic_whitney     -- chromatic polynomial via the signed sum of
                           m**(number of components) over edge subsets
* count_signed          -- proper colorings of a signed graph over the
                           symmetric color set

All arithmetic is exact.  Accumulated values are guarded against leaving
the signed 128-bit range so results stay portable across implementations.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .covers import FullCover, CycleStats
from .errors import CountOverflowError, InvalidInputError, ResourceLimitError
from .graphs import Graph, SignedGraph, edge_subset_structure

INT128_MAX = (1 << 127) - 1
DEFAULT_BRUTE_BUDGET = 10**9
DEFAULT_SUBSET_LIMIT = 24
_PLAN_CACHE_MAX_T = 16

_ie_plan_cache: dict[Graph, list] = {}
_whitney_cache: dict[Graph, dict[int, int]] = {}


@dataclass(frozen=True)
class CountResult:
    value: int
    method: str

    def __post_init__(self):
        if self.value < 0:
            raise InvalidInputError(f"counts cannot be negative: {self.value}")


@dataclass(frozen=True)
class ColorSetSpec:
    """The symmetric color set: {-t..-1, 0, 1..t} for odd sizes, the same
    set without 0 for even sizes."""

    lam: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.lam or len(set(self.colors)) != self.lam:
            raise InvalidInputError("color set does not match its size")

    @classmethod
    def for_size(cls, lam: int) -> "ColorSetSpec":
        if lam < 1:
            raise InvalidInputError(f"color count must be >= 1, got {lam}")
        half = lam // 2
        if lam % 2:
            colors = tuple(range(-half, half + 1))
        else:
            colors = tuple(range(-half, 0)) + tuple(range(1, half + 1))
        return cls(lam, colors)


def subset_limit(override: int | None = None) -> int:
    """Edge-count guard for 2**t subset iteration.

    The DPCOVER_SUBSET_LIMIT environment variable overrides the default.
    """
    if override is not None:
        return int(override)
    env = os.environ.get("DPCOVER_SUBSET_LIMIT")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InvalidInputError(f"DPCOVER_SUBSET_LIMIT={env!r} is not an integer") from exc
    return DEFAULT_SUBSET_LIMIT


def _check_subset_limit(g: Graph, override: int | None):
    limit = subset_limit(override)
    if g.t > limit:
        raise ResourceLimitError(
            f"graph has {g.t} edges, above the 2^t subset limit of {limit} "
            "(raise via DPCOVER_SUBSET_LIMIT or the subset_limit argument)"
        )


def _guard_int128(value: int) -> int:
    if not -INT128_MAX - 1 <= value <= INT128_MAX:
        raise CountOverflowError("accumulated count left the signed 128-bit range")
    return value


def count_brute(c: FullCover, budget: int = DEFAULT_BRUTE_BUDGET) -> CountResult:
    """Count independent transversals by vertex-by-vertex enumeration.

    Assigns fiber values in vertex index order and prunes on the first
    violated matching edge.
    """
    g, m = c.graph, c.m
    if m**g.n > budget:
        raise ResourceLimitError(
            f"m^n = {m}^{g.n} exceeds the enumeration budget {budget}"
        )
    # incoming[v] lists (u, images) for edges (u, v) with u < v
    incoming = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        incoming[v].append((u, c.sigma[idx].images))

    assign = [0] * g.n
    n = g.n

    def extend(v: int) -> int:
        if v == n:
            return 1
        total = 0
        constraints = incoming[v]
        for x in range(m):
            ok = True
            for u, images in constraints:
                if images[assign[u]] == x:
                    ok = False
                    break
            if ok:
                assign[v] = x
                total += extend(v + 1)
        return total

    return CountResult(extend(0), "brute")


def _gen_ie_plans(g: Graph):
    for mask in range(1 << g.t):
        subset = [i for i in range(g.t) if mask >> i & 1]
        struct = edge_subset_structure(g, subset)
        cyclic = tuple(walks for walks in struct.fundamental_cycles if walks)
        acyclic = struct.component_count - len(cyclic)
        sign = -1 if len(subset) % 2 else 1
        yield sign, acyclic, cyclic


def _ie_plans(g: Graph):
    """Per-subset evaluation plans: (sign, acyclic component count, cyclic walks).

    Cached for graphs small enough that the full plan list is cheap to hold;
    streamed otherwise.
    """
    cached = _ie_plan_cache.get(g)
    if cached is not None:
        return cached
    if g.t <= _PLAN_CACHE_MAX_T:
        plans = list(_gen_ie_plans(g))
        _ie_plan_cache[g] = plans
        return plans
    return _gen_ie_plans(g)


def _ie_value(g: Graph, m: int, images_list) -> int:
    """Inclusion-exclusion evaluation on raw image tuples (one per edge)."""
    fwd = [np.asarray(images, dtype=np.int64) for images in images_list]
    bwd = [None] * g.t
    for i, arr in enumerate(fwd):
        inv = np.empty(m, dtype=np.int64)
        inv[arr] = np.arange(m)
        bwd[i] = inv
    ident = np.arange(m)

    total = 0
    for sign, acyclic, cyclic in _ie_plans(g):
        term = m**acyclic
        for walks in cyclic:
            fixed_all = None
            for walk in walks:
                acc = None
                for edge_idx, direction in walk:
                    step = fwd[edge_idx] if direction > 0 else bwd[edge_idx]
                    acc = step if acc is None else step[acc]
                fixed = acc == ident
                fixed_all = fixed if fixed_all is None else fixed_all & fixed
            hits = int(np.count_nonzero(fixed_all))
            if hits == 0:
                term = 0
                break
            term *= hits
        total = _guard_int128(total + sign * term)
    return total


def count_inclusion_exclusion(c: FullCover, subset_limit: int | None = None) -> CountResult:
    """Signed sum over edge subsets A of the number of assignments realizing A.

    A subset contributes (-1)**|A| times the product over its components of
    m for an acyclic component, else the number of fiber values fixed by all
    of the component's fundamental-cycle composites.  Equals count_brute on
    every full cover.
    """
    _check_subset_limit(c.graph, subset_limit)
    value = _ie_value(c.graph, c.m, [p.images for p in c.sigma])
    return CountResult(value, "inclusion_exclusion")


def count_k4_identity(stats: CycleStats, m: int) -> CountResult:
    """Proper-coloring count of a K4 cover from its cycle statistics.

    value = m^4 - 6m^3 + 15m^2 - 16m + (3-m)*sum(t) + sum(q) - sum(mi) + z.
    """
    if len(stats.t) != 4 or len(stats.q) != 3 or len(stats.mi) != 6 or len(stats.z) != 1:
        raise InvalidInputError(
            "cycle statistics do not have K4 shape (4 triangles, 3 four-cycles, 6 diamonds, 1 K4)"
        )
    for group in (stats.t, stats.q, stats.mi, stats.z):
        if any(not 0 <= x <= m for x in group):
            raise InvalidInputError(f"cycle statistic outside [0, {m}]")
    value = (
        m**4
        - 6 * m**3
        + 15 * m**2
        - 16 * m
        + (3 - m) * sum(stats.t)
        + sum(stats.q)
        - sum(stats.mi)
        + stats.z[0]
    )
    if value < 0:
        raise AssertionError(f"identity produced a negative count {value}; invalid statistics")
    return CountResult(value, "k4_identity")


def chromatic_whitney(g: Graph, m: int, subset_limit: int | None = None) -> CountResult:
    """Chromatic polynomial value via the signed subset sum of m**k_A.

    Component counts use a union-find pass per subset, independent of the
    walk machinery in count_inclusion_exclusion.
    """
    _check_subset_limit(g, subset_limit)
    coeffs = _whitney_cache.get(g)
    if coeffs is None:
        coeffs = {}
        t = g.t
        for mask in range(1 << t):
            parent = list(range(g.n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            bits = 0
            components = g.n
            for i in range(t):
                if mask >> i & 1:
                    bits += 1
                    ru, rv = find(g.edges[i][0]), find(g.edges[i][1])
                    if ru != rv:
                        parent[ru] = rv
                        components -= 1
            sign = -1 if bits % 2 else 1
            coeffs[components] = coeffs.get(components, 0) + sign
        if g.t <= _PLAN_CACHE_MAX_T:
            _whitney_cache[g] = coeffs

    total = 0
    for k, coeff in coeffs.items():
        total = _guard_int128(total + coeff * m**k)
    return CountResult(total, "whitney")


def count_signed(
    sg: SignedGraph,
    spec: ColorSetSpec,
    budget: int = DEFAULT_BRUTE_BUDGET,
) -> CountResult:
    """Count maps V -> colors with f(u) != sign(uv) * f(v) on every edge."""
    g = sg.graph
    lam = spec.lam
    if lam**g.n > budget:
        raise ResourceLimitError(
            f"lambda^n = {lam}^{g.n} exceeds the enumeration budget {budget}"
        )
    colors = np.asarray(spec.colors, dtype=np.int64)
    powers = [lam ** (g.n - 1 - v) for v in range(g.n)]
    total_assignments = lam**g.n
    block = 1 << 18
    count = 0
    for start in range(0, total_assignments, block):
        stop = min(start + block, total_assignments)
        idx = np.arange(start, stop, dtype=np.int64)
        digit_colors = [colors[(idx // powers[v]) % lam] for v in range(g.n)]
        ok = np.ones(stop - start, dtype=bool)
        for edge_idx, (u, v) in enumerate(g.edges):
            ok &= digit_colors[u] != sg.signs[edge_idx] * digit_colors[v]
        count += int(np.count_nonzero(ok))
    return CountResult(count, "signed")
