"""Exhaustive and sampled extremal search over full m-fold covers.

The search space is indexed in mixed radix over the Lehmer ranks of the
free edge permutations (free edges in edge order, first edge most
significant).  With star normalization the edges at the root are pinned to
the identity, which loses no covers up to isomorphism; with conjugacy
reduction the first free permutation additionally ranges only over one
representative per cycle type, exploiting the residual symmetry of
simultaneous conjugation of all non-root fibers.

Reported minima are minima over FULL covers of the searched space: an
upper bound on the DP color function, which minimizes over all m-fold
covers and is not computed here.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _k4fast
from .counting import _check_subset_limit, _ie_value, count_brute, count_k4_identity
from .covers import FullCover, cycle_stats
from .errors import InvalidInputError, ResourceLimitError
from .graphs import Graph, catalog_subgraphs
from .perms import Permutation

DEFAULT_SEARCH_BUDGET = 10**8
_COVERS_PER_TASK = 1 << 12

MODES = ("max", "min", "both")
NORMALIZATIONS = ("star", "none")
REDUCTIONS = ("none", "conjugacy")
COUNTERS = ("auto", "brute", "inclusion_exclusion", "k4_identity")


@dataclass
class SearchSpec:
    graph: Graph
    m: int
    mode: str = "both"
    normalization: str = "star"
    root: int = 0
    reduction: str = "none"
    counter: str = "auto"
    budget: int = DEFAULT_SEARCH_BUDGET
    threads: int = 1
    seed: int | None = None
    histogram: bool = False


@dataclass
class SearchResult:
    max_value: int | None
    min_value: int | None
    argmax_cover: FullCover | None
    argmin_cover: FullCover | None
    evaluated: int
    space_size: int
    histogram: dict[int, int] | None = None


def _is_k4(g: Graph) -> bool:
    return g.n == 4 and g.is_complete()


#: below this many assignments per cover, brute enumeration beats the
#: inclusion-exclusion route in the exhaustive loop
_BRUTE_GRID_LIMIT = 1 << 18


def _resolve_counter(spec: SearchSpec) -> str:
    counter = spec.counter
    if counter == "auto":
        if _is_k4(spec.graph):
            counter = "k4_identity"
        elif spec.m**spec.graph.n <= _BRUTE_GRID_LIMIT:
            counter = "brute"
        else:
            counter = "inclusion_exclusion"
    if counter == "k4_identity" and not _is_k4(spec.graph):
        raise InvalidInputError("the k4_identity counter is only valid for K4")
    return counter


def _validate(spec: SearchSpec) -> str:
    if not isinstance(spec.graph, Graph):
        raise InvalidInputError("search needs a Graph")
    if spec.m < 1:
        raise InvalidInputError(f"fold number must be >= 1, got {spec.m}")
    if spec.mode not in MODES:
        raise InvalidInputError(f"mode must be one of {MODES}, got {spec.mode!r}")
    if spec.normalization not in NORMALIZATIONS:
        raise InvalidInputError(
            f"normalization must be one of {NORMALIZATIONS}, got {spec.normalization!r}"
        )
    if spec.reduction not in REDUCTIONS:
        raise InvalidInputError(f"reduction must be one of {REDUCTIONS}, got {spec.reduction!r}")
    if spec.counter not in COUNTERS:
        raise InvalidInputError(f"counter must be one of {COUNTERS}, got {spec.counter!r}")
    if not 0 <= spec.root < spec.graph.n:
        raise InvalidInputError(f"root {spec.root} out of range 0..{spec.graph.n - 1}")
    if spec.reduction == "conjugacy" and spec.normalization != "star":
        raise InvalidInputError("conjugacy reduction requires star normalization")
    if spec.reduction == "conjugacy" and spec.histogram:
        raise InvalidInputError(
            "histogram is unavailable under conjugacy reduction (orbit sizes vary)"
        )
    if spec.threads < 1:
        raise InvalidInputError(f"thread count must be >= 1, got {spec.threads}")
    return _resolve_counter(spec)


def _free_edges(spec: SearchSpec) -> list[int]:
    if spec.normalization == "none":
        return list(range(spec.graph.t))
    return [
        i for i, (u, v) in enumerate(spec.graph.edges) if spec.root not in (u, v)
    ]


def _partitions_desc(m: int):
    """Integer partitions of m in descending lexicographic order."""

    def gen(remaining, max_part):
        if remaining == 0:
            yield []
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield [first] + rest

    return list(gen(m, m))


def conjugacy_representatives(m: int) -> list[Permutation]:
    """One canonical permutation per cycle type of S_m.

    Each partition is realized by cycles of descending length on consecutive
    integers, e.g. partition 3+2+1 of 6 becomes (0 1 2)(3 4)(5).
    """
    if m < 1:
        raise InvalidInputError(f"permutation size must be positive, got {m}")
    reps = []
    for partition in _partitions_desc(m):
        images = [0] * m
        start = 0
        for length in partition:
            for i in range(length):
                images[start + i] = start + (i + 1) % length
            start += length
        reps.append(Permutation(tuple(images)))
    return reps


def _make_evaluator(counter: str, g: Graph, m: int):
    """Build an images-list -> count callable for the generic search loop."""
    if counter == "brute":
        if m**g.n <= 1 << 20:
            # all assignments as per-vertex digit columns, shared across covers
            size = m**g.n
            flat = np.arange(size, dtype=np.int64)
            columns = [(flat // m ** (g.n - 1 - v)) % m for v in range(g.n)]
            edges = g.edges

            def evaluate(images_list):
                ok = np.ones(size, dtype=bool)
                for idx, (u, v) in enumerate(edges):
                    arr = np.asarray(images_list[idx], dtype=np.int64)
                    ok &= arr[columns[u]] != columns[v]
                return int(np.count_nonzero(ok))

            return evaluate

        def evaluate(images_list):
            cover = FullCover(g, m, tuple(Permutation(img) for img in images_list))
            return count_brute(cover, budget=10**18).value

        return evaluate

    if counter == "inclusion_exclusion":
        _check_subset_limit(g, None)

        def evaluate(images_list):
            return _ie_value(g, m, images_list)

        return evaluate

    # k4_identity outside the vectorized path (non-default root or raw space)
    catalog = catalog_subgraphs(g)

    def evaluate(images_list):
        cover = FullCover(g, m, tuple(Permutation(img) for img in images_list))
        return count_k4_identity(cycle_stats(cover, catalog), m).value

    return evaluate


def _space(spec: SearchSpec, reps: list[Permutation] | None):
    free = _free_edges(spec)
    fact = math.factorial(spec.m)
    radices = [fact] * len(free)
    if spec.reduction == "conjugacy" and free:
        radices[0] = len(reps)
    size = 1
    for r in radices:
        size *= r
    return free, radices, size


def _decode(flat: int, radices: list[int]) -> list[int]:
    digits = [0] * len(radices)
    for i in range(len(radices) - 1, -1, -1):
        flat, digits[i] = divmod(flat, radices[i])
    return digits


def _cover_from_digits(
    spec: SearchSpec,
    free: list[int],
    digits: list[int],
    perm_pool: list[tuple[int, ...]],
    reps: list[Permutation] | None,
) -> FullCover:
    g, m = spec.graph, spec.m
    ident = Permutation.identity(m)
    sigma = [ident] * g.t
    for pos, edge_idx in enumerate(free):
        if reps is not None and spec.reduction == "conjugacy" and pos == 0:
            sigma[edge_idx] = reps[digits[pos]]
        else:
            sigma[edge_idx] = Permutation(perm_pool[digits[pos]])
    return FullCover(g, m, tuple(sigma))


def search_exhaustive(spec: SearchSpec) -> SearchResult:
    """Exact extrema over the normalized (and optionally reduced) cover space.

    Deterministic: ties are broken toward the smallest mixed-radix index, so
    witnesses do not depend on thread count or chunking.
    """
    counter = _validate(spec)
    reps = conjugacy_representatives(spec.m) if spec.reduction == "conjugacy" else None
    free, radices, space_size = _space(spec, reps)
    if space_size > spec.budget:
        raise ResourceLimitError(
            f"search space of {space_size} covers exceeds the budget {spec.budget}"
        )
    want_max = spec.mode in ("max", "both")
    want_min = spec.mode in ("min", "both")

    fast = (
        counter == "k4_identity"
        and spec.normalization == "star"
        and spec.root == 0
        and spec.m <= _k4fast.MAX_TABLE_FOLD
        and len(free) == 3
    )
    if fast:
        first_ranks = (
            [rep.rank() for rep in reps] if reps is not None else list(range(radices[0]))
        )
        max_v, max_i, min_v, min_i, hist = _k4fast.search_star_k4(
            spec.m, first_ranks, want_max, want_min, spec.histogram, spec.threads
        )
    else:
        max_v, max_i, min_v, min_i, hist = _generic_exhaustive(
            spec, counter, free, radices, space_size, want_max, want_min
        )

    perm_pool = list(itertools.permutations(range(spec.m)))
    argmax = (
        _cover_from_digits(spec, free, _decode(max_i, radices), perm_pool, reps)
        if want_max
        else None
    )
    argmin = (
        _cover_from_digits(spec, free, _decode(min_i, radices), perm_pool, reps)
        if want_min
        else None
    )
    return SearchResult(
        max_value=max_v if want_max else None,
        min_value=min_v if want_min else None,
        argmax_cover=argmax,
        argmin_cover=argmin,
        evaluated=space_size,
        space_size=space_size,
        histogram=hist if spec.histogram else None,
    )


def _generic_exhaustive(spec, counter, free, radices, space_size, want_max, want_min):
    g, m = spec.graph, spec.m
    evaluate = _make_evaluator(counter, g, m)
    perm_pool = list(itertools.permutations(range(m)))
    reps_images = (
        [rep.images for rep in conjugacy_representatives(m)]
        if spec.reduction == "conjugacy"
        else None
    )
    ident = tuple(range(m))
    base_images = [ident] * g.t

    def run_range(lo: int, hi: int):
        best_max = best_min = None
        idx_max = idx_min = -1
        hist = Counter() if spec.histogram else None
        images = list(base_images)
        digits = _decode(lo, radices)
        for flat in range(lo, hi):
            for pos, edge_idx in enumerate(free):
                if reps_images is not None and pos == 0:
                    images[edge_idx] = reps_images[digits[pos]]
                else:
                    images[edge_idx] = perm_pool[digits[pos]]
            value = evaluate(images)
            if want_max and (best_max is None or value > best_max):
                best_max, idx_max = value, flat
            if want_min and (best_min is None or value < best_min):
                best_min, idx_min = value, flat
            if hist is not None:
                hist[value] += 1
            # increment mixed-radix digits
            for pos in range(len(radices) - 1, -1, -1):
                digits[pos] += 1
                if digits[pos] < radices[pos]:
                    break
                digits[pos] = 0
        return lo, best_max, idx_max, best_min, idx_min, hist

    ranges = [
        (lo, min(lo + _COVERS_PER_TASK, space_size))
        for lo in range(0, space_size, _COVERS_PER_TASK)
    ]
    if spec.threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=spec.threads) as pool:
            results = list(pool.map(lambda r: run_range(*r), ranges))
    else:
        results = [run_range(*r) for r in ranges]

    results.sort(key=lambda item: item[0])
    best_max = best_min = None
    idx_max = idx_min = -1
    hist_total = Counter() if spec.histogram else None
    for _, cmax, cimax, cmin, cimin, chist in results:
        if want_max and cmax is not None and (best_max is None or cmax > best_max):
            best_max, idx_max = cmax, cimax
        if want_min and cmin is not None and (best_min is None or cmin < best_min):
            best_min, idx_min = cmin, cimin
        if hist_total is not None and chist is not None:
            hist_total.update(chist)
    hist_out = dict(sorted(hist_total.items())) if hist_total is not None else None
    return best_max, idx_max, best_min, idx_min, hist_out


def search_sampled(spec: SearchSpec, samples: int) -> SearchResult:
    """Extrema over seeded random covers of the normalized space.

    Lower-bounds the exhaustive maximum and upper-bounds the exhaustive
    minimum.  Deterministic per seed; ties go to the earliest sample.
    """
    counter = _validate(spec)
    if samples < 1:
        raise InvalidInputError(f"need at least one sample, got {samples}")
    if spec.reduction != "none":
        raise InvalidInputError("sampled search does not support reduction")
    if spec.seed is None:
        raise InvalidInputError("sampled search requires an explicit seed")

    g, m = spec.graph, spec.m
    free = _free_edges(spec)
    space_size = math.factorial(m) ** len(free)
    want_max = spec.mode in ("max", "both")
    want_min = spec.mode in ("min", "both")
    evaluate = _make_evaluator(counter, g, m)

    rng = random.Random(spec.seed)
    ident = tuple(range(m))
    images = [ident] * g.t
    best_max = best_min = None
    arg_max = arg_min = None
    hist = Counter() if spec.histogram else None

    for _ in range(samples):
        for edge_idx in free:
            drawn = list(range(m))
            rng.shuffle(drawn)
            images[edge_idx] = tuple(drawn)
        value = evaluate(images)
        if want_max and (best_max is None or value > best_max):
            best_max, arg_max = value, tuple(images)
        if want_min and (best_min is None or value < best_min):
            best_min, arg_min = value, tuple(images)
        if hist is not None:
            hist[value] += 1

    def to_cover(snapshot):
        if snapshot is None:
            return None
        return FullCover(g, m, tuple(Permutation(img) for img in snapshot))

    return SearchResult(
        max_value=best_max if want_max else None,
        min_value=best_min if want_min else None,
        argmax_cover=to_cover(arg_max) if want_max else None,
        argmin_cover=to_cover(arg_min) if want_min else None,
        evaluated=samples,
        space_size=space_size,
        histogram=dict(sorted(hist.items())) if hist is not None else None,
    )


def verify_reduction_equivalence(g: Graph, m: int, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Check that conjugacy reduction preserves the exhaustive max and min."""
    unreduced = search_exhaustive(SearchSpec(g, m, mode="both", budget=budget))
    reduced = search_exhaustive(
        SearchSpec(g, m, mode="both", reduction="conjugacy", budget=budget)
    )
    return (
        unreduced.max_value == reduced.max_value
        and unreduced.min_value == reduced.min_value
    )
