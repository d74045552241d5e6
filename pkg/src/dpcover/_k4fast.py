"""Vectorized exhaustive search over star-normalized K4 covers.

With the three edges at v1 fixed to the identity, a cover is a triple
(alpha, beta, gamma) of permutations on the remaining edges
(v2,v3), (v2,v4), (v3,v4).  Every quantity in the K4 counting identity is
the number of common fixed points of short words in these three
permutations:

    t = fix(alpha), fix(beta), fix(gamma), fix(beta^-1 gamma alpha)
    q = fix(gamma alpha), fix(gamma^-1 beta), fix(beta alpha^-1)
    diamond counts = pairwise intersections of the fixed-point sets above
    z = fix(alpha) & fix(beta) & fix(gamma)

Precomputing the rank-level composition table of S_m lets the whole
gamma axis be evaluated as a handful of array lookups, so one (alpha,
beta) pair costs a few microseconds per m! covers.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

#: tables are only built for folds whose composition table stays small
MAX_TABLE_FOLD = 6

_MIN_COVERS_PER_TASK = 1 << 12

_table_cache: dict[int, "_Tables"] = {}


@dataclass
class _Tables:
    m: int
    perms: list[tuple[int, ...]]
    compose: np.ndarray  # compose[i, j] = rank of p_i after p_j
    inverse: np.ndarray
    fix: np.ndarray  # fixed-point counts, int64
    fixmask: np.ndarray  # fixed-point bitmasks, uint64


def tables(m: int) -> _Tables:
    cached = _table_cache.get(m)
    if cached is not None:
        return cached
    fact = math.factorial(m)
    perms = list(itertools.permutations(range(m)))
    pa = np.array(perms, dtype=np.int64)
    powers = m ** np.arange(m, dtype=np.int64)
    key_to_rank = np.full(m**m, -1, dtype=np.int64)
    key_to_rank[pa @ powers] = np.arange(fact)

    compose = np.empty((fact, fact), dtype=np.int32)
    for i in range(fact):
        compose[i] = key_to_rank[pa[i][pa] @ powers]
    inv_images = np.argsort(pa, axis=1)
    inverse = key_to_rank[inv_images @ powers].astype(np.int32)
    fix = (pa == np.arange(m)).sum(axis=1).astype(np.int64)
    fixmask = np.zeros(fact, dtype=np.uint64)
    for x in range(m):
        fixmask |= (pa[:, x] == x).astype(np.uint64) << np.uint64(x)

    tab = _Tables(m, perms, compose, inverse, fix, fixmask)
    _table_cache[m] = tab
    return tab


def counts_for_pair(tab: _Tables, a: int, b: int) -> np.ndarray:
    """Coloring counts for covers (p_a, p_b, p_c), vectorized over all c."""
    m = tab.m
    compose, inverse, fix, fm = tab.compose, tab.inverse, tab.fix, tab.fixmask
    popcount = np.bitwise_count

    ia = inverse[a]
    ib = inverse[b]
    ga = compose[:, a]  # gamma after alpha, per c
    gb = compose[inverse, b]  # gamma^-1 after beta, per c
    bg = compose[ib]  # beta^-1 after gamma, per c
    ba = compose[b, ia]  # beta after alpha^-1, scalar

    t_sum = fix[a] + fix[b] + fix + fix[compose[ib, ga]]
    q_sum = fix[ga] + fix[gb] + int(fix[ba])

    fa, fb = fm[a], fm[b]
    diamond_sum = (
        popcount(fm & fm[ba]).astype(np.int64)
        + popcount(fm[ga] & fb).astype(np.int64)
        + popcount(fm[bg] & fa).astype(np.int64)
        + popcount(fm & fb).astype(np.int64)
        + popcount(fm & fa).astype(np.int64)
        + int(popcount(fa & fb))
    )
    z = popcount(fm & (fa & fb)).astype(np.int64)

    base = m**4 - 6 * m**3 + 15 * m**2 - 16 * m
    return base + (3 - m) * t_sum + q_sum - diamond_sum + z


def search_star_k4(
    m: int,
    first_ranks: list[int],
    want_max: bool,
    want_min: bool,
    histogram: bool,
    threads: int,
):
    """Extrema over covers (first_ranks x all x all), with flat mixed-radix
    indices ((pos of alpha) * m! + beta_rank) * m! + gamma_rank.

    Returns (max_value, max_index, min_value, min_index, histogram dict),
    with ties broken toward the smallest index.
    """
    tab = tables(m)
    fact = math.factorial(m)
    total_pairs = len(first_ranks) * fact
    pairs_per_task = max(1, -(-_MIN_COVERS_PER_TASK // fact))

    def run_range(lo: int, hi: int):
        best_max = best_min = None
        idx_max = idx_min = -1
        hist = Counter() if histogram else None
        for ab in range(lo, hi):
            a_pos, b = divmod(ab, fact)
            vals = counts_for_pair(tab, first_ranks[a_pos], b)
            if want_max:
                i = int(np.argmax(vals))
                v = int(vals[i])
                if best_max is None or v > best_max:
                    best_max, idx_max = v, ab * fact + i
            if want_min:
                i = int(np.argmin(vals))
                v = int(vals[i])
                if best_min is None or v < best_min:
                    best_min, idx_min = v, ab * fact + i
            if hist is not None:
                uniq, counts = np.unique(vals, return_counts=True)
                for u, cnt in zip(uniq.tolist(), counts.tolist()):
                    hist[u] += cnt
        return lo, best_max, idx_max, best_min, idx_min, hist

    ranges = [
        (lo, min(lo + pairs_per_task, total_pairs))
        for lo in range(0, total_pairs, pairs_per_task)
    ]
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda r: run_range(*r), ranges))
    else:
        results = [run_range(*r) for r in ranges]

    results.sort(key=lambda item: item[0])
    best_max = best_min = None
    idx_max = idx_min = -1
    hist_total = Counter() if histogram else None
    for _, cmax, cimax, cmin, cimin, chist in results:
        if want_max and cmax is not None and (best_max is None or cmax > best_max):
            best_max, idx_max = cmax, cimax
        if want_min and cmin is not None and (best_min is None or cmin < best_min):
            best_min, idx_min = cmin, cimin
        if hist_total is not None and chist is not None:
            hist_total.update(chist)

    return (
        best_max,
        idx_max if want_max else -1,
        best_min,
        idx_min if want_min else -1,
        dict(sorted(hist_total.items())) if hist_total is not None else None,
    )
