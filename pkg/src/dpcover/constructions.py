"""Extremal cover families and the all-negative signing.

Two cover families attain the dual DP extremum on K4 and drive the general
lower bound on K_n:

* even folds: every edge carries the involution pairing 1<->2, 3<->4, ...
  No triangle lifts and every 4-cycle lifts fully.
* odd folds: a fixed-point-free permutation built from one 3-cycle plus
  transpositions.  The K4 family puts it on the three edges away from v1
  (identity on the star at v1); the K_n family puts it on every edge.
"""

from __future__ import annotations

from .covers import FullCover
from .errors import InvalidInputError
from .graphs import SignedGraph, complete_graph
from .perms import Permutation


def even_pairing_cover(n: int, m: int) -> FullCover:
    """Every edge carries the pairing 0<->1, 2<->3, ... (m even)."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    if m < 2 or m % 2:
        raise InvalidInputError(f"pairing cover needs an even fold >= 2, got {m}")
    images = []
    for k in range(0, m, 2):
        images.extend((k + 1, k))
    pairing = Permutation(tuple(images))
    g = complete_graph(n)
    return FullCover(g, m, tuple(pairing for _ in range(g.t)))


def odd_derangement(m: int) -> Permutation:
    """Fixed-point-free permutation of an odd-size set: one 3-cycle, rest swaps.

    In 1-indexed terms: 1 -> 2 -> 3 -> 1, then 4<->5, 6<->7, ...
    """
    if m < 5 or m % 2 == 0:
        raise InvalidInputError(f"derangement defined for odd m >= 5, got {m}")
    images = [1, 2, 0]
    for k in range(3, m, 2):
        images.extend((k + 1, k))
    return Permutation(tuple(images))


def odd_k4_cover(m: int) -> FullCover:
    """K4 cover attaining the odd-fold extremum: identity star at v1, the
    derangement on edges (v2,v3) and (v2,v4), its inverse on (v3,v4)."""
    f = odd_derangement(m)
    ident = Permutation.identity(m)
    g = complete_graph(4)
    # edge order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
    return FullCover(g, m, (ident, ident, ident, f, f, f.inverse()))


def odd_complete_cover(n: int, m: int) -> FullCover:
    """K_n cover with the derangement on every edge (odd fold, n >= 4).

    No triangle lifts, and each vertex quadruple contributes 4-cycle counts
    (m-3, m, m), which is what the general lower bound needs.
    """
    if n < 4:
        raise InvalidInputError(f"need n >= 4, got {n}")
    f = odd_derangement(m)
    g = complete_graph(n)
    return FullCover(g, m, tuple(f for _ in range(g.t)))


def all_negative_signing(n: int) -> SignedGraph:
    """K_n with every edge signed -1."""
    g = complete_graph(n)
    return SignedGraph(g, tuple(-1 for _ in range(g.t)))
