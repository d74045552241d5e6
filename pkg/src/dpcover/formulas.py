"""Closed-form evaluators for dual DP color functions of complete graphs.

These exact-integer formulas serve as oracles for the search and counting
modules:

* dual_dp_k4          -- the piecewise (even/odd fold) value for K4
* dual_dp_small_complete -- the known values for K2 and K3
* dual_dp_main_term   -- the shared degree-(n-3) polynomial approximant f
* dual_dp_bounds      -- f plus the 2^t * m^(n-4) slack band and the fold
                        threshold 2^(t+1) + t + n - 6 above which the band
                        is guaranteed
* falling_factorial   -- the chromatic polynomial of K_n
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InvalidInputError


@dataclass(frozen=True)
class BoundPair:
    lower: int
    upper: int
    main_term: int
    threshold: int


def dual_dp_k4(m: int) -> int:
    """Maximum proper-coloring count over full m-fold covers of K4.

    Even folds give m^4 - 6m^3 + 15m^2 - 13m; odd folds fall 3 short, so no
    single polynomial matches for all large m.
    """
    if m < 2:
        raise InvalidInputError(f"fold number must be >= 2, got {m}")
    value = m**4 - 6 * m**3 + 15 * m**2 - 13 * m
    return value if m % 2 == 0 else value - 3


def dual_dp_small_complete(n: int, m: int) -> int:
    """Known closed forms for K2 (m >= 1) and K3 (m >= 2)."""
    if n == 2:
        if m < 1:
            raise InvalidInputError(f"fold number must be >= 1, got {m}")
        return m * (m - 1)
    if n == 3:
        if m < 2:
            raise InvalidInputError(f"K3 formula needs m >= 2, got {m}")
        return (m - 1) ** 3 + 1
    raise InvalidInputError(f"closed form only available for n in {{2, 3}}, got {n}")


def dual_dp_main_term(n: int, m: int) -> int:
    """The polynomial f(m) shared by the lower and upper bounds for K_n, n >= 4.

    f(m) = m^n - t m^(n-1) + C(t,2) m^(n-2) - (C(t,3) - C(n,3) - 3 C(n,4)) m^(n-3)
    with t = C(n,2).  This is a formula, not a count; it may be negative.
    """
    if n < 4:
        raise InvalidInputError(f"main term defined for n >= 4, got {n}")
    if m < 1:
        raise InvalidInputError(f"fold number must be >= 1, got {m}")
    t = comb(n, 2)
    return (
        m**n
        - t * m ** (n - 1)
        + comb(t, 2) * m ** (n - 2)
        - (comb(t, 3) - comb(n, 3) - 3 * comb(n, 4)) * m ** (n - 3)
    )


def dual_dp_bounds(n: int, m: int) -> BoundPair:
    """Band f(m) +- 2^t * m^(n-4) and the fold threshold that validates it.

    The band is guaranteed to contain the dual DP value only for folds above
    the returned threshold; below it the numbers are still reported so the
    caller can present them with the appropriate caveat.
    """
    if n < 4:
        raise InvalidInputError(f"bounds defined for n >= 4, got {n}")
    if m < 1:
        raise InvalidInputError(f"fold number must be >= 1, got {m}")
    t = comb(n, 2)
    f = dual_dp_main_term(n, m)
    slack = 2**t * m ** (n - 4)
    threshold = 2 ** (t + 1) + t + n - 6
    return BoundPair(lower=f - slack, upper=f + slack, main_term=f, threshold=threshold)


def falling_factorial(n: int, m: int) -> int:
    """Product of (m - i) for i in 0..n-1: the chromatic polynomial of K_n."""
    if n < 1:
        raise InvalidInputError(f"order must be >= 1, got {n}")
    value = 1
    for i in range(n):
        value *= m - i
    return value
