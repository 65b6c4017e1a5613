"""Closed-form edge-count threshold below which cross-community edges are
guaranteed nonpositively curved, and the decision predicates built on it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

GUARANTEED = "GUARANTEED"
NOT_GUARANTEED = "NOT_GUARANTEED"


@dataclass(frozen=True)
class Threshold:
    """Evaluated threshold (-m + sqrt(m^2 + 4(m-1)(2n-1))) / 2.

    ``exact`` is a Fraction when the discriminant is a perfect square,
    otherwise None; ``value`` is the double rendition and ``floor`` the
    exact integer floor (computed in integer arithmetic either way).
    """

    m: int
    n: int
    value: float
    floor: int
    exact: Fraction | None


def threshold(m: int, n: int) -> Threshold:
    """Largest real k satisfying k^2 + m k - (m-1)(2n-1) <= 0."""
    if m < 1 or n < 1:
        raise ValueError("community sizes must be positive")
    disc = m * m + 4 * (m - 1) * (2 * n - 1)
    root = math.isqrt(disc)
    exact = Fraction(root - m, 2) if root * root == disc else None
    # floor((sqrt(disc) - m) / 2) == (isqrt(disc) - m) // 2 because the
    # discriminant is congruent to m^2 mod 4
    floor = (root - m) // 2
    return Threshold(m=m, n=n, value=(math.sqrt(disc) - m) / 2, floor=floor, exact=exact)


def quadratic_holds(m: int, n: int, k: int) -> bool:
    """Exact integer test of k^2 + m k - (m-1)(2n-1) <= 0."""
    return k * k + m * k - (m - 1) * (2 * n - 1) <= 0


def bound_holds(m: int, n: int, k: int) -> str:
    """GUARANTEED when k cross edges force nonpositive curvature on every
    cross edge between communities of sizes m and n.

    The closed form is asymmetric in (m, n) while community labels carry no
    orientation, so the test takes the conservative min over both
    orientations; sufficiency survives relabeling.
    """
    if k < 0:
        raise ValueError("edge count must be nonnegative")
    ok = quadratic_holds(m, n, k) and quadratic_holds(n, m, k)
    return GUARANTEED if ok else NOT_GUARANTEED


def min_community_bound(sizes) -> int:
    """min(sizes) - 1: the simple sufficient edge budget for any pair of
    communities in a graph with the given community sizes."""
    sizes = list(sizes)
    if not sizes:
        raise ValueError("need at least one community size")
    if any(s < 1 for s in sizes):
        raise ValueError("community sizes must be positive")
    return min(sizes) - 1
