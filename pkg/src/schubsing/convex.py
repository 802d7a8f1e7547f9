"""
Exact convex-hull membership for small sets of lattice points.

By Caratheodory's theorem a point of ``R^n`` lies in the convex hull of ``S``
iff it is a convex combination of some affinely independent subset of at most
``n + 1`` points of ``S``. Each subset gives a square-or-tall linear system
solved with ``Fraction`` elimination, so there is no rounding anywhere.
Hull membership is affine invariant, so simple-root coordinates can be used
directly.

>>> in_convex_hull((1, 1), [(0, 0), (2, 0), (0, 2)])
True
>>> in_convex_hull((2, 2), [(0, 0), (2, 0), (0, 2)])
False
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations
from typing import Optional

__all__ = ["in_convex_hull", "convex_coefficients"]


def _solve(columns: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[list[Fraction]]:
    """
    Unique solution ``c`` of ``sum c_j columns[j] = target`` with ``sum c_j = 1``,
    or None when the columns are affinely dependent or the system is inconsistent.
    """
    k = len(columns)
    rows = [[Fraction(col[i]) for col in columns] + [Fraction(target[i])]
            for i in range(len(target))]
    rows.append([Fraction(1)] * k + [Fraction(1)])
    r = 0
    for c in range(k):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            return None  # dependent columns
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    if any(row[k] != 0 for row in rows[r:]):
        return None
    return [rows[i][k] for i in range(k)]


def convex_coefficients(point: Sequence[int],
                        points: Sequence[Sequence[int]]) -> Optional[dict[tuple, Fraction]]:
    """Nonnegative weights summing to 1 that express ``point``, or None."""
    pts = sorted({tuple(p) for p in points})
    if not pts:
        return None
    n = len(point)
    for size in range(1, min(n + 1, len(pts)) + 1):
        for subset in combinations(pts, size):
            c = _solve(subset, point)
            if c is not None and all(v >= 0 for v in c):
                return {p: v for p, v in zip(subset, c) if v}
    return None


def in_convex_hull(point: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    return convex_coefficients(point, points) is not None
