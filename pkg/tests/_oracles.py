"""Independent reference implementations used only by the tests.

Everything here is deliberately written without touching tourlen's code
paths: brute-force permutation scan for optimal tours, Kruskal with
union-find for the MST, and plain double loops for pairwise extremes.
"""

from __future__ import annotations

import itertools
import math


def euclid(a, b) -> float:
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


def brute_force_tour(points) -> tuple[list[int], float]:
    """Optimal cycle by scanning (n-1)!/2 permutations. n <= 10 only."""
    pts = [tuple(p) for p in points]
    n = len(pts)
    assert 2 <= n <= 10, "factorial oracle is for tiny instances"
    best_len = math.inf
    best_order: list[int] = []
    rest = list(range(1, n))
    for perm in itertools.permutations(rest):
        if n > 2 and perm[0] > perm[-1]:
            continue  # each cycle direction counted once
        order = [0, *perm]
        total = 0.0
        for i in range(n):
            total += euclid(pts[order[i]], pts[order[(i + 1) % n]])
        if total < best_len:
            best_len = total
            best_order = order
    return best_order, best_len


def kruskal_mst_total(points) -> float:
    """MST weight via sorted edges and union-find."""
    pts = [tuple(p) for p in points]
    n = len(pts)
    edges = sorted(
        (euclid(pts[i], pts[j]), i, j)
        for i in range(n)
        for j in range(i + 1, n)
    )
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = 0.0
    used = 0
    for weight, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            total += weight
            used += 1
            if used == n - 1:
                break
    return total


def pairwise_extremes(points) -> tuple[float, float]:
    """(min, max) pairwise distance by definition."""
    pts = [tuple(p) for p in points]
    lo, hi = math.inf, 0.0
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = euclid(pts[i], pts[j])
            lo = min(lo, d)
            hi = max(hi, d)
    return lo, hi


def cyclic_length(points, order) -> float:
    pts = [tuple(p) for p in points]
    return sum(
        euclid(pts[order[i]], pts[order[(i + 1) % len(order)]])
        for i in range(len(order))
    )
