"""Exact and heuristic tour construction.

`exact_tour` is a Held-Karp subset dynamic program: provably optimal,
O(n^2 * 2^n) time and O(n * 2^n) space, so it is capped by a
:class:`SolverLimit` (default 15 vertices). It exists to provide ground
truth for bound checks and small generated instances.

`nearest_town` is the greedy construction that repeatedly walks to the
nearest unvisited vertex and closes the cycle at the end; running it from
every start and keeping the shortest result derandomizes the choice of
starting vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SolverLimitError, TourlenError
from .metric import Instance, Tour, distance_matrix


@dataclass(frozen=True)
class SolverLimit:
    """Size cap guarding the exponential exact solver."""

    max_exact_n: int = 15

    def __post_init__(self) -> None:
        if not (3 <= self.max_exact_n <= 20):
            raise TourlenError(
                f"max_exact_n must be within [3, 20], got {self.max_exact_n}"
            )


def exact_tour(instance: Instance, limit: SolverLimit | int | None = None) -> Tour:
    """Provably optimal Hamiltonian cycle via subset DP.

    Raises :class:`SolverLimitError` above the size cap. The returned
    length is in report units; ties between optimal tours are broken
    deterministically (lowest vertex index at every argmin).
    """
    if limit is None:
        limit = SolverLimit()
    elif isinstance(limit, int):
        limit = SolverLimit(max_exact_n=limit)
    n = instance.n
    if n > limit.max_exact_n:
        raise SolverLimitError(
            f"exact_tour capped at n = {limit.max_exact_n}, instance has n = {n}"
        )

    dist = distance_matrix(instance)
    size = 1 << n
    dp = np.full((size, n), np.inf)
    parent = np.full((size, n), -1, dtype=np.int8)
    dp[1][0] = 0.0

    for mask in range(1, size, 2):  # every state includes vertex 0
        row = dp[mask]
        cand = row[:, None] + dist
        col_min = cand.min(axis=0)
        col_arg = cand.argmin(axis=0)
        for j in range(1, n):
            if mask & (1 << j):
                continue
            nxt = mask | (1 << j)
            if col_min[j] < dp[nxt][j]:
                dp[nxt][j] = col_min[j]
                parent[nxt][j] = col_arg[j]

    full = size - 1
    totals = dp[full] + dist[:, 0]
    totals[0] = np.inf
    last = int(np.argmin(totals))
    length = float(totals[last])

    order = []
    mask, node = full, last
    while node != -1:
        order.append(node)
        mask, node = mask ^ (1 << node), int(parent[mask][node])
    order.reverse()
    assert order[0] == 0 and len(order) == n
    return Tour(order=tuple(order), length=length * instance.norm.report_scale)


def nearest_town(instance: Instance, start: int = 0) -> Tour:
    """Greedy tour: always move to the nearest unvisited vertex.

    Equidistant candidates resolve to the lowest vertex index, which
    keeps the construction deterministic on grids where ties are
    pervasive.
    """
    n = instance.n
    if not (0 <= start < n):
        raise TourlenError(f"start index {start} out of range for n = {n}")
    dist = distance_matrix(instance)
    visited = np.zeros(n, dtype=bool)
    visited[start] = True
    order = [start]
    length = 0.0
    current = start
    for _ in range(n - 1):
        row = np.where(visited, np.inf, dist[current])
        nxt = int(np.argmin(row))
        length += float(row[nxt])
        visited[nxt] = True
        order.append(nxt)
        current = nxt
    length += float(dist[current, start])
    return Tour(order=tuple(order), length=length * instance.norm.report_scale)


def best_start_nearest_town(instance: Instance) -> Tour:
    """Shortest nearest-town tour over all n starting vertices.

    The simple derandomization of the greedy construction: ties keep the
    lowest starting index.
    """
    if instance.n < 3:
        raise TourlenError("best_start_nearest_town needs n >= 3")
    best: Tour | None = None
    for start in range(instance.n):
        candidate = nearest_town(instance, start)
        if best is None or candidate.length < best.length:
            best = candidate
    assert best is not None
    return best
