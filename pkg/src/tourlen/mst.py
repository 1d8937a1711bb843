"""Minimum spanning tree of the complete Euclidean graph via dense Prim."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .metric import Instance


@dataclass(frozen=True)
class MstResult:
    """Spanning-tree edge list (parent, child, weight) and total length.

    Weights are unscaled Euclidean; apply the instance's report scale at
    presentation time if needed.
    """

    edges: tuple[tuple[int, int, float], ...]
    total: float


def prim_mst(instance: Instance) -> MstResult:
    """Exact MST weight of the complete graph on the instance's points.

    Dense-graph Prim with an n-sized best-distance array: the complete
    graph makes the array variant optimal, no priority queue needed.
    Ties on the next vertex go to the lowest index, so the edge list is
    deterministic (the total is tie-invariant anyway).
    """
    points = instance.points
    n = instance.n
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    diff = points - points[0]
    best = np.sqrt(np.sum(diff * diff, axis=1))
    best[0] = np.inf
    parent = np.zeros(n, dtype=int)

    edges: list[tuple[int, int, float]] = []
    total = 0.0
    for _ in range(n - 1):
        masked = np.where(in_tree, np.inf, best)
        nxt = int(np.argmin(masked))  # argmin picks the lowest index on ties
        weight = float(masked[nxt])
        edges.append((int(parent[nxt]), nxt, weight))
        total += weight
        in_tree[nxt] = True
        diff = points - points[nxt]
        cand = np.sqrt(np.sum(diff * diff, axis=1))
        improved = ~in_tree & (cand < best)
        best[improved] = cand[improved]
        parent[improved] = nxt

    return MstResult(edges=tuple(edges), total=total)
