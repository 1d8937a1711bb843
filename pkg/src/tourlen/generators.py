"""Analytic test objects: lattice grids and tour-edge subdivision.

A grid with at least one even side admits a unit-step Hamiltonian cycle
(snake through an even-sided axis and come back), which makes its optimal
tour length exactly n * spacing and its MST exactly (n - 1) * spacing.
Grids are the one family where the closed forms are not estimates but
identities, so they anchor most of the exactness tests.

Subdivision inserts k equidistant points along every edge of a given
tour; the optimal tour length of the enlarged instance equals that of the
original, which is the point-insertion invariance experiment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import GridSpecError, TourlenError
from .metric import Instance, NormPolicy, Tour


@dataclass(frozen=True)
class GridSpec:
    """Per-axis point counts and lattice spacing.

    Requires d >= 2: on a line there is no unit-step Hamiltonian cycle,
    so the grid closed forms do not apply. At least one side must be
    even for the same reason.
    """

    sides: tuple[int, ...]
    spacing: float = 1.0

    def __post_init__(self) -> None:
        sides = tuple(int(s) for s in self.sides)
        object.__setattr__(self, "sides", sides)
        if len(sides) < 2:
            raise GridSpecError(
                "grids need at least 2 axes; a 1-d lattice admits no "
                "unit-step Hamiltonian cycle"
            )
        if any(s < 2 for s in sides):
            raise GridSpecError(f"every side must be >= 2, got {sides}")
        if all(s % 2 == 1 for s in sides):
            raise GridSpecError(
                f"all sides odd ({sides}): no unit-step Hamiltonian cycle exists"
            )
        if self.spacing <= 0:
            raise GridSpecError(f"spacing must be positive, got {self.spacing}")

    @property
    def d(self) -> int:
        return len(self.sides)

    @property
    def n(self) -> int:
        count = 1
        for side in self.sides:
            count *= side
        return count


@dataclass(frozen=True)
class SubdivisionSpec:
    """Number of equidistant points inserted per tour edge."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise TourlenError(f"k must be non-negative, got {self.k}")


def make_grid(spec: GridSpec) -> Instance:
    """Lattice of prod(sides) points at integer multiples of spacing."""
    axes = [np.arange(side, dtype=float) * spec.spacing for side in spec.sides]
    points = np.array(list(itertools.product(*axes)))
    name = "grid" + "x".join(str(s) for s in spec.sides)
    return Instance(name=name, points=points, norm=NormPolicy())


def grid_optimal_length(spec: GridSpec) -> float:
    """Exact optimal tour length n * spacing of an even-sided grid."""
    return spec.n * spec.spacing


def subdivide_tour(instance: Instance, tour: Tour, spec: SubdivisionSpec) -> Instance:
    """Insert k equidistant interior points along every tour edge.

    The output keeps the original points first (same indices), followed
    by the inserted points edge by edge in tour order. Degenerate
    geometry that makes an inserted point collide with an existing one is
    rejected by the instance invariants.
    """
    if spec.k < 1:
        raise TourlenError("subdivision needs k >= 1; a no-op insertion is disallowed")
    order = list(tour.order)
    if sorted(order) != list(range(instance.n)):
        raise TourlenError("tour does not fit the instance")
    points = instance.points
    inserted = []
    for idx, a in enumerate(order):
        b = order[(idx + 1) % len(order)]
        seg_from, seg_to = points[a], points[b]
        for step in range(1, spec.k + 1):
            t = step / (spec.k + 1)
            inserted.append(seg_from + t * (seg_to - seg_from))
    combined = np.vstack([points, np.array(inserted)])
    return Instance(
        name=f"{instance.name}-sub{spec.k}",
        points=combined,
        norm=instance.norm,
    )
