"""Closed-form tour-length models, MST-anchored estimators, and bounds.

Two families of closed forms are provided. The first pair models the
optimal tour length of a point set inside a d-dimensional container,
expressed through the set diameter w1:

    o1 = w1 * n / ((n^(1/d) - 1) * sqrt(d))
    o2 = w1 * n^(1 - 1/d) / sqrt(d)

o2 embodies the classical n^(1-1/d) scaling; o1 keeps the -1 of the
grid derivation and stays above the 2*w1 metric-cycle floor for d >= 2.
Their ratio e(n, d) = o2/o1 = 1 - n^(-1/d) measures how far apart the
two models drift.

The second family anchors on the MST total, which is a known-computable
quantity that accounts for at least half of the optimal tour:

    ot1 = T + w1 / ((n^(1/d) - 1) * sqrt(d))
    ot2 = T + w1 / (n^(1/d) * sqrt(d))
    otc1 = T + w1 / sqrt(d)          (the n = 2^d specialization)
    otc2 = T + w1 / (2 * sqrt(d))

Alongside these, `bounds` combines the four provable lower bounds and
two upper bounds on the optimal tour length.

All roots are evaluated in base-2 log space (n^(1/d) = 2^(log2(n)/d)) so
the astronomically large n of the divergence sweeps stay finite and the
n = 2^d case lands exactly on e = 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import TourlenError
from .metric import InstanceStats


def _nth_root(n: float, d: int) -> float:
    """n^(1/d) for n >= 1, exact on powers of two."""
    return 2.0 ** (math.log2(n) / d)


def o1(n: int, d: int, w1: float) -> float:
    """Container closed form with the (n^(1/d) - 1) denominator."""
    _check_args(n, d, w1)
    return w1 * n / ((_nth_root(n, d) - 1.0) * math.sqrt(d))


def o2(n: int, d: int, w1: float) -> float:
    """Classical n^(1-1/d) scaling form."""
    _check_args(n, d, w1)
    return w1 * 2.0 ** ((1.0 - 1.0 / d) * math.log2(n)) / math.sqrt(d)


def e_ratio(n: float, d: int) -> float:
    """Divergence ratio o2/o1 = 1 - n^(-1/d).

    ``n`` may be a (possibly huge) integer or float; the evaluation uses
    log2 so n = 2^d gives exactly 0.5.
    """
    if n < 2 or d < 1:
        raise TourlenError(f"e_ratio needs n >= 2 and d >= 1, got n={n}, d={d}")
    return 1.0 - 2.0 ** (-math.log2(n) / d)


def ot1(mst_total: float, n: int, d: int, w1: float) -> float:
    """MST total plus the o1-style correction term."""
    _check_args(n, d, w1, mst_total)
    return mst_total + w1 / ((_nth_root(n, d) - 1.0) * math.sqrt(d))


def ot2(mst_total: float, n: int, d: int, w1: float) -> float:
    """MST total plus the o2-style correction term."""
    _check_args(n, d, w1, mst_total)
    return mst_total + w1 / (_nth_root(n, d) * math.sqrt(d))


def otc1(mst_total: float, d: int, w1: float) -> float:
    """n-free estimator: MST total plus w1/sqrt(d)."""
    _check_args(2, d, w1, mst_total)
    return mst_total + w1 / math.sqrt(d)


def otc2(mst_total: float, d: int, w1: float) -> float:
    """n-free estimator: MST total plus w1/(2*sqrt(d))."""
    _check_args(2, d, w1, mst_total)
    return mst_total + w1 / (2.0 * math.sqrt(d))


def violates_cycle_floor(estimate: float, w1: float) -> bool:
    """True when an estimate falls below the 2*w1 metric-cycle minimum.

    Any Hamiltonian cycle of a metric graph is at least twice the
    diameter, so an estimate below that cannot describe a tour length.
    """
    return estimate < 2.0 * w1


@dataclass(frozen=True)
class Bounds:
    """Combined lower/upper bounds on the optimal tour length.

    ``consistent`` is False when ingested data made lower exceed upper;
    that is reported as a diagnostic, never raised.
    """

    lower: float
    upper: float
    consistent: bool


def bounds(stats: InstanceStats, mst_total: float) -> Bounds:
    """Best provable sandwich around the optimal tour length.

    lower = max(T + w0, T*n/(n-1), 2*w1, n*w0) and
    upper = min(2*T, n*w1), all in unscaled units. For n = 2 the
    degenerate cycle traverses its single edge twice and the sandwich
    collapses to equality.
    """
    n = stats.n
    lower = max(
        mst_total + stats.w0,
        mst_total * n / (n - 1),
        2.0 * stats.w1,
        n * stats.w0,
    )
    upper = min(2.0 * mst_total, n * stats.w1)
    return Bounds(lower=lower, upper=upper, consistent=lower <= upper * (1 + 1e-12))


@dataclass(frozen=True)
class EstimateReport:
    """Every estimator and bound evaluated on one instance (unscaled)."""

    o1: float
    o2: float
    ot1: float
    ot2: float
    otc1: float
    otc2: float
    lb_mst_plus_w0: float
    lb_mst_ratio: float
    lb_two_w1: float
    lb_n_w0: float
    ub_two_mst: float
    ub_n_w1: float
    e_ratio: float


def build_estimate_report(stats: InstanceStats, mst_total: float, d: int = 2) -> EstimateReport:
    """Evaluate the full estimator family for one instance."""
    n, w0, w1 = stats.n, stats.w0, stats.w1
    return EstimateReport(
        o1=o1(n, d, w1),
        o2=o2(n, d, w1),
        ot1=ot1(mst_total, n, d, w1),
        ot2=ot2(mst_total, n, d, w1),
        otc1=otc1(mst_total, d, w1),
        otc2=otc2(mst_total, d, w1),
        lb_mst_plus_w0=mst_total + w0,
        lb_mst_ratio=mst_total * n / (n - 1),
        lb_two_w1=2.0 * w1,
        lb_n_w0=n * w0,
        ub_two_mst=2.0 * mst_total,
        ub_n_w1=n * w1,
        e_ratio=e_ratio(n, d),
    )


@dataclass(frozen=True)
class ErrorRecord:
    """Relative error of one formula on one instance, in percent."""

    instance_name: str
    formula_name: str
    epsilon: float


@dataclass(frozen=True)
class ErrorStats:
    """Aggregate epsilon statistics for one formula, in percent."""

    formula_name: str
    min_eps: float
    max_eps: float
    range: float
    rms: float


def relative_error(estimate: float, opt: float) -> float:
    """Percentage error 100*(estimate/opt - 1)."""
    if opt <= 0:
        raise TourlenError(f"optimum must be positive, got {opt}")
    return 100.0 * (estimate / opt - 1.0)


def aggregate_errors(records: list[ErrorRecord]) -> list[ErrorStats]:
    """Per-formula min/max/range/rms of epsilon, in first-seen order."""
    if not records:
        raise TourlenError("aggregate_errors needs at least one record")
    order: list[str] = []
    grouped: dict[str, list[float]] = {}
    for record in records:
        if record.formula_name not in grouped:
            order.append(record.formula_name)
            grouped[record.formula_name] = []
        grouped[record.formula_name].append(record.epsilon)
    stats = []
    for name in order:
        eps = grouped[name]
        lo, hi = min(eps), max(eps)
        rms = math.sqrt(sum(e * e for e in eps) / len(eps))
        stats.append(ErrorStats(name, lo, hi, hi - lo, rms))
    return stats


def _check_args(n: int, d: int, w1: float, mst_total: float = 0.0) -> None:
    if n < 2:
        raise TourlenError(f"need n >= 2, got {n}")
    if d < 1:
        raise TourlenError(f"need d >= 1, got {d}")
    if w1 <= 0:
        raise TourlenError(f"need w1 > 0, got {w1}")
    if mst_total < 0:
        raise TourlenError(f"MST total cannot be negative, got {mst_total}")
