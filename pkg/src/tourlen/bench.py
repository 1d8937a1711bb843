"""Corpus evaluation pipeline and report emitters.

Feed a directory of TSPLIB instances (plus optional tour files and a
reported-values CSV) through the full estimator family and emit:

* per-instance results with relative errors against the best available
  optimum (results.csv),
* aggregate error statistics per formula (table1.csv / table1.txt),
* raw error series per formula for point histograms (hist_<formula>.csv),
* the estimator-divergence curve family (fig1.csv),
* a tour-length audit comparing computed, reported, and Held-Karp values
  (audit.csv).

The optimum provenance precedence is EXACT (the instance is small enough
for the exact solver) > PUBLISHED_TOUR (a tour file is present) >
REPORTED (a value in the CSV). All emitted CSVs are deterministic:
instances are processed in name order and floats are printed with a
fixed format.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO

from . import tsplib
from .errors import TourlenError
from .estimators import (
    ErrorRecord,
    aggregate_errors,
    build_estimate_report,
    e_ratio,
    relative_error,
)
from .metric import Instance, build_instance, compute_stats, tour_length
from .mst import prim_mst
from .solvers import SolverLimit, exact_tour

FORMULA_NAMES = ("O1", "O2", "Ot1", "Ot2", "Otc1", "Otc2", "HK", "T_plus_w0", "T_ratio")

FIG1_CURVES = ("log2_d", "d_pow_log2_d", "d_pow_d", "d_pow_d_plus_1")


class OptSource(enum.Enum):
    EXACT = "EXACT"
    PUBLISHED_TOUR = "PUBLISHED_TOUR"
    REPORTED = "REPORTED"


@dataclass(frozen=True)
class RunConfig:
    """Where the corpus lives and which formulas to evaluate."""

    instance_dir: Path
    tour_dir: Path | None = None
    reported_values_path: Path | None = None
    output_dir: Path | None = None
    d_override: int | None = None
    formula_set: tuple[str, ...] = FORMULA_NAMES
    exact_cap: int = 15

    def __post_init__(self) -> None:
        object.__setattr__(self, "instance_dir", Path(self.instance_dir))
        if self.tour_dir is not None:
            object.__setattr__(self, "tour_dir", Path(self.tour_dir))
        if self.reported_values_path is not None:
            object.__setattr__(
                self, "reported_values_path", Path(self.reported_values_path)
            )
        if self.output_dir is not None:
            object.__setattr__(self, "output_dir", Path(self.output_dir))
        if not self.formula_set:
            raise TourlenError("formula_set may not be empty")
        unknown = set(self.formula_set) - set(FORMULA_NAMES)
        if unknown:
            raise TourlenError(f"unknown formulas: {sorted(unknown)}")


@dataclass
class InstanceResult:
    """Everything the pipeline computed for one instance.

    ``estimates`` and ``opt_value`` are in the instance's report units;
    ``mst_total``, ``w0``, ``w1`` stay unscaled Euclidean.
    """

    name: str
    n: int
    w0: float
    w1: float
    mst_total: float
    opt_source: OptSource | None
    opt_value: float | None
    estimates: dict[str, float] = field(default_factory=dict)
    errors: dict[str, float] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)


@dataclass
class AuditRecord:
    """Tour-length audit line for one instance with a published tour."""

    name: str
    n: int
    computed_length: float
    reported_opt: float | None
    hk_bound: float | None
    classification: str
    hk_anomaly: bool


def _load_reported(config: RunConfig) -> dict[str, tsplib.ReportedValues]:
    if config.reported_values_path is None:
        return {}
    records = tsplib.load_reported_values_file(config.reported_values_path)
    return {record.instance_name: record for record in records}


def _tour_path(config: RunConfig, name: str) -> Path | None:
    if config.tour_dir is None:
        return None
    for suffix in (".opt.tour", ".tour"):
        candidate = config.tour_dir / f"{name}{suffix}"
        if candidate.exists():
            return candidate
    return None


def _instance_files(config: RunConfig) -> list[Path]:
    if not config.instance_dir.is_dir():
        raise TourlenError(f"instance directory not readable: {config.instance_dir}")
    files = sorted(config.instance_dir.glob("*.tsp"))
    if not files:
        raise TourlenError(f"no .tsp files found in {config.instance_dir}")
    return files


def _find_optimum(
    config: RunConfig,
    instance: Instance,
    reported: dict[str, tsplib.ReportedValues],
    diagnostics: list[str],
) -> tuple[OptSource | None, float | None]:
    if instance.n <= config.exact_cap:
        opt = exact_tour(instance, SolverLimit(max_exact_n=config.exact_cap))
        return OptSource.EXACT, opt.length
    tour_file = _tour_path(config, instance.name)
    if tour_file is not None:
        try:
            raw_tour = tsplib.load_tour(tour_file, instance.n)
        except TourlenError as exc:
            diagnostics.append(f"tour file {tour_file.name} rejected: {exc}")
        else:
            order = [v - 1 for v in raw_tour.sequence]
            return OptSource.PUBLISHED_TOUR, tour_length(instance, order).length
    record = reported.get(instance.name)
    if record is not None and record.reported_opt is not None:
        return OptSource.REPORTED, record.reported_opt
    return None, None


def evaluate_corpus(config: RunConfig) -> list[InstanceResult]:
    """Run the full pipeline over every parseable instance in the corpus.

    A malformed instance is skipped with a diagnostic on the result list
    of its neighbours rather than aborting the run; an unreadable or
    empty directory is fatal.
    """
    reported = _load_reported(config)
    results: list[InstanceResult] = []
    skipped: list[str] = []
    for path in _instance_files(config):
        try:
            raw = tsplib.load_instance(path)
            instance = build_instance(raw)
        except TourlenError as exc:
            skipped.append(f"{path.name}: {exc}")
            continue
        results.append(_evaluate_one(config, instance, reported))
    if not results:
        raise TourlenError(
            "no instance in the corpus could be evaluated: " + "; ".join(skipped)
        )
    if skipped and results:
        results[0].diagnostics.extend(f"skipped {note}" for note in skipped)
    results.sort(key=lambda r: r.name)
    return results


def _evaluate_one(
    config: RunConfig,
    instance: Instance,
    reported: dict[str, tsplib.ReportedValues],
) -> InstanceResult:
    stats = compute_stats(instance)
    mst = prim_mst(instance)
    d = config.d_override or instance.d
    report = build_estimate_report(stats, mst.total, d)
    scale = instance.norm.report_scale

    diagnostics: list[str] = []
    opt_source, opt_value = _find_optimum(config, instance, reported, diagnostics)

    estimates: dict[str, float] = {}
    for name in config.formula_set:
        if name == "HK":
            record = reported.get(instance.name)
            if record is not None and record.hk_bound is not None:
                estimates[name] = record.hk_bound
            continue
        raw_value = {
            "O1": report.o1,
            "O2": report.o2,
            "Ot1": report.ot1,
            "Ot2": report.ot2,
            "Otc1": report.otc1,
            "Otc2": report.otc2,
            "T_plus_w0": report.lb_mst_plus_w0,
            "T_ratio": report.lb_mst_ratio,
        }[name]
        estimates[name] = raw_value * scale

    errors: dict[str, float] = {}
    if opt_value is not None:
        for name, value in estimates.items():
            errors[name] = relative_error(value, opt_value)

    return InstanceResult(
        name=instance.name,
        n=instance.n,
        w0=stats.w0,
        w1=stats.w1,
        mst_total=mst.total,
        opt_source=opt_source,
        opt_value=opt_value,
        estimates=estimates,
        errors=errors,
        diagnostics=diagnostics,
    )


def collect_error_records(results: list[InstanceResult]) -> list[ErrorRecord]:
    """Flatten per-instance errors into records, formula-major order."""
    records: list[ErrorRecord] = []
    for formula in FORMULA_NAMES:
        for result in results:
            if formula in result.errors:
                records.append(ErrorRecord(result.name, formula, result.errors[formula]))
    return records


def emit_table1(
    results: list[InstanceResult],
    csv_sink: IO,
    text_sink: IO | None = None,
) -> None:
    """Aggregate error statistics per formula, CSV plus aligned text."""
    records = collect_error_records(results)
    if not records:
        raise TourlenError("no relative errors available; nothing to aggregate")
    stats = aggregate_errors(records)
    csv_sink.write("formula,min_eps,max_eps,range,rms\n")
    for row in stats:
        csv_sink.write(
            f"{row.formula_name},{row.min_eps:.6f},{row.max_eps:.6f},"
            f"{row.range:.6f},{row.rms:.6f}\n"
        )
    if text_sink is not None:
        header = f"{'formula':<10}{'min eps':>12}{'max eps':>12}{'range':>12}{'rms':>12}"
        text_sink.write(header + "\n")
        text_sink.write("-" * len(header) + "\n")
        for row in stats:
            text_sink.write(
                f"{row.formula_name:<10}{row.min_eps:>12.2f}{row.max_eps:>12.2f}"
                f"{row.range:>12.2f}{row.rms:>12.2f}\n"
            )


def emit_fig1_curves(d_max: int, sink: IO) -> None:
    """Divergence ratio e(2^d + k, d) for the four curve families.

    The k families are log2(d), d^log2(d), d^d and d^(d+1); everything
    is evaluated in log space so the d = 100 tail stays finite.
    """
    if d_max < 1:
        raise TourlenError(f"d_max must be >= 1, got {d_max}")
    sink.write("d,curve,k,n,e\n")
    for d in range(1, d_max + 1):
        log2_d = math.log2(d) if d > 1 else 0.0
        ks = {
            "log2_d": log2_d,
            "d_pow_log2_d": float(d) ** log2_d,
            "d_pow_d": float(d) ** d,
            "d_pow_d_plus_1": float(d) ** (d + 1),
        }
        for curve in FIG1_CURVES:
            k = ks[curve]
            n = 2.0**d + k
            value = e_ratio(n, d)
            sink.write(f"{d},{curve},{k:.9e},{n:.9e},{value:.12f}\n")


def emit_histogram_data(
    results: list[InstanceResult], formula_name: str, sink: IO
) -> None:
    """Raw (instance, n, eps) series behind one formula's point histogram."""
    if formula_name not in FORMULA_NAMES:
        raise TourlenError(f"unknown formula {formula_name!r}")
    rows = [
        (result.n, result.name, result.errors[formula_name])
        for result in results
        if formula_name in result.errors
    ]
    if not rows:
        raise TourlenError(f"no errors available for formula {formula_name!r}")
    rows.sort()
    sink.write("instance,n,eps\n")
    for n, name, eps in rows:
        sink.write(f"{name},{n},{eps:.6f}\n")


def audit_tours(config: RunConfig, tolerance: float = 0.5) -> list[AuditRecord]:
    """Compare computed published-tour lengths against reported values.

    For every instance that has a tour file: compute the unrounded
    (report-scaled) length, pull the reported integer optimum and the
    Held-Karp bound from the CSV, classify the discrepancy, and flag the
    anomaly where the ingested HK bound exceeds the actual tour length.
    """
    reported = _load_reported(config)
    records: list[AuditRecord] = []
    for path in _instance_files(config):
        try:
            raw = tsplib.load_instance(path)
            instance = build_instance(raw)
        except TourlenError:
            continue
        tour_file = _tour_path(config, instance.name)
        if tour_file is None:
            continue
        try:
            raw_tour = tsplib.load_tour(tour_file, instance.n)
        except TourlenError as exc:
            records.append(
                AuditRecord(
                    name=instance.name,
                    n=instance.n,
                    computed_length=float("nan"),
                    reported_opt=None,
                    hk_bound=None,
                    classification=f"tour rejected: {exc}",
                    hk_anomaly=False,
                )
            )
            continue
        order = [v - 1 for v in raw_tour.sequence]
        computed = tour_length(instance, order).length
        entry = reported.get(instance.name)
        reported_opt = entry.reported_opt if entry else None
        hk_bound = entry.hk_bound if entry else None
        if reported_opt is None:
            classification = "no reported value"
        elif abs(computed - reported_opt) <= tolerance:
            classification = "within tolerance"
        elif computed < reported_opt:
            classification = "computed < reported"
        else:
            classification = "computed > reported"
        records.append(
            AuditRecord(
                name=instance.name,
                n=instance.n,
                computed_length=computed,
                reported_opt=reported_opt,
                hk_bound=hk_bound,
                classification=classification,
                hk_anomaly=hk_bound is not None and hk_bound > computed,
            )
        )
    if not records:
        raise TourlenError("audit found no instance with a tour file")
    records.sort(key=lambda r: r.name)
    return records


def _opt_cell(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def emit_audit_csv(records: list[AuditRecord], sink: IO) -> None:
    sink.write("instance,n,computed,reported_opt,hk,classification,hk_anomaly\n")
    for r in records:
        sink.write(
            f"{r.name},{r.n},{r.computed_length:.6f},{_opt_cell(r.reported_opt)},"
            f"{_opt_cell(r.hk_bound)},{r.classification},{int(r.hk_anomaly)}\n"
        )


def emit_results_csv(results: list[InstanceResult], sink: IO) -> None:
    """Wide per-instance table: stats, provenance, estimates, errors."""
    formulas = [f for f in FORMULA_NAMES if any(f in r.estimates for r in results)]
    header = ["instance", "n", "w0", "w1", "mst_total", "opt_source", "opt_value"]
    for f in formulas:
        header.append(f"est_{f}")
        header.append(f"eps_{f}")
    sink.write(",".join(header) + "\n")
    for r in results:
        row = [
            r.name,
            str(r.n),
            f"{r.w0:.6f}",
            f"{r.w1:.6f}",
            f"{r.mst_total:.6f}",
            r.opt_source.value if r.opt_source else "",
            _opt_cell(r.opt_value),
        ]
        for f in formulas:
            row.append(_opt_cell(r.estimates.get(f)))
            eps = r.errors.get(f)
            row.append("" if eps is None else f"{eps:.6f}")
        sink.write(",".join(row) + "\n")
