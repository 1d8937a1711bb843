"""tourlen: closed-form TSP tour-length estimators, MST bounds, and a
TSPLIB evaluation harness."""

from .bench import (
    FORMULA_NAMES,
    AuditRecord,
    InstanceResult,
    OptSource,
    RunConfig,
    audit_tours,
    emit_audit_csv,
    emit_fig1_curves,
    emit_histogram_data,
    emit_results_csv,
    emit_table1,
    evaluate_corpus,
)
from .errors import (
    GridSpecError,
    InvalidInstanceError,
    InvalidTourError,
    SolverLimitError,
    TourlenError,
    TsplibFormatError,
    UnsupportedEdgeWeightError,
)
from .estimators import (
    Bounds,
    ErrorRecord,
    ErrorStats,
    EstimateReport,
    aggregate_errors,
    bounds,
    build_estimate_report,
    e_ratio,
    o1,
    o2,
    ot1,
    ot2,
    otc1,
    otc2,
    relative_error,
    violates_cycle_floor,
)
from .generators import (
    GridSpec,
    SubdivisionSpec,
    grid_optimal_length,
    make_grid,
    subdivide_tour,
)
from .metric import (
    Instance,
    InstanceStats,
    NormPolicy,
    Tour,
    build_instance,
    compute_stats,
    distance,
    distance_matrix,
    tour_length,
)
from .mst import MstResult, prim_mst
from .solvers import SolverLimit, best_start_nearest_town, exact_tour, nearest_town
from .tsplib import (
    RawInstanceFile,
    RawTourFile,
    ReportedValues,
    load_instance,
    load_reported_values,
    load_reported_values_file,
    load_tour,
    parse_instance,
    parse_tour,
    write_instance,
)

__version__ = "0.1.0"

__all__ = [
    "FORMULA_NAMES",
    "AuditRecord",
    "Bounds",
    "ErrorRecord",
    "ErrorStats",
    "EstimateReport",
    "GridSpec",
    "GridSpecError",
    "Instance",
    "InstanceResult",
    "InstanceStats",
    "InvalidInstanceError",
    "InvalidTourError",
    "MstResult",
    "NormPolicy",
    "OptSource",
    "RawInstanceFile",
    "RawTourFile",
    "ReportedValues",
    "RunConfig",
    "SolverLimit",
    "SolverLimitError",
    "SubdivisionSpec",
    "Tour",
    "TourlenError",
    "TsplibFormatError",
    "UnsupportedEdgeWeightError",
    "aggregate_errors",
    "audit_tours",
    "best_start_nearest_town",
    "bounds",
    "build_estimate_report",
    "build_instance",
    "compute_stats",
    "distance",
    "distance_matrix",
    "e_ratio",
    "emit_audit_csv",
    "emit_fig1_curves",
    "emit_histogram_data",
    "emit_results_csv",
    "emit_table1",
    "evaluate_corpus",
    "exact_tour",
    "grid_optimal_length",
    "load_instance",
    "load_reported_values",
    "load_reported_values_file",
    "load_tour",
    "make_grid",
    "nearest_town",
    "o1",
    "o2",
    "ot1",
    "ot2",
    "otc1",
    "otc2",
    "parse_instance",
    "parse_tour",
    "prim_mst",
    "relative_error",
    "subdivide_tour",
    "tour_length",
    "violates_cycle_floor",
    "write_instance",
]
