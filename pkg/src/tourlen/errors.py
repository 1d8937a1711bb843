"""Exception types raised by tourlen.

All inherit from ValueError so callers that only care about "bad input"
can catch the usual thing, while tests and pipelines can discriminate.
"""


class TourlenError(ValueError):
    """Base class for all tourlen rejections."""


class TsplibFormatError(TourlenError):
    """Malformed or out-of-contract TSPLIB content."""


class UnsupportedEdgeWeightError(TsplibFormatError):
    """EDGE_WEIGHT_TYPE outside the supported {EUC_2D, CEIL_2D, ATT} set."""


class InvalidInstanceError(TourlenError):
    """Point set violating instance invariants (duplicates, size, shape)."""


class InvalidTourError(TourlenError):
    """Vertex sequence that is not a permutation of the instance."""


class SolverLimitError(TourlenError):
    """Exact solve requested above the configured size cap."""


class GridSpecError(TourlenError):
    """Grid specification without a unit-step Hamiltonian cycle."""
