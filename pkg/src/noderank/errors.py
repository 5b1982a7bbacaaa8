"""Exception types raised across the noderank package.

Everything derives from :class:`NoderankError` so callers can catch the
whole family at once.  The CLI maps these onto stable exit codes:
usage/plan problems -> 1, malformed input data -> 2, numerical or
capacity failures -> 3.
"""

__all__ = [
    "NoderankError",
    "MalformedLineError",
    "EmptyInputError",
    "HeaderMismatchError",
    "DuplicateNodeIdError",
    "FieldParseError",
    "InfeasibleSpecError",
    "DegenerateGraphError",
    "NoConvergenceError",
    "IllConditionedError",
    "ZeroMatrixError",
    "SizeMismatchError",
    "MatrixTooLargeError",
    "PlanInfeasibleError",
    "EmptySeedsError",
    "UnknownMetricError",
]


class NoderankError(Exception):
    """Base class for all noderank errors."""


# --- input / parsing -------------------------------------------------------

class MalformedLineError(NoderankError):
    """An edge-list line did not contain exactly two endpoint tokens."""

    def __init__(self, line_no: int, line: str = ""):
        self.line_no = line_no
        self.line = line
        super().__init__(f"line {line_no}: expected two endpoint tokens, got {line!r}")


class EmptyInputError(NoderankError):
    """The edge-list stream contained no edge lines at all."""


class HeaderMismatchError(NoderankError):
    """A node-table header row did not match the expected column names."""


class DuplicateNodeIdError(NoderankError):
    """The same node id appeared twice in one node table."""


class FieldParseError(NoderankError):
    """A numeric cell of a node table failed to parse."""

    def __init__(self, row: int, column: str, value: str):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(f"row {row}, column {column!r}: cannot parse {value!r}")


# --- construction / planning ----------------------------------------------

class InfeasibleSpecError(NoderankError):
    """A generator request cannot be satisfied (edge target out of range, too few nodes)."""


class PlanInfeasibleError(NoderankError):
    """A node-removal plan violates 0 < step <= max <= 1 or trials >= 1."""


class EmptySeedsError(NoderankError):
    """A spread simulation was started without any seed node."""


class UnknownMetricError(NoderankError):
    """Histogram or ranking was asked for a metric that does not exist."""


# --- numerics ---------------------------------------------------------------

class DegenerateGraphError(NoderankError):
    """The graph is too small (or too disconnected) for the requested quantity."""


class NoConvergenceError(NoderankError):
    """Power iteration did not settle within the iteration budget.

    Typically a bipartite-like oscillation; retry with damping.
    """

    def __init__(self, max_iter: int):
        self.max_iter = max_iter
        super().__init__(f"no convergence after {max_iter} iterations")


class IllConditionedError(NoderankError):
    """The total-relation linear solve left a residual above tolerance."""


class ZeroMatrixError(NoderankError):
    """The direct-relation matrix is identically zero; nothing to normalize."""


class SizeMismatchError(NoderankError):
    """Two per-node inputs disagree on the number of nodes."""


class MatrixTooLargeError(NoderankError):
    """Dense relation analysis refused: the node count exceeds the O(N^2) cap."""
