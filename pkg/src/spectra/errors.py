"""Exception hierarchy shared by all spectra modules.

Caller errors (bad input, violated preconditions) derive from ValueError so
they behave sanely in scripts; algorithmic failures derive from RuntimeError.
Every exception also derives from SpectraError for blanket handling.
"""


class SpectraError(Exception):
    """Base class for every error raised by this package."""


class GraphInputError(SpectraError, ValueError):
    """Invalid graph construction input."""


class SelfLoopError(GraphInputError):
    """An edge joins a vertex to itself."""


class VertexRangeError(GraphInputError):
    """An edge endpoint is outside 0..n-1."""


class BadParamsError(SpectraError, ValueError):
    """Family or operation parameters outside the documented domain."""


class ParseError(SpectraError, ValueError):
    """Malformed edge-list or graph6 input."""


class DisconnectedError(SpectraError, ValueError):
    """Operation requires a connected graph."""


class NotATreeError(SpectraError, ValueError):
    """Operation requires a tree."""


class BadPartitionError(SpectraError, ValueError):
    """Vertex classes do not partition the vertex set or B is not a valid quotient."""


class BadSetsError(SpectraError, ValueError):
    """Vertex subsets are empty, overlapping, or out of range."""


class InvalidShiftError(SpectraError, ValueError):
    """Rank-one shift alpha leaves the shifted Laplacian indefinite."""


class DomainError(SpectraError, ValueError):
    """Trace-statistics bound evaluated outside its hypotheses."""


class NoConvergenceError(SpectraError, RuntimeError):
    """Eigensolver failed to reach the target off-diagonal norm."""


class BudgetExceededError(SpectraError, RuntimeError):
    """Requested enumeration size exceeds the hard safety budget."""
