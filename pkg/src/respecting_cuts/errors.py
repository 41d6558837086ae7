"""Exception types and shared limits."""

# Largest query set the subset-enumeration paths accept by default.  A set of
# size k drives 2**k - 1 subset evaluations, so this is a safety valve, not a
# hard mathematical bound.  Callers can override it per call; the command line
# reads RESPECTING_CUTS_MAX_K.
DEFAULT_MAX_K = 16


class GraphInputError(ValueError):
    """Invalid edge list handed to graph construction."""

    def __init__(self, message, edge_index=None):
        super().__init__(message)
        self.edge_index = edge_index


class EndpointRangeError(GraphInputError):
    """An edge endpoint falls outside the vertex range."""


class SelfLoopError(GraphInputError):
    """An edge joins a vertex to itself."""


class EdgeWeightError(GraphInputError):
    """An edge weight is below one."""


class TreeStructureError(ValueError):
    """Chosen edges do not form a spanning tree rooted where requested."""


class QueryError(ValueError):
    """A query set violates its preconditions (root member, duplicate,
    out-of-range vertex, empty or improper set)."""


class KLimitExceeded(QueryError):
    """Query set larger than the configured subset-enumeration limit.

    Carries the offending size so callers can fall back to a direct
    computation instead.
    """

    def __init__(self, k, limit):
        super().__init__(
            f"query set of size {k} exceeds the configured limit of {limit}"
        )
        self.k = k
        self.limit = limit


class UniverseMismatchError(ValueError):
    """Sets handed to an elementwise operation disagree with the declared
    universe."""
