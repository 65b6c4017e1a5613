"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Raised when a graph file cannot be parsed; carries the 1-based line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class PartitionMismatchError(ValueError):
    """Community labels do not fit the graph (wrong length, gaps, empty community)."""


class InvalidMeasureError(ValueError):
    """Masses are not a probability distribution, or measures mix arithmetic modes."""


class InfiniteDistanceError(ValueError):
    """Transport between measures whose supports live in different components."""


class IsolatedVertexError(ValueError):
    """Lazy-walk measure requested at an isolated vertex with alpha < 1."""


class PotentialDomainError(KeyError):
    """A potential function is missing a vertex it is being evaluated on."""


class OracleLimitError(ValueError):
    """Instance exceeds the size the brute-force transport oracle accepts."""


class InvalidSizeError(ValueError):
    """Generator parameters outside the valid range."""


class PlanInfeasibleError(ValueError):
    """Closed-form transference plan would need a negative entry."""


class PartitionContradictionError(RuntimeError):
    """An edge-neighbourhood partition failed one of its counting identities.

    This signals either a reading bug in the partition construction or an
    input graph outside the complete-community setting the identities assume.
    """


class NoInterEdgesError(ValueError):
    """Statistic over intercommunity edges requested on a graph with none."""
