"""Exception types shared across the package."""


class SRDomError(Exception):
    """Base class for all errors raised by srdom."""


class InvalidParameter(SRDomError, ValueError):
    """A size or family parameter is outside its allowed range."""


class InvalidInput(SRDomError, ValueError):
    """Malformed graph, labeling or file contents."""


class SizeLimitError(SRDomError):
    """The graph is too large for the requested exact engine."""

    def __init__(self, vertex_count, cap, method):
        self.vertex_count = vertex_count
        self.cap = cap
        self.method = method
        super().__init__(
            f"{method}: graph has {vertex_count} vertices, cap is {cap}"
        )


class ExcludedCase(SRDomError):
    """The requested construction is not defined for this parameter."""


class Infeasible(SRDomError):
    """No labeling satisfies both conditions (unreachable for simple graphs)."""
