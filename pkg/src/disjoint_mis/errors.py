"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class GraphError(ValueError):
    """Invalid graph data or an out-of-range vertex id."""


class ParseError(GraphError):
    """Malformed graph6 or edge-list input."""


class CapExceeded(RuntimeError):
    """An exact enumeration was refused because the input exceeds a configured cap."""

    def __init__(self, what: str, value: float, cap: float, message: str | None = None):
        super().__init__(message or f"{what}: {value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class PreconditionError(ValueError):
    """The graph does not belong to the class an operation is defined on."""


class StrategyMismatch(PreconditionError):
    """A decision strategy was requested for a graph it does not apply to."""
