"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Graph text does not follow the edge-list format."""

    def __init__(self, message: str, lineno: int | None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


class HeaderError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class PreconditionError(ValueError):
    """Inputs are well-formed but violate an operation's precondition."""


class MemoryBudgetError(PreconditionError):
    pass


class SizeLimitError(PreconditionError):
    pass


class ConsistencyError(RuntimeError):
    """An internal arithmetic identity failed; indicates a bug."""
