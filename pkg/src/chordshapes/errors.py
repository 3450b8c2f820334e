"""Exception types shared across the package."""


class ChordShapesError(Exception):
    """Base class for all library-specific errors."""


class DiagramError(ChordShapesError, ValueError):
    """Structurally invalid diagram, or an operation applied outside its domain."""


class ParseError(DiagramError):
    """Malformed diagram text.  Carries the 1-based line and column of the offence."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BijectionDomainError(DiagramError):
    """Input lies outside the domain of the requested surgery."""


class InfeasibleError(ChordShapesError):
    """The requested computation exceeds the configured search bounds."""


class ConsistencyError(ChordShapesError):
    """An internal exactness cross-check failed (library bug or corrupted data)."""


class TableCacheError(ConsistencyError):
    """An on-disk shape table disagrees with its digest or expected cardinality."""
