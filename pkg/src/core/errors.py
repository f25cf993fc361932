"""Exception hierarchy for Thinness Lab."""
from typing import Optional


class ThinnessError(ValueError):
    """Base class for all input and construction errors."""


class GraphError(ThinnessError):
    """Bad vertex ids, sizes or graph payloads."""


class LayoutError(ThinnessError):
    """A layout is not well-formed for its graph."""


class CotreeSyntaxError(ThinnessError):
    """A cotree expression could not be parsed."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InstanceError(ThinnessError):
    """An invalid coloring instance or certificate."""


class ConstructionError(ThinnessError):
    """A constructor could not produce a valid layout."""
