class RtmError(ValueError):
    """Base class for domain errors raised by this package."""


class ForestParseError(RtmError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse forest {text!r} at position {position}: {reason}")


class DomainError(RtmError):
    """An argument lies outside the domain of the operation."""


class ConsistencyError(RuntimeError):
    """An invariant that should be unreachable was violated (a bug, not bad input)."""


class DimensionError(RtmError):
    """Rows of a matrix have different lengths or gradings."""
