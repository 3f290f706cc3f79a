class BracketLabError(Exception):
    """Base class for domain errors (reported by the CLI with exit code 1)."""


class NvarsMismatch(BracketLabError, ValueError):
    pass


class NotCommuting(BracketLabError):
    """The Poisson bracket of the two inputs is nonzero."""


class HIsProperPower(BracketLabError):
    pass


class Inconsistent(BracketLabError):
    """A homogeneous piece is incompatible with being a power of H."""


class NonDivisible(BracketLabError):
    """An exact division required by a construction failed."""


class NotApplicable(BracketLabError):
    pass


class InvalidSpec(BracketLabError, ValueError):
    pass


class ParseError(BracketLabError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)


class TooLarge(BracketLabError):
    """A linear system exceeds the configured unknown cap."""
