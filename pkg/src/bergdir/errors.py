"""Exception types shared across the library."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of the operation."""


class DivergenceError(ArithmeticError):
    """A series was requested at a point where it does not converge."""


class NotConvergedError(ArithmeticError):
    """The term budget was exhausted before the stopping rule fired."""


class OverflowRangeError(OverflowError):
    """A linear-scale result exceeds the representable range; a log-scale
    variant of the operation should be used instead."""
