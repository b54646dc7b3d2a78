"""Exception types raised by the library."""


class CapacityError(ValueError):
    """Polynomial degree above the supported cap."""


class DivergentIntegralError(ValueError):
    """Gaussian exponent for which the moment integral does not exist."""


class PreconditionError(ValueError):
    """Input violates a documented precondition (grid too coarse, bad support...)."""


class NumericalInstabilityError(ArithmeticError):
    """An extrapolation or other numerical procedure failed to settle."""
