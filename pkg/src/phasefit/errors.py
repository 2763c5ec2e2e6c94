"""Exception types raised by phasefit."""


class PhasefitError(Exception):
    """Base class for all phasefit errors."""


class DomainError(PhasefitError, ValueError):
    """Argument outside the mathematical domain of an expression."""


class RangeError(PhasefitError, ValueError):
    """Argument outside the range where a representation is valid."""


class SingularDenominator(PhasefitError, ZeroDivisionError):
    pass


class ConvergenceFailure(PhasefitError, RuntimeError):
    pass


class ToleranceUnreachable(PhasefitError, RuntimeError):
    pass
