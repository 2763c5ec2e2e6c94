"""Phase-fitted 12-step symmetric multistep methods for y'' = f(x, y)."""
from .coeffs import (
    CoefficientSet,
    MethodId,
    PrecisionPolicy,
    classical_coefficients,
    coefficients,
    eval_b_closed,
    eval_b_taylor,
)
from .errors import (
    ConvergenceFailure,
    DomainError,
    PhasefitError,
    RangeError,
    SingularDenominator,
    ToleranceUnreachable,
)

__version__ = "0.1.0"
