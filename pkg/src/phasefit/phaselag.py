"""Phase-lag function of a symmetric 12-step method and its principal truncation error.

For the test equation y'' = -sigma**2 y with ``s = sigma*h`` the method
reduces to ``sum_j A_j (y_{n+j} + y_{n-j}) + A_0 y_n = 0`` with
``A_j = a_{6-j} + s**2 b_{6-j}``.  The phase lag is

    PL(s, v) = (2 sum_{j>=1} A_j cos(j s) + A_0) / (2 sum_{j>=1} j**2 A_j).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath
import numpy as np

from .coeffs import A_COEFFS, DEFAULT_POLICY, MethodId, PrecisionPolicy, b_half_mp, coefficients
from .errors import SingularDenominator

HALF = 6
_J = np.arange(1, HALF + 1)


@dataclass(frozen=True)
class CharCoefficients:
    A: np.ndarray  # A_0 .. A_6
    s: float
    v: float


def _A_from_b(b, s):
    a = np.asarray(A_COEFFS, dtype=float)
    j = np.arange(HALF + 1)
    return a[HALF - j] + s * s * np.asarray(b)[HALF - j]


def char_coeffs(method, s: float, v: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> CharCoefficients:
    cs = coefficients(method, v, policy)
    return CharCoefficients(A=_A_from_b(cs.b, float(s)), s=float(s), v=float(v))


def _quotient(A, s):
    num = A[0] + 2.0 * np.sum(A[1:] * np.cos(_J * s))
    den = 2.0 * np.sum(_J**2 * A[1:])
    scale = 2.0 * np.sum(_J**2 * np.abs(A[1:]))
    if abs(den) < 1e-14 * max(scale, 1.0):
        raise SingularDenominator(f"phase-lag denominator vanishes at s = {s!r}")
    return num / den


def _mp_A(half, s):
    """A_0..A_6 as mpf from b_1..b_6 (mpf) at mpf ``s``."""
    b = [mpmath.mpf(0)] + list(half)
    s2 = s * s
    return [A_COEFFS[HALF - j] + s2 * b[HALF - j] for j in range(HALF + 1)]


def _mp_quotient(A, s):
    num = A[0] + 2 * mpmath.fsum(A[j] * mpmath.cos(j * s) for j in range(1, HALF + 1))
    den = 2 * mpmath.fsum(j * j * A[j] for j in range(1, HALF + 1))
    if den == 0:
        raise SingularDenominator(f"phase-lag denominator vanishes at s = {s!r}")
    return num / den


def phase_lag(method, s: float, v: float, policy: PrecisionPolicy = DEFAULT_POLICY, *, dps: int | None = None) -> float:
    """PL(s, v).

    With ``dps`` the whole evaluation (coefficients included) runs in mpmath
    at that many digits; needed when PL itself is far below double epsilon,
    e.g. the classical method at small ``s``.
    """
    if dps is None:
        return float(_quotient(char_coeffs(method, s, v, policy).A, float(s)))
    with mpmath.workdps(dps):
        s_mp = mpmath.mpf(s)
        A = _mp_A(b_half_mp(method, v, dps), s_mp)
        return float(_mp_quotient(A, s_mp))


def phase_lag_curve(method, s_values, v: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> np.ndarray:
    """PL over an array of ``s`` at fixed ``v`` (double precision)."""
    s = np.asarray(s_values, dtype=float)
    b = coefficients(method, v, policy).b
    a = np.asarray(A_COEFFS, dtype=float)
    j = np.arange(HALF + 1)
    A = a[HALF - j][None, :] + (s * s)[:, None] * b[HALF - j][None, :]
    num = A[:, 0] + 2.0 * np.sum(A[:, 1:] * np.cos(np.outer(s, _J)), axis=1)
    den = 2.0 * (A[:, 1:] @ (_J**2))
    scale = 2.0 * (np.abs(A[:, 1:]) @ (_J**2))
    if np.any(np.abs(den) < 1e-14 * np.maximum(scale, 1.0)):
        raise SingularDenominator("phase-lag denominator vanishes on the requested s range")
    return num / den


def _central_difference(f, x, order, step):
    # k-th central difference; error expands in even powers of step
    total = mpmath.mpf(0)
    for m in range(order + 1):
        total += (-1) ** m * comb(order, m) * f(x + (mpmath.mpf(order) / 2 - m) * step)
    return total / step**order


def phase_lag_derivative(method, s: float, v: float, order: int, *, dps: int = 50, levels: int = 3):
    """Estimate d^order PL / ds^order at (s, v).

    Central differences with step ``max(1e-3, 1e-2*s)`` refined by Richardson
    extrapolation over ``levels`` halvings, evaluated in ``dps``-digit
    arithmetic so that round-off does not swamp high orders. Returns
    ``(value, error_estimate)``.
    """
    if not 1 <= order <= 8:
        raise ValueError("order must be in 1..8")
    with mpmath.workdps(dps):
        half = b_half_mp(method, v, dps)

        def pl(x):
            return _mp_quotient(_mp_A(half, x), x)

        s_mp = mpmath.mpf(s)
        step = mpmath.mpf(max(1e-3, 1e-2 * abs(float(s))))
        table = [[_central_difference(pl, s_mp, order, step / 2**k)] for k in range(levels)]
        for k in range(1, levels):
            for col in range(1, k + 1):
                factor = mpmath.mpf(4) ** col
                prev = table[k][col - 1]
                table[k].append(prev + (prev - table[k - 1][col - 1]) / (factor - 1))
        value = table[-1][-1]
        error = abs(value - table[-1][-2]) if levels > 1 else mpmath.inf
        return float(value), float(error)


# ---------------------------------------------------------------------------
# principal local truncation error

PLTE_FACTOR = Fraction(16301796103, 290594304000)

#: terms (derivative order, power of omega, integer weight) multiplying h**14.
PLTE_TERMS = {
    MethodId.CLASSICAL: ((14, 0, 1),),
    MethodId.PFD0: ((12, 2, 1), (14, 0, 1)),
    MethodId.PFD1: ((10, 4, 1), (12, 2, 2), (14, 0, 1)),
    MethodId.PFD2: ((8, 6, 1), (10, 4, 3), (12, 2, 3), (14, 0, 1)),
    MethodId.PFD3: ((6, 8, 1), (8, 6, 4), (10, 4, 6), (12, 2, 4), (14, 0, 1)),
    MethodId.PFD4: ((4, 10, 1), (6, 8, 5), (8, 6, 10), (10, 4, 10), (12, 2, 5), (14, 0, 1)),
    MethodId.PFD5: ((2, 12, 1), (4, 10, 6), (6, 8, 15), (8, 6, 20), (10, 4, 15), (12, 2, 6), (14, 0, 1)),
}


def plte_estimate(method, y_derivs, omega, h):
    """Principal local truncation error ``PLTE_FACTOR * coeff(y, omega) * h**14``.

    ``y_derivs`` maps derivative order to value (a sequence is read as
    y^(2), y^(3), ..., y^(14)). Exact inputs (ints, Fractions) give an exact
    result.
    """
    method = MethodId.parse(method)
    if not hasattr(y_derivs, "keys"):
        y_derivs = {k + 2: val for k, val in enumerate(y_derivs)}
    total = 0
    for order, power, weight in PLTE_TERMS[method]:
        if order not in y_derivs:
            raise KeyError(f"y^({order}) is required for {method.label}")
        total += weight * y_derivs[order] * omega**power
    return PLTE_FACTOR * total * h**14


def sine_derivatives(omega, x, orders=range(2, 15)):
    """Derivatives of sin(omega x); convenient input for :func:`plte_estimate`."""
    out = {}
    for k in orders:
        phase = x * omega + k * math.pi / 2
        out[k] = omega**k * math.sin(phase)
    return out
