"""Coefficients of the 12-step symmetric method and its phase-fitted variants.

All seven methods share the same ``a`` vector; only ``b`` depends on the
fitting parameter ``v = omega * h``.  For the phase-fitted variants ``b`` is
available in two representations:

* closed forms, exact but badly cancelling as ``v -> 0``;
* truncated power series, accurate only for small ``v``.

:func:`coefficients` switches between them according to a
:class:`PrecisionPolicy`.
"""
from __future__ import annotations

import enum
import math
import types
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from ..errors import DomainError, RangeError
from ._closed_forms import CLOSED_FORMS
from ._taylor_series import SERIES

__all__ = [
    "A_COEFFS",
    "CLASSICAL_B",
    "CoefficientSet",
    "DEFAULT_POLICY",
    "MethodId",
    "PrecisionPolicy",
    "Source",
    "b_half_mp",
    "classical_coefficients",
    "coefficients",
    "eval_b_closed",
    "eval_b_taylor",
    "mirror",
    "taylor_series",
]

STEPS = 12

A_COEFFS = (1, -2, 2, -1, 0, 0, 0, 0, 0, -1, 2, -2, 1)

#: b_1 .. b_6 of the classical method (b_0 = 0, the rest by symmetry).
CLASSICAL_B = (
    Fraction(90987349, 53222400),
    Fraction(-114798419, 26611200),
    Fraction(270875723, 17740800),
    Fraction(-67855831, 2217600),
    Fraction(50277247, 985600),
    Fraction(-253491379, 4435200),
)

_A = np.array(A_COEFFS, dtype=float)
_A.setflags(write=False)


class MethodId(enum.Enum):
    CLASSICAL = "classical"
    PFD0 = "pf-d0"
    PFD1 = "pf-d1"
    PFD2 = "pf-d2"
    PFD3 = "pf-d3"
    PFD4 = "pf-d4"
    PFD5 = "pf-d5"

    @property
    def derivatives(self):
        """Number of phase-lag derivatives eliminated, or ``None`` for classical."""
        if self is MethodId.CLASSICAL:
            return None
        return int(self.value[-1])

    @property
    def label(self) -> str:
        return "Classical" if self is MethodId.CLASSICAL else self.value.upper()

    @classmethod
    def parse(cls, name) -> "MethodId":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        if key.startswith("pfd"):
            key = "pf-d" + key[3:]
        try:
            return cls(key)
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown method {name!r}; expected one of {valid}") from None

    @classmethod
    def fitted(cls):
        return [m for m in cls if m is not cls.CLASSICAL]


class Source(enum.Enum):
    CLOSED_FORM = "closed-form"
    TAYLOR = "taylor"
    CONSTANT = "constant"


@dataclass(frozen=True)
class PrecisionPolicy:
    """Where to switch from the series to the closed forms, and how hard to work.

    Below ``taylor_threshold`` the truncated series is used. Between the
    threshold and ``extended_precision_limit`` the closed forms are evaluated
    with mpmath at ``extended_digits`` plus enough guard digits to absorb the
    cancellation (roughly 13 digits per decade of ``1/v``). Above the limit
    the closed forms run in native floats.
    """

    taylor_threshold: float = 0.05
    extended_precision_limit: float = 1.0
    extended_digits: int = 30

    def __post_init__(self):
        if not 0 < self.taylor_threshold < self.extended_precision_limit:
            raise ValueError("need 0 < taylor_threshold < extended_precision_limit")
        if self.extended_digits < 30:
            raise ValueError("extended_digits must be at least 30")

    def working_digits(self, v: float) -> int:
        guard = math.ceil(14 * math.log10(1.0 / v)) if v < 1.0 else 0
        return self.extended_digits + max(guard, 0)


DEFAULT_POLICY = PrecisionPolicy()


@dataclass(frozen=True)
class CoefficientSet:
    a: np.ndarray
    b: np.ndarray
    v: float
    source: Source

    @property
    def b_half(self) -> np.ndarray:
        """b_1 .. b_6."""
        return self.b[1:7]


def mirror(half) -> np.ndarray:
    """Full 13-entry b-vector from b_1..b_6 (b_0 = b_12 = 0, b_j = b_{12-j})."""
    half = [float(x) for x in half]
    return np.array([0.0] + half + half[-2::-1] + [0.0])


def _frozen(arr):
    arr.setflags(write=False)
    return arr


def classical_coefficients() -> CoefficientSet:
    return CoefficientSet(a=_A, b=_frozen(mirror(CLASSICAL_B)), v=0.0, source=Source.CONSTANT)


def _require_fitted(method: MethodId) -> int:
    method = MethodId.parse(method)
    if method is MethodId.CLASSICAL:
        raise ValueError("classical method has constant coefficients")
    return method.derivatives


def taylor_series(method) -> tuple:
    """Exact series coefficients (Fractions) of b_1..b_6 in powers of v**2."""
    i = _require_fitted(method)
    return tuple(tuple(Fraction(n, d) for n, d in row) for row in SERIES[i])


def eval_b_taylor(method, v: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> np.ndarray:
    """Evaluate the truncated series; only valid for ``|v| <= taylor_threshold``."""
    i = _require_fitted(method)
    if abs(v) > policy.taylor_threshold:
        raise RangeError(f"|v| = {abs(v)!r} exceeds taylor_threshold {policy.taylor_threshold}")
    v2 = float(v) * float(v)
    half = []
    for row in SERIES[i]:
        acc = 0.0
        for n, d in reversed(row):
            acc = acc * v2 + n / d
        half.append(acc)
    return mirror(half)


_MP = types.SimpleNamespace(
    cos=mpmath.cos, sin=mpmath.sin, tan=mpmath.tan,
    cot=mpmath.cot, sec=mpmath.sec, csc=mpmath.csc,
    ratio=lambda p, q: mpmath.mpf(p) / q,
)

_FLOAT = types.SimpleNamespace(
    cos=math.cos, sin=math.sin, tan=math.tan,
    cot=lambda x: 1.0 / math.tan(x), sec=lambda x: 1.0 / math.cos(x), csc=lambda x: 1.0 / math.sin(x),
    ratio=lambda p, q: p / q,
)


def _check_closed_domain(v: float) -> None:
    if not v > 0:
        raise DomainError(f"closed forms need v > 0, got {v!r}")
    r = math.remainder(v, 2 * math.pi)
    if abs(r) < 1e-12 * max(1.0, v):
        raise DomainError(f"v = {v!r} is a multiple of 2*pi; csc(v/2) is singular")


def b_half_mp(method, v, dps: int) -> list:
    """b_1..b_6 as mpf values computed at ``dps`` decimal digits.

    Classical and ``v == 0`` return the exact constants. Otherwise the closed
    forms are evaluated with extra guard digits for the cancellation.
    """
    method = MethodId.parse(method)
    with mpmath.workdps(dps):
        if method is MethodId.CLASSICAL or v == 0:
            return [mpmath.mpf(c.numerator) / c.denominator for c in CLASSICAL_B]
        vf = float(v)
        _check_closed_domain(vf)
        guard = math.ceil(14 * math.log10(1.0 / vf)) if vf < 1.0 else 0
    with mpmath.workdps(dps + guard + 5):
        pairs = CLOSED_FORMS[method.derivatives](mpmath.mpf(v), _MP)
        values = [num / den for num, den in pairs]
    with mpmath.workdps(dps):
        return [+x for x in values]


def eval_b_closed(method, v: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> np.ndarray:
    """Evaluate the closed forms at ``v`` (extended precision below the policy limit)."""
    i = _require_fitted(method)
    v = float(v)
    _check_closed_domain(v)
    if v < policy.extended_precision_limit:
        with mpmath.workdps(policy.working_digits(v)):
            pairs = CLOSED_FORMS[i](mpmath.mpf(v), _MP)
            half = [float(num / den) for num, den in pairs]
    else:
        try:
            pairs = CLOSED_FORMS[i](v, _FLOAT)
            half = [num / den for num, den in pairs]
        except ZeroDivisionError:
            raise DomainError(f"closed form singular at v = {v!r}") from None
    if not all(math.isfinite(x) for x in half):
        raise DomainError(f"closed form not finite at v = {v!r}")
    return mirror(half)


def coefficients(method, v: float = 0.0, policy: PrecisionPolicy = DEFAULT_POLICY) -> CoefficientSet:
    """Coefficient set of ``method`` at fitting parameter ``v``."""
    method = MethodId.parse(method)
    if method is MethodId.CLASSICAL:
        return classical_coefficients()
    v = float(v)
    if v < 0:
        raise DomainError(f"v must be non-negative, got {v!r}")
    if v < policy.taylor_threshold:
        b, source = eval_b_taylor(method, v, policy), Source.TAYLOR
    else:
        b, source = eval_b_closed(method, v, policy), Source.CLOSED_FORM
    return CoefficientSet(a=_A, b=_frozen(b), v=v, source=source)
