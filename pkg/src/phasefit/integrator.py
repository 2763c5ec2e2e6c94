"""Explicit 12-step integration of scalar y'' = f(x, y) with a frequency schedule."""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import mpmath
import numpy as np

from . import kernels
from .coeffs import A_COEFFS, DEFAULT_POLICY, MethodId, PrecisionPolicy, b_half_mp, coefficients
from .errors import DomainError, ToleranceUnreachable

STEPS = 12
MAX_HALVINGS = 20
BOOTSTRAP_TOL = 1e-14

_A = np.array(A_COEFFS, dtype=float)


@dataclass(frozen=True)
class SecondOrderIVP:
    """y'' = f(x, y), y(x0) = y0, y'(x0) = dy0 on [x0, x_end].

    ``linear_coeff``, if given, declares ``f(x, y) == linear_coeff(x) * y``
    and lets :func:`integrate` run the compiled recurrence.
    """

    f: Callable[[float, float], float]
    x0: float
    y0: float
    dy0: float
    x_end: float
    linear_coeff: Optional[Callable] = None

    def __post_init__(self):
        if not self.x_end > self.x0:
            raise DomainError("x_end must exceed x0")


@dataclass(frozen=True)
class FrequencySchedule:
    """Piecewise-constant, right-continuous omega(x).

    ``pieces`` is a sequence of ``(breakpoint, omega)``; omega applies from its
    breakpoint up to the next one. Left of the first breakpoint the first
    omega is used.
    """

    pieces: tuple

    def __post_init__(self):
        pieces = tuple((float(x), float(w)) for x, w in self.pieces)
        if not pieces:
            raise ValueError("schedule needs at least one piece")
        xs = [x for x, _ in pieces]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if any(not w >= 0 for _, w in pieces):
            raise ValueError("omega must be non-negative")
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def constant(cls, omega: float) -> "FrequencySchedule":
        return cls(((-math.inf, omega),))

    def omega_at(self, x: float) -> float:
        k = bisect.bisect_right([p[0] for p in self.pieces], x) - 1
        return self.pieces[max(k, 0)][1]


@dataclass(frozen=True)
class Trajectory:
    h: float
    xs: np.ndarray
    ys: np.ndarray
    method: MethodId
    bootstrap_substeps: int  # substeps per h used for the starting values (0 if supplied)
    steps: int  # multistep steps taken
    v_values: tuple = field(default=())

    @property
    def x_end(self):
        return self.xs[-1]

    @property
    def y_end(self):
        return self.ys[-1]


# ---------------------------------------------------------------------------
# starting values

def _rk4_run(f, x0, y0, dy0, h, m, count):
    """y at x0 + n*h, n < count, from RK4 with 2**m substeps per h."""
    sub = 2**m
    hs = h / sub
    y, p = y0, dy0
    out = [y0]
    for n in range(1, count):
        for k in range(sub):
            x = x0 + ((n - 1) * sub + k) * hs
            k1y, k1p = p, f(x, y)
            k2y, k2p = p + 0.5 * hs * k1p, f(x + 0.5 * hs, y + 0.5 * hs * k1y)
            k3y, k3p = p + 0.5 * hs * k2p, f(x + 0.5 * hs, y + 0.5 * hs * k2y)
            k4y, k4p = p + hs * k3p, f(x + hs, y + hs * k3y)
            y = y + hs / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y)
            p = p + hs / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p)
        out.append(y)
    return np.array(out, dtype=float)


def bootstrap(ivp: SecondOrderIVP, h: float, *, count: int = STEPS, tol: float = BOOTSTRAP_TOL):
    """Starting values y_0 .. y_{count-1} on the grid x0 + n*h.

    Classical RK4 on (y, y') with substep h / 2**m; m grows until two
    successive levels agree within ``tol * max(1, |y|)`` at every point.
    Returns ``(values, 2**m)``.
    """
    if not h > 0:
        raise DomainError("h must be positive")
    prev = _rk4_run(ivp.f, ivp.x0, ivp.y0, ivp.dy0, h, 0, count)
    for m in range(1, MAX_HALVINGS + 1):
        cur = _rk4_run(ivp.f, ivp.x0, ivp.y0, ivp.dy0, h, m, count)
        if not np.all(np.isfinite(cur)):
            break
        # Richardson: the finer level's error is about a fifteenth of the gap
        err = np.abs(cur - prev) / 15.0
        if np.all(err < tol * np.maximum(1.0, np.abs(cur))):
            return cur, 2**m
        prev = cur
    raise ToleranceUnreachable(f"starting values not within {tol:g} after {MAX_HALVINGS} halvings")


# ---------------------------------------------------------------------------
# one step

def step(method, y_window, f_window, h: float, v: float = 0.0, policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """y_{n+12} from the last 12 values of y and f (oldest first)."""
    y_window = np.asarray(y_window, dtype=float)
    f_window = np.asarray(f_window, dtype=float)
    if y_window.shape != (STEPS,) or f_window.shape != (STEPS,):
        raise ValueError("windows must hold exactly 12 values")
    b = coefficients(method, v, policy).b
    return float(-(_A[:STEPS] @ y_window) + h * h * (b[:STEPS] @ f_window))


# ---------------------------------------------------------------------------
# full integration

def _as_schedule(schedule):
    if schedule is None:
        return None
    if isinstance(schedule, FrequencySchedule):
        return schedule
    return FrequencySchedule.constant(float(schedule))


def _sample(g, xs):
    try:
        vals = np.asarray(g(xs), dtype=float)
        if vals.shape == xs.shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([g(float(x)) for x in xs], dtype=float)


def integrate(
    ivp: SecondOrderIVP,
    method,
    h: float,
    schedule=None,
    *,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    starting_values=None,
    dps: int | None = None,
) -> Trajectory:
    """Integrate on the grid x0 + n*h up to the last point not beyond x_end.

    Step n (producing y_{n+12}) uses ``v = omega(x_{n+12}) * h``. ``schedule``
    may be a :class:`FrequencySchedule`, a constant omega, or ``None``
    (classical only). ``starting_values`` overrides the bootstrap. With
    ``dps`` the whole recurrence runs in mpmath and ``ys`` is an object array.
    """
    method = MethodId.parse(method)
    h = float(h)
    if not h > 0:
        raise DomainError("h must be positive")
    n_last = math.floor((ivp.x_end - ivp.x0) / h + 1e-9)
    if n_last < STEPS:
        raise DomainError(f"interval holds {n_last} steps of h; at least {STEPS} are needed")
    schedule = _as_schedule(schedule)
    if schedule is None and method is not MethodId.CLASSICAL:
        raise ValueError(f"{method.label} needs a frequency schedule")

    xs = ivp.x0 + np.arange(n_last + 1) * h
    n_steps = n_last + 1 - STEPS

    if starting_values is None:
        start, substeps = bootstrap(ivp, h)
    else:
        start, substeps = list(starting_values), 0
        if len(start) != STEPS:
            raise ValueError("starting_values must hold exactly 12 values")

    # v for each step, and one coefficient row per distinct v
    if method is MethodId.CLASSICAL:
        vs = np.zeros(n_steps)
    else:
        vs = np.array([schedule.omega_at(xs[n + STEPS]) * h for n in range(n_steps)])
    distinct, bidx = np.unique(vs, return_inverse=True)
    bidx = bidx.astype(np.int64)

    if dps is not None:
        ys = _integrate_mp(ivp, method, h, start, distinct, bidx, n_last, dps)
    else:
        btab = np.array([coefficients(method, v, policy).b for v in distinct])
        ys = np.empty(n_last + 1)
        ys[:STEPS] = np.asarray(start, dtype=float)
        if ivp.linear_coeff is not None:
            g = _sample(ivp.linear_coeff, xs)
            kernels.linear_recurrence(ys, _A, btab, bidx, g, h * h)
        else:
            _generic_recurrence(ivp.f, xs, ys, btab, bidx, h * h)
        ys.setflags(write=False)
    xs.setflags(write=False)
    return Trajectory(h=h, xs=xs, ys=ys, method=method, bootstrap_substeps=substeps,
                      steps=n_steps, v_values=tuple(float(v) for v in distinct))


def _generic_recurrence(f, xs, ys, btab, bidx, h2):
    fs = np.empty_like(ys)
    for j in range(STEPS):
        fs[j] = f(xs[j], ys[j])
    a = _A[:STEPS]
    for n in range(bidx.shape[0]):
        b = btab[bidx[n], :STEPS]
        y_new = -(a @ ys[n:n + STEPS]) + h2 * (b @ fs[n:n + STEPS])
        ys[n + STEPS] = y_new
        fs[n + STEPS] = f(xs[n + STEPS], y_new)


def _integrate_mp(ivp, method, h, start, distinct, bidx, n_last, dps):
    with mpmath.workdps(dps):
        h_mp = mpmath.mpf(h)
        x0 = mpmath.mpf(ivp.x0)
        rows = []
        for v in distinct:
            half = b_half_mp(method, float(v), dps)
            rows.append([mpmath.mpf(0)] + list(half) + list(half[-2::-1]))
        ys = [mpmath.mpf(y) for y in start]
        fs = [ivp.f(x0 + j * h_mp, ys[j]) for j in range(STEPS)]
        h2 = h_mp * h_mp
        for n in range(bidx.shape[0]):
            b = rows[bidx[n]]
            acc = -mpmath.fsum(A_COEFFS[j] * ys[n + j] for j in range(STEPS))
            acc += h2 * mpmath.fsum(b[j] * fs[n + j] for j in range(1, STEPS))
            ys.append(acc)
            fs.append(ivp.f(x0 + (n + STEPS) * h_mp, acc))
        out = np.empty(n_last + 1, dtype=object)
        out[:] = ys
        return out
