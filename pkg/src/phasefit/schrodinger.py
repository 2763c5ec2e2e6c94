"""Radial Schrodinger equation with a Woods-Saxon well and phase-shift extraction."""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .coeffs import DEFAULT_POLICY, MethodId, PrecisionPolicy
from .errors import DomainError, RangeError, SingularDenominator
from .integrator import FrequencySchedule, SecondOrderIVP, Trajectory, bootstrap, integrate

X_MAX = 15.0
BREAKPOINT = 6.5
WELL_DEPTH = 50.0
BENCHMARK_ENERGIES = (989.701916, 341.495874, 163.215341)


@dataclass(frozen=True)
class WoodsSaxonParams:
    u0: float = -50.0
    diffuseness_a: float = 0.6
    x0: float = 7.0

    @property
    def u1(self) -> float:
        return -self.u0 / self.diffuseness_a


DEFAULT_WS = WoodsSaxonParams()


def woods_saxon(x, p: WoodsSaxonParams = DEFAULT_WS):
    """V(x) = u0/(1+q) + u1 q/(1+q)**2 with q = exp((x - x0)/a). Accepts arrays."""
    t = (np.asarray(x, dtype=float) - p.x0) / p.diffuseness_a
    # rewrite in e = exp(-|t|) so nothing overflows
    e = np.exp(-np.abs(t))
    far = t > 0
    inv = np.where(far, e / (1.0 + e), 1.0 / (1.0 + e))  # 1/(1+q)
    bump = e / (1.0 + e) ** 2  # q/(1+q)^2, symmetric in t
    v = p.u0 * inv + p.u1 * bump
    return float(v) if np.ndim(v) == 0 else v


@dataclass(frozen=True)
class RadialProblem:
    E: float
    l: int = 0
    x_max: float = X_MAX

    def __post_init__(self):
        if not self.E > 0:
            raise DomainError("energy must be positive")
        if self.l < 0 or int(self.l) != self.l:
            raise DomainError("l must be a non-negative integer")

    @property
    def k(self) -> float:
        return math.sqrt(self.E)


def _centrifugal(l, x):
    if l == 0:
        return 0.0 * x
    if np.any(np.asarray(x) == 0):
        raise DomainError("centrifugal term is singular at x = 0 for l > 0")
    return l * (l + 1) / (np.asarray(x, dtype=float) ** 2)


def potential_coeff(problem: RadialProblem, p: WoodsSaxonParams = DEFAULT_WS):
    """g(x) with y'' = g(x) y; vectorised."""
    def g(x):
        return _centrifugal(problem.l, x) + woods_saxon(x, p) - problem.E
    return g


def rhs(problem: RadialProblem, p: WoodsSaxonParams = DEFAULT_WS):
    """(x, y) -> (l(l+1)/x**2 + V(x) - E) y."""
    l, E = problem.l, problem.E

    def f(x, y):
        if l and x == 0:
            raise DomainError("centrifugal term is singular at x = 0 for l > 0")
        cent = l * (l + 1) / (x * x) if l else 0.0
        return (cent + woods_saxon(x, p) - E) * y

    return f


def radial_ivp(problem: RadialProblem, p: WoodsSaxonParams = DEFAULT_WS, dy0: float = 1.0) -> SecondOrderIVP:
    return SecondOrderIVP(f=rhs(problem, p), x0=0.0, y0=0.0, dy0=dy0, x_end=problem.x_max,
                          linear_coeff=potential_coeff(problem, p))


def ixaru_schedule(E: float) -> FrequencySchedule:
    """omega = sqrt(E - 50) on [0, 6.5), sqrt(E) from 6.5 on."""
    if not E > WELL_DEPTH:
        raise RangeError(f"E = {E!r} must exceed {WELL_DEPTH}")
    return FrequencySchedule(((0.0, math.sqrt(E - WELL_DEPTH)), (BREAKPOINT, math.sqrt(E))))


def spherical_bessel(l: int, z: float):
    """(j_l(z), n_l(z)) by upward recurrence from the l = 0, 1 closed forms."""
    if not z > 0:
        raise DomainError("spherical Bessel functions need z > 0")
    if l < 0:
        raise DomainError("l must be non-negative")
    s, c = math.sin(z), math.cos(z)
    j_prev, n_prev = s / z, -c / z
    if l == 0:
        return j_prev, n_prev
    j_cur, n_cur = s / z**2 - c / z, -c / z**2 - s / z
    for m in range(1, l):
        fac = (2 * m + 1) / z
        j_prev, j_cur = j_cur, fac * j_cur - j_prev
        n_prev, n_cur = n_cur, fac * n_cur - n_prev
    return j_cur, n_cur


def riccati_pair(l: int, k: float, x: float):
    """S(x) = kx j_l(kx), C(x) = kx n_l(kx)."""
    z = k * x
    j, n = spherical_bessel(l, z)
    return z * j, z * n


def angular_distance(delta: float, reference: float = math.pi / 2) -> float:
    """Distance between two angles taken modulo pi, in [0, pi/2]."""
    d = math.remainder(delta - reference, math.pi)
    return abs(d)


@dataclass(frozen=True)
class PhaseShiftResult:
    delta: float
    reference: float = math.pi / 2
    digits: float = math.inf

    @property
    def error(self) -> float:
        return angular_distance(self.delta, self.reference)


def _result(delta, reference=math.pi / 2):
    dist = angular_distance(delta, reference)
    digits = -math.log10(dist) if dist > 0 else math.inf
    return PhaseShiftResult(delta=delta, reference=reference, digits=digits)


def phase_shift(y_i: float, y_ip1: float, x_i: float, x_ip1: float, k: float, l: int = 0) -> PhaseShiftResult:
    """Two-point matching of y against S and C.

    delta is defined through y ~ sin(kx - l pi/2) + tan(delta) cos(kx - l pi/2),
    which with n_0(z) = -cos(z)/z reads

        tan(delta) = (y_{i+1} S_i - y_i S_{i+1}) / (y_{i+1} C_i - y_i C_{i+1}).

    A zero denominator with a nonzero numerator gives delta = pi/2.
    """
    if not x_i < x_ip1:
        raise DomainError("need x_i < x_ip1")
    s_i, c_i = riccati_pair(l, k, x_i)
    s_j, c_j = riccati_pair(l, k, x_ip1)
    num = y_ip1 * s_i - y_i * s_j
    den = y_ip1 * c_i - y_i * c_j
    if den == 0:
        if num == 0:
            raise SingularDenominator("both numerator and denominator vanish")
        return _result(math.pi / 2)
    return _result(math.atan(num / den))


@functools.lru_cache(maxsize=64)
def _starting_values(E, h, l, p):
    # the starting values do not depend on the method, so share them
    ivp = radial_ivp(RadialProblem(E=E, l=l), p)
    values, substeps = bootstrap(ivp, h)
    values.setflags(write=False)
    return values, substeps


def solve_radial(method, E: float, h: float, *, l: int = 0, p: WoodsSaxonParams = DEFAULT_WS,
                 policy: PrecisionPolicy = DEFAULT_POLICY) -> Trajectory:
    method = MethodId.parse(method)
    if X_MAX / h < 2 * 12:
        raise DomainError("need at least 24 steps on [0, 15]")
    schedule = ixaru_schedule(E) if method is not MethodId.CLASSICAL else None
    start, _ = _starting_values(float(E), float(h), int(l), p)
    return integrate(radial_ivp(RadialProblem(E=E, l=l), p), method, h, schedule,
                     policy=policy, starting_values=start)


def phase_shift_from(traj: Trajectory, k: float, l: int = 0, pair: int = 0) -> PhaseShiftResult:
    """Match at the last two grid points (``pair`` shifts the pair back)."""
    i = len(traj.ys) - 2 - pair
    return phase_shift(float(traj.ys[i]), float(traj.ys[i + 1]), float(traj.xs[i]), float(traj.xs[i + 1]), k, l)


def run_benchmark(method, E: float, h: float, *, l: int = 0, policy: PrecisionPolicy = DEFAULT_POLICY) -> PhaseShiftResult:
    """Phase shift at energy E with step h, scored against pi/2."""
    traj = solve_radial(method, E, h, l=l, policy=policy)
    return phase_shift_from(traj, math.sqrt(E), l)
