import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import PLTE_FACTOR, PRINTED_COEFF
from phasefit import SingularDenominator
from phasefit.coeffs import MethodId
from phasefit.phaselag import (
    PLTE_TERMS,
    char_coeffs,
    phase_lag,
    phase_lag_curve,
    phase_lag_derivative,
    plte_estimate,
    sine_derivatives,
)
from phasefit.stability import principal_phase

FITTED = MethodId.fitted()


def test_char_coeffs_at_zero_step():
    A = char_coeffs("classical", 0.0, 0.0).A
    assert tuple(A) == (0, 0, 0, -1, 2, -2, 1)


def test_char_coeffs_top_entry_is_one():
    assert char_coeffs("pf-d0", 0.3, 0.3).A[6] == 1.0


def test_char_coeffs_substitution():
    A = char_coeffs("classical", 0.5, 0.0).A
    assert A[3] == pytest.approx(-1 + 0.25 * 270875723 / 17740800, rel=1e-15)


def test_pfd0_phase_lag_vanishes_at_fit():
    assert abs(phase_lag("pf-d0", 0.9, 0.9)) < 1e-11


@pytest.mark.parametrize("method", list(MethodId))
def test_phase_lag_zero_at_origin(method):
    assert phase_lag(method, 0.0, 0.6) == pytest.approx(0.0, abs=1e-15)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(list(MethodId)), st.floats(0.01, 1.5), st.floats(0.06, 1.5))
def test_phase_lag_even_in_s(method, s, v):
    assert phase_lag(method, s, v) == phase_lag(method, -s, v)


def test_curve_matches_pointwise():
    s = np.linspace(0.1, 1.4, 9)
    curve = phase_lag_curve("pf-d2", s, 0.8)
    point = [phase_lag("pf-d2", x, 0.8) for x in s]
    assert np.allclose(curve, point, rtol=1e-13, atol=1e-16)


def test_singular_denominator_detected():
    # 2 sum j^2 A_j = 18 + D(v) s^2; D is negative for PF-D5 at v = 2
    v = 2.0
    lo, hi = char_coeffs("pf-d5", 0.0, v).A, char_coeffs("pf-d5", 1.0, v).A
    j2 = np.arange(1, 7) ** 2
    d = 2 * np.sum(j2 * (hi[1:] - lo[1:]))
    assert d < 0
    root = math.sqrt(-2 * np.sum(j2 * lo[1:]) / d)
    with pytest.raises(SingularDenominator):
        phase_lag("pf-d5", root, v)
    with pytest.raises(SingularDenominator):
        phase_lag_curve("pf-d5", [0.5, root], v)


def test_classical_phase_lag_scaling():
    # PL behaves like c * s**14 near 0; the ratio settles as s halves
    ratios = [phase_lag("classical", s, 0, dps=60) / s**14 for s in (1e-2, 5e-3, 2.5e-3)]
    assert ratios[0] != 0
    assert abs(ratios[2] - ratios[1]) < 1e-3 * abs(ratios[2])
    assert abs(ratios[1] - ratios[0]) < 1e-2 * abs(ratios[1])


def test_classical_root_phase_error_is_order_twelve():
    with mpmath.workdps(60):
        errs = [mpmath.mpf(s) - principal_phase("classical", s, 0, dps=60) for s in (0.02, 0.01)]
        order = mpmath.log(errs[0] / errs[1], 2)
    assert 12.5 < float(order) < 13.5


def test_phase_lag_sign_relation_to_root_phase():
    # dual route: the printed quotient against the root-based s - lambda(s)
    s = 0.05
    with mpmath.workdps(60):
        lag = s - principal_phase("classical", s, 0, dps=60)
    assert phase_lag("classical", s, 0, dps=60) == pytest.approx(float(-s * lag), rel=1e-3)


def test_pfd1_first_derivative_vanishes():
    value, _ = phase_lag_derivative("pf-d1", 1.1, 1.1, 1)
    assert abs(value) < 1e-7


def test_pfd5_first_five_derivatives_vanish():
    for k in range(1, 6):
        value, _ = phase_lag_derivative("pf-d5", 0.8, 0.8, k)
        assert abs(value) < 1e-6, k


def test_pfd0_keeps_first_derivative():
    d0, _ = phase_lag_derivative("pf-d0", 1.1, 1.1, 1)
    d1, _ = phase_lag_derivative("pf-d1", 1.1, 1.1, 1)
    assert abs(d0) >= 10 * abs(d1)
    assert abs(d0) > 1e-4


def test_derivative_matches_analytic_difference():
    # dPL/ds of a smooth function against mpmath's own differentiation
    value, err = phase_lag_derivative("classical", 0.7, 0.0, 2)
    with mpmath.workdps(40):
        ref = mpmath.diff(lambda s: mpmath.mpf(phase_lag("classical", float(s), 0.0, dps=40)), 0.7, 2, h=1e-4)
    assert value == pytest.approx(float(ref), rel=1e-5)
    assert err < 1e-8


def test_derivative_order_validated():
    with pytest.raises(ValueError):
        phase_lag_derivative("pf-d0", 0.5, 0.5, 0)


# ---------------------------------------------------------------------------
# truncation error

def test_classical_plte_value():
    derivs = {k: 0 for k in range(2, 15)}
    derivs[14] = 1
    assert plte_estimate("classical", derivs, 3, 1) == Fraction(16301796103, 290594304000)


def test_plte_pfd2_single_term():
    derivs = {k: 0 for k in range(2, 15)}
    derivs[8] = 1
    assert plte_estimate("pf-d2", derivs, 2, 1) == PLTE_FACTOR * 64


@pytest.mark.parametrize("method", FITTED)
def test_plte_matches_printed_polynomial(method):
    printed = PRINTED_COEFF[method.derivatives]
    for order in range(2, 15):
        derivs = {k: 0 for k in range(2, 15)}
        derivs[order] = 1
        power, weight = printed.get(order, (0, 0))
        assert plte_estimate(method, derivs, Fraction(3), 1) == PLTE_FACTOR * weight * 3**power


@pytest.mark.parametrize("method", FITTED)
def test_plte_weights_are_binomial(method):
    i = method.derivatives
    weights = [w for _, _, w in sorted(PLTE_TERMS[method])]
    assert weights == [math.comb(i + 1, m) for m in range(i + 2)]


@pytest.mark.parametrize("method", FITTED)
@pytest.mark.parametrize("omega,x", [(1.0, 0.3), (2.5, 1.7), (7.0, -0.4)])
def test_plte_annihilates_sine(method, omega, x):
    derivs = sine_derivatives(omega, x)
    scale = sum(abs(d) * omega ** (14 - k) for k, d in derivs.items())
    assert abs(plte_estimate(method, derivs, omega, 1.0)) < 1e-12 * scale * float(PLTE_FACTOR)


def test_plte_sequence_input():
    seq = [0] * 12 + [1]
    assert plte_estimate("classical", seq, 1, 2) == PLTE_FACTOR * 2**14


def test_plte_missing_derivative():
    with pytest.raises(KeyError):
        plte_estimate("pf-d5", {14: 1}, 1, 1)
