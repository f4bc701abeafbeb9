import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shen_dn3.errors import DomainError, SeriesDivergenceError
from shen_dn3.hypergeo import (
    SeriesControl,
    agm,
    complete_K_agm,
    gauss_2f1,
    hyp_half_closed,
    signature3_K,
)
from shen_dn3.quadrature import adaptive_gauss_legendre

THIRD, TWO_THIRDS = 1.0 / 3.0, 2.0 / 3.0

# mpmath at 30 digits
F_HALF_075 = 1.879385241571816768
F_ONE_05 = 1.159595266963928366
K_OF_M_SMALL = 1.598142002112540144   # m = (2 - sqrt 3)/4
K_OF_M_LARGE = 2.768063145368767559   # m = (2 + sqrt 3)/4


def test_series_at_zero_is_one():
    assert gauss_2f1(THIRD, TWO_THIRDS, 0.5, 0.0) == 1.0


def test_series_against_closed_form_value():
    # cos(pi/9)/cos(pi/3) is the closed form at z = sin^2(pi/3)
    assert gauss_2f1(THIRD, TWO_THIRDS, 0.5, 0.75) == pytest.approx(F_HALF_075, rel=1e-14)
    assert F_HALF_075 == pytest.approx(math.cos(math.pi / 9) / math.cos(math.pi / 3), rel=1e-15)


def test_series_signature3_value():
    assert gauss_2f1(THIRD, TWO_THIRDS, 1.0, 0.5) == pytest.approx(F_ONE_05, rel=1e-14)


@pytest.mark.parametrize("args", [(0.5, 0.5, 1.0, 0.3), (1.5, -0.25, 2.5, -0.7), (2.0, 3.0, 0.75, 0.6)])
def test_series_matches_mpmath(args):
    assert gauss_2f1(*args) == pytest.approx(float(mpmath.hyp2f1(*args)), rel=1e-13)


def test_terminating_series():
    # b = -2 gives the polynomial 1 + a b z/c + a(a+1) b(b+1) z^2 / (c(c+1) 2)
    a, b, c, z = 1.5, -2.0, 3.0, 0.4
    expected = 1 + a * b * z / c + a * (a + 1) * b * (b + 1) * z * z / (c * (c + 1) * 2)
    assert gauss_2f1(a, b, c, z) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("c", [0.0, -1.0, -7.0])
def test_invalid_c(c):
    with pytest.raises(DomainError):
        gauss_2f1(1.0, 1.0, c, 0.1)


@pytest.mark.parametrize("z", [1.0, -1.0, 1.5])
def test_outside_disc(z):
    with pytest.raises(DomainError):
        gauss_2f1(1.0, 1.0, 2.0, z)


def test_divergence_diagnostic_carries_partial_sum():
    with pytest.raises(SeriesDivergenceError) as info:
        gauss_2f1(THIRD, TWO_THIRDS, 1.0, 0.999, SeriesControl(max_terms=50))
    assert info.value.n_terms == 50
    assert info.value.partial_sum > 1.0


def test_series_control_validation():
    with pytest.raises(DomainError):
        SeriesControl(rel_tol=0.0)
    with pytest.raises(DomainError):
        SeriesControl(max_terms=0)


def test_hyp_half_closed_examples():
    assert hyp_half_closed(0.0, 0.3) == 1.0
    # psi = pi/3
    assert hyp_half_closed(math.pi / 2, math.sin(math.pi / 3)) == pytest.approx(F_HALF_075, rel=1e-14)
    # psi = pi/4: ((sqrt6 + sqrt2)/4) / (sqrt2/2)
    expected = (math.sqrt(6) + math.sqrt(2)) / 4 / (math.sqrt(2) / 2)
    assert expected == pytest.approx(1.36602540, abs=5e-9)
    assert hyp_half_closed(math.pi / 2, math.sqrt(0.5)) == pytest.approx(expected, rel=1e-15)


@settings(max_examples=200, deadline=None)
@given(t=st.floats(0.0, 2 * math.pi), kappa=st.floats(0.01, 0.99))
def test_closed_form_matches_series(t, kappa):
    closed = hyp_half_closed(t, kappa)
    series = gauss_2f1(THIRD, TWO_THIRDS, 0.5, (kappa * math.sin(t)) ** 2)
    assert abs(series - closed) <= 1e-12 * (1 + abs(closed))


def test_agm_basic():
    assert agm(1.0, 1.0) == 1.0
    assert agm(1.0, math.sqrt(2.0)) == pytest.approx(float(mpmath.agm(1, mpmath.sqrt(2))), rel=1e-15)
    with pytest.raises(DomainError):
        agm(-1.0, 1.0)


def test_complete_K_examples():
    assert complete_K_agm(0.0) == pytest.approx(math.pi / 2, rel=1e-16)
    m = (2 - math.sqrt(3)) / 4
    assert complete_K_agm(m) == pytest.approx(K_OF_M_SMALL, rel=1e-14)
    assert complete_K_agm(1 - m) == pytest.approx(K_OF_M_LARGE, rel=1e-14)
    with pytest.raises(DomainError):
        complete_K_agm(1.0)


@settings(max_examples=100, deadline=None)
@given(m=st.floats(0.0, 0.99))
def test_agm_matches_legendre_series(m):
    series = 0.5 * math.pi * gauss_2f1(0.5, 0.5, 1.0, m)
    assert complete_K_agm(m) == pytest.approx(series, rel=1e-11)


@settings(max_examples=50, deadline=None)
@given(z1=st.floats(-0.95, 0.95), z2=st.floats(-0.95, 0.95))
def test_monotone_in_z(z1, z2):
    lo, hi = sorted((z1, z2))
    assert gauss_2f1(THIRD, TWO_THIRDS, 1.0, lo) <= gauss_2f1(THIRD, TWO_THIRDS, 1.0, hi)


def test_signature3_K():
    assert signature3_K(1e-12) == pytest.approx(math.pi / 2, rel=1e-11)
    assert signature3_K(0.5) == pytest.approx(0.5 * math.pi * F_ONE_05, rel=1e-14)
    with pytest.raises(DomainError):
        signature3_K(1.0)


@pytest.mark.parametrize("kappa2", [0.1, 0.5, 0.75, 0.9])
def test_termwise_integration_identity(kappa2):
    kappa = math.sqrt(kappa2)

    def integrand(t):
        psi = np.arcsin(kappa * np.sin(t))
        return np.cos(psi / 3) / np.cos(psi)

    integral = adaptive_gauss_legendre(integrand, 0.0, math.pi / 2)
    assert integral == pytest.approx(signature3_K(kappa2), abs=1e-10)
    oracle = mpmath.quad(lambda t: mpmath.hyp2f1(THIRD, TWO_THIRDS, 0.5, kappa2 * mpmath.sin(t) ** 2),
                         [0, mpmath.pi / 2])
    assert integral == pytest.approx(float(oracle), abs=1e-10)


def test_quadrature_polynomial_and_failure():
    assert adaptive_gauss_legendre(lambda x: x ** 5, 0.0, 2.0) == pytest.approx(64 / 6, rel=1e-15)
    assert adaptive_gauss_legendre(np.cos, 0.0, 0.0) == 0.0
    assert adaptive_gauss_legendre(np.cos, 1.0, 0.0) == pytest.approx(-math.sin(1.0), rel=1e-15)
    from shen_dn3.errors import ConvergenceError
    with pytest.raises(ConvergenceError):
        adaptive_gauss_legendre(lambda x: np.abs(x) ** -0.9, -1.0, 1.0, max_depth=5)
