import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shen_dn3.core import Modulus, greenhill_data
from shen_dn3.errors import DomainError
from shen_dn3.ramanujan import (
    angle_from_p,
    p_from_angle,
    ramanujan_maps,
    s_cubic_roots,
    verify_identity,
)

# mpmath at 30 digits for p = 1/2
BETA_HALF = 0.7084548104956268222
MULT_HALF = 1.237436867076458168
LHS_HALF = 1.290546813880052603
LEGENDRE_HALF = 1.042919318323746777


def test_maps_at_half():
    pp = ramanujan_maps(0.5)
    assert pp.beta == pytest.approx(BETA_HALF, rel=1e-15)
    assert pp.alpha_r == 0.15625
    assert pp.multiplier == pytest.approx(MULT_HALF, rel=1e-15)


def test_identity_at_half():
    lhs, rhs, resid = verify_identity(0.5)
    assert lhs == pytest.approx(LHS_HALF, rel=1e-14)
    assert rhs == pytest.approx(MULT_HALF * LEGENDRE_HALF, rel=1e-14)
    assert resid < 1e-13


def test_oracle_values_are_consistent():
    mpmath.mp.dps = 30
    assert float(mpmath.hyp2f1(mpmath.mpf(1) / 3, mpmath.mpf(2) / 3, 1, BETA_HALF)) == pytest.approx(
        LHS_HALF, rel=1e-14)
    assert float(mpmath.hyp2f1(0.5, 0.5, 1, 0.15625)) == pytest.approx(LEGENDRE_HALF, rel=1e-15)
    mpmath.mp.dps = 15


@pytest.mark.parametrize("p", [0.05 * i for i in range(1, 20)] + [0.97])
def test_identity_across_p(p):
    assert verify_identity(p)[2] <= 1e-10


def test_identity_cap():
    with pytest.raises(DomainError):
        verify_identity(0.98)
    for bad in (0.0, 1.0, -0.2):
        with pytest.raises(DomainError):
            ramanujan_maps(bad)


def test_beta_at_special_p():
    assert ramanujan_maps((math.sqrt(3) - 1) / 2).beta == pytest.approx(0.5, abs=1e-14)


@settings(max_examples=100, deadline=None)
@given(p=st.floats(0.01, 0.99))
def test_angle_round_trip_and_moduli(p):
    a = angle_from_p(p)
    assert 0 < a < math.pi / 6
    assert p_from_angle(a) == pytest.approx(p, rel=1e-13)
    pp = ramanujan_maps(p)
    mod = Modulus.from_kappa2(pp.beta)
    assert mod.angle_a == pytest.approx(a, rel=1e-12)
    gd = greenhill_data(mod)
    assert 4 * gd.M2 == pytest.approx(9 * (1 + 2 * p) / (1 + p + p * p) ** 2, rel=1e-11)
    assert gd.k2 == pytest.approx(pp.alpha_r, rel=1e-11, abs=1e-15)


@settings(max_examples=100, deadline=None)
@given(p=st.floats(0.01, 0.99))
def test_s_cubic_roots(p):
    beta = ramanujan_maps(p).beta
    lo, mid, hi = roots = s_cubic_roots(p)
    assert 0 < mid < 0.25 < lo < hi
    assert sum(roots) == pytest.approx(1.5, rel=1e-15)
    for s in roots:
        assert s * (3 - 4 * s) ** 2 == pytest.approx(beta, rel=1e-12)


@settings(max_examples=50, deadline=None)
@given(p=st.floats(0.01, 0.99))
def test_double_angle_relations(p):
    a = angle_from_p(p)
    s = 1 + p + p * p
    assert math.sin(2 * a) == pytest.approx(math.sqrt(3) / 2 * p * (2 + p) / s, abs=1e-13)
    assert math.cos(2 * a) == pytest.approx(0.5 * (2 + 2 * p - p * p) / s, abs=1e-13)


def test_s_cubic_examples():
    p = (math.sqrt(3) - 1) / 2
    assert s_cubic_roots(p)[1] == pytest.approx(math.sin(math.pi / 12) ** 2, abs=1e-15)
    assert s_cubic_roots(0.5)[1] == pytest.approx(0.75 / 7, rel=1e-15)


def test_p_from_angle_domain():
    with pytest.raises(DomainError):
        p_from_angle(math.pi / 6)
