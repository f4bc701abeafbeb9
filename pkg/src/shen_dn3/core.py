"""Signature-three elliptic function dn3 and its companions.

Two independent evaluation routes are provided:

* the *direct* route, valid on the real line, inverts

      f(T) = int_0^T F(1/3, 2/3; 1/2; kappa^2 sin^2 t) dt

  by Newton iteration and differentiates the inverse ``phi`` in closed form;
* the *wp* route, valid on the whole plane, uses

      dn3 = 1 - (4/9) kappa^2 / (1/3 + wp)

  with the coperiodic Weierstrass function.

The remaining functions give the closed forms for critical values, midpoint
values of wp, the Greenhill reduction constants and the periods.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import weierstrass as wps
from .errors import ConvergenceError, DomainError, PoleError
from .hypergeo import complete_K_agm, hyp_half_closed
from .quadrature import adaptive_gauss_legendre

__all__ = [
    "Modulus",
    "CriticalValues",
    "GreenhillData",
    "FundamentalGeometry",
    "f_integral",
    "phi",
    "dn3_direct",
    "sn3_cn3_direct",
    "dn3_wp",
    "dn3_derivative_wp",
    "sn3_squared_elliptic",
    "critical_values",
    "midpoint_wp_values",
    "greenhill_data",
    "periods_via_greenhill",
    "pole_locations",
    "zero_height_L",
    "minus_two_point",
]

QUAD_TOL = 1e-12
NEWTON_TOL = 1e-13
NEWTON_MAX_ITER = 50
BISECT_XTOL = 1e-12

_SIXTH = math.pi / 6.0


@dataclass(frozen=True)
class Modulus:
    """The pair of complementary moduli with the angle ``a`` where lambda = cos 3a.

    Derived lattice data is computed lazily and cached; the instance is
    otherwise immutable.
    """

    kappa: float
    lam: float
    angle_a: float

    @classmethod
    def from_kappa2(cls, kappa2: float) -> "Modulus":
        if not 0 < kappa2 < 1:
            raise DomainError(f"kappa^2 must lie in (0, 1), got {kappa2}")
        kappa = math.sqrt(kappa2)
        lam = math.sqrt(1.0 - kappa2)
        return cls(kappa, lam, math.atan2(kappa, lam) / 3.0)

    @property
    def kappa2(self) -> float:
        return self.kappa * self.kappa

    @cached_property
    def invariants(self) -> wps.Invariants:
        return wps.invariants_from_modulus(self.kappa2)

    @cached_property
    def lattice(self) -> wps.LatticeData:
        return wps.half_periods(self.invariants)

    @cached_property
    def quarter_integral(self) -> float:
        """f(pi/2) by quadrature; equals the real half period K."""
        return adaptive_gauss_legendre(self._integrand, 0.0, 0.5 * math.pi, QUAD_TOL)

    def _integrand(self, t: np.ndarray) -> np.ndarray:
        psi = np.arcsin(self.kappa * np.sin(t))
        return np.cos(psi / 3.0) / np.cos(psi)


@dataclass(frozen=True)
class CriticalValues:
    x1: float
    x2: float
    x3: float


@dataclass(frozen=True)
class GreenhillData:
    M2: float
    k2: float
    kp2: float


@dataclass(frozen=True)
class FundamentalGeometry:
    K: float
    Kp: float
    pole_height: float
    band_halfwidth: float


# -- direct route ----------------------------------------------------------

def f_integral(T: float, mod: Modulus) -> float:
    """int_0^T F(1/3, 2/3; 1/2; kappa^2 sin^2 t) dt for any real T.

    The integrand has period pi, so whole half-turns contribute 2K each and
    only the remainder in [-pi/2, pi/2] is integrated.
    """
    n = round(T / math.pi)
    rest = T - n * math.pi
    partial = adaptive_gauss_legendre(mod._integrand, 0.0, rest, QUAD_TOL)
    return 2.0 * n * mod.quarter_integral + partial


def phi(u: float, mod: Modulus) -> float:
    """Real inverse of :func:`f_integral`."""
    K = mod.quarter_integral
    n = round(u / (2.0 * K))
    r = u - 2.0 * n * K
    if r == 0.0:
        return n * math.pi

    # f is odd and increasing with f(+-pi/2) = +-K, so phi(r) lies in [-pi/2, pi/2]
    lo, hi = -0.5 * math.pi, 0.5 * math.pi
    T = r * (0.5 * math.pi) / K
    for _ in range(NEWTON_MAX_ITER):
        resid = f_integral(T, mod) - r
        if abs(resid) <= NEWTON_TOL:
            return n * math.pi + T
        if resid > 0:
            hi = min(hi, T)
        else:
            lo = max(lo, T)
        step = T - resid / hyp_half_closed(T, mod.kappa)
        T = step if lo < step < hi else 0.5 * (lo + hi)

    for _ in range(200):
        T = 0.5 * (lo + hi)
        resid = f_integral(T, mod) - r
        if abs(resid) <= NEWTON_TOL or hi - lo <= 4e-16:
            break
        if resid > 0:
            hi = T
        else:
            lo = T
    if abs(resid) > 10 * NEWTON_TOL:
        raise ConvergenceError(f"could not invert f at u={u}", abs(resid))
    return n * math.pi + T


def dn3_direct(u: float, mod: Modulus) -> float:
    """dn3(u) = phi'(u) = cos(psi)/cos(psi/3) with sin psi = kappa sin phi(u)."""
    return 1.0 / hyp_half_closed(phi(u, mod), mod.kappa)


def sn3_cn3_direct(u: float, mod: Modulus) -> tuple[float, float]:
    T = phi(u, mod)
    return math.sin(T), math.cos(T)


# -- wp route --------------------------------------------------------------

def _nearest_dn3_pole(z: complex, mod: Modulus) -> tuple[complex, float]:
    lat = mod.lattice
    zr = wps.reduce_to_cell(z, lat)
    shift = complex(z) - zr
    height = 2.0 * lat.Kp / 3.0
    pole = complex(0.0, math.copysign(height, zr.imag))
    return shift + pole, abs(zr - pole)


def _check_dn3_pole(z: complex, mod: Modulus) -> None:
    pole, dist = _nearest_dn3_pole(z, mod)
    if dist < wps.POLE_TOLERANCE:
        raise PoleError("dn3 has a simple pole here", pole)


def dn3_wp(z: complex, mod: Modulus) -> complex:
    """dn3 at a complex point through the coperiodic Weierstrass function."""
    _check_dn3_pole(z, mod)
    recip, _ = wps.wp_shifted_reciprocal(complex(z), 1.0 / 3.0, mod.lattice)
    return 1.0 - 4.0 / 9.0 * mod.kappa2 * recip


def dn3_derivative_wp(z: complex, mod: Modulus) -> complex:
    _check_dn3_pole(z, mod)
    _, deriv = wps.wp_shifted_reciprocal(complex(z), 1.0 / 3.0, mod.lattice)
    return 4.0 / 9.0 * mod.kappa2 * deriv


def sn3_squared_elliptic(z: complex, mod: Modulus) -> complex:
    """The elliptic extension of sn3^2, (1 - dn3)(2 + dn3)^2 / (4 kappa^2)."""
    dd = dn3_wp(z, mod)
    return (1.0 - dd) * (2.0 + dd) ** 2 / (4.0 * mod.kappa2)


# -- closed forms ----------------------------------------------------------

def critical_values(mod: Modulus) -> CriticalValues:
    """Zeros x1, -x2, -x3 of x^3 + 3x^2 - 4 lambda^2 in trigonometric form."""
    a2 = 2.0 * mod.angle_a
    return CriticalValues(
        x1=2.0 * math.cos(a2) - 1.0,
        x2=1.0 + 2.0 * math.cos(a2 + math.pi / 3.0),
        x3=1.0 + 2.0 * math.cos(a2 - math.pi / 3.0),
    )


def midpoint_wp_values(mod: Modulus) -> tuple[float, float, float]:
    """wp at K, K + iK', iK' from the angle a."""
    a = mod.angle_a
    c = mod.kappa2 / 9.0
    return (
        c / math.sin(a) ** 2 - 1.0 / 3.0,
        c / math.cos(a + _SIXTH) ** 2 - 1.0 / 3.0,
        c / math.cos(a - _SIXTH) ** 2 - 1.0 / 3.0,
    )


def greenhill_data(mod: Modulus) -> GreenhillData:
    a = mod.angle_a
    lower = math.cos(a + _SIXTH) ** 2 * math.cos(2.0 * a - _SIXTH)
    return GreenhillData(
        M2=2.0 * math.sqrt(3.0) * lower,
        k2=math.sin(a) ** 2 * math.sin(2.0 * a) / lower,
        kp2=math.cos(a - _SIXTH) ** 2 * math.cos(2.0 * a + _SIXTH) / lower,
    )


def periods_via_greenhill(mod: Modulus) -> FundamentalGeometry:
    """Half periods K, K' as multiples of complete Legendre integrals."""
    gd = greenhill_data(mod)
    factor = 1.5 / math.sqrt(gd.M2)
    K = factor * complete_K_agm(gd.k2, gd.kp2)
    Kp = factor * complete_K_agm(gd.kp2, gd.k2)
    height = 2.0 * Kp / 3.0
    return FundamentalGeometry(K, Kp, height, height)


def pole_locations(mod: Modulus, n_cells: int = 1) -> list[complex]:
    """The poles +-(2/3) iK' translated by 2mK + 2niK' for 0 <= m, n < n_cells."""
    if n_cells < 1:
        raise DomainError(f"n_cells must be >= 1, got {n_cells}")
    geo = periods_via_greenhill(mod)
    poles = []
    for m in range(n_cells):
        for n in range(n_cells):
            base = complex(2.0 * m * geo.K, 2.0 * n * geo.Kp)
            poles.append(base + 1j * geo.pole_height)
            poles.append(base - 1j * geo.pole_height)
    return poles


def _bisect(func, lo: float, hi: float, xtol: float = BISECT_XTOL) -> float:
    flo = func(lo)
    fhi = func(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ConvergenceError(f"no sign change on [{lo}, {hi}]: {flo}, {fhi}")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        fmid = func(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _real_on_edge(z: complex, mod: Modulus) -> float:
    value = dn3_wp(z, mod)
    if abs(value.imag) > 1e-9:
        raise ConvergenceError(f"dn3 not real on the edge of Q at {z}: {value}")
    return value.real


def zero_height_L(mod: Modulus) -> float:
    """The height L' of the zero K + iL' of dn3 on the right edge of Q."""
    K, Kp = mod.lattice.K, mod.lattice.Kp
    return _bisect(lambda y: _real_on_edge(complex(K, y), mod), 0.0, Kp)


def minus_two_point(mod: Modulus) -> float:
    """The abscissa x0 of the point x0 + iK' where dn3 takes the value -2."""
    K, Kp = mod.lattice.K, mod.lattice.Kp
    return _bisect(lambda x: _real_on_edge(complex(x, Kp), mod) + 2.0, 0.0, K)
