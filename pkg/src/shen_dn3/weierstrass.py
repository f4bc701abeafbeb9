"""Weierstrass elliptic function for the real rectangular lattice.

The lattice is the one attached to the invariants

    g2 = (4/27)(9 - 8 kappa^2),   g3 = (8/729)(8 kappa^4 - 36 kappa^2 + 27),

whose discriminant is positive for every kappa^2 in (0, 1). The real half
period is ``K`` and the imaginary half period is ``i Kp``.

Evaluation reduces ``z`` into the period cell centred at the origin and then
uses the classical relation with the Jacobi functions,

    wp(z) = e3 + (e1 - e3) / sn(z sqrt(e1 - e3) | m)^2,   m = (e2 - e3)/(e1 - e3),

with the complex argument split by the addition theorem. Every quantity is
kept as a ratio of finite pieces, so no square-root sign has to be chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, PoleError
from .hypergeo import agm

__all__ = [
    "Invariants",
    "LatticeData",
    "POLE_TOLERANCE",
    "invariants_from_modulus",
    "cubic_e_roots",
    "half_periods",
    "lattice_from_modulus",
    "reduce_to_cell",
    "jacobi_sn_cn_dn",
    "wp",
    "wp_prime",
    "wp_shifted_reciprocal",
    "order3_quartic",
    "order3_quartic_roots",
]

POLE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Invariants:
    g2: float
    g3: float
    delta: float


@dataclass(frozen=True)
class LatticeData:
    """Ordered roots e1 > e2 > e3 of 4t^3 - g2 t - g3 and the half periods."""

    e1: float
    e2: float
    e3: float
    K: float
    Kp: float
    inv: Invariants

    @property
    def m(self) -> float:
        return (self.e2 - self.e3) / (self.e1 - self.e3)

    @property
    def mc(self) -> float:
        return (self.e1 - self.e2) / (self.e1 - self.e3)


def invariants_from_modulus(kappa2: float) -> Invariants:
    if not 0 < kappa2 < 1:
        raise DomainError(f"kappa^2 must lie in (0, 1), got {kappa2}")
    g2 = 4.0 / 27.0 * (9.0 - 8.0 * kappa2)
    g3 = 8.0 / 729.0 * (8.0 * kappa2 * kappa2 - 36.0 * kappa2 + 27.0)
    # g2^3 - 27 g3^2 cancels badly for small kappa; use its factored form
    delta = (16.0 / 27.0) ** 3 * kappa2 ** 3 * (1.0 - kappa2)
    return Invariants(g2, g3, delta)


def cubic_e_roots(inv: Invariants) -> tuple[float, float, float]:
    """Real roots of ``4t^3 - g2 t - g3`` in decreasing order.

    Trigonometric solution of the three-real-root case. The angle is taken
    from ``atan2`` with the discriminant supplying the sine, which keeps the
    two close roots e2, e3 accurate when the discriminant is small.
    """
    g2, g3 = inv.g2, inv.g3
    if not inv.delta > 0 or g2 <= 0:
        raise DomainError(f"lattice with discriminant {inv.delta} is not rectangular")
    r = 2.0 * math.sqrt(g2 / 12.0)
    # cos(3 theta) = sqrt(27) g3 / g2^(3/2), sin(3 theta) = sqrt(delta) / g2^(3/2)
    theta = math.atan2(math.sqrt(inv.delta), math.sqrt(27.0) * g3) / 3.0
    e1 = r * math.cos(theta)
    e2 = r * math.cos(theta - 2.0 * math.pi / 3.0)
    e3 = r * math.cos(theta + 2.0 * math.pi / 3.0)
    if not e1 > e2 > e3:
        raise ConvergenceError(f"cubic roots not separated: {e1}, {e2}, {e3}")
    return e1, e2, e3


def half_periods(inv: Invariants) -> LatticeData:
    e1, e2, e3 = cubic_e_roots(inv)
    K = math.pi / (2.0 * agm(math.sqrt(e1 - e3), math.sqrt(e1 - e2)))
    Kp = math.pi / (2.0 * agm(math.sqrt(e1 - e3), math.sqrt(e2 - e3)))
    return LatticeData(e1, e2, e3, K, Kp, inv)


def lattice_from_modulus(kappa2: float) -> LatticeData:
    return half_periods(invariants_from_modulus(kappa2))


def reduce_to_cell(z: complex, lat: LatticeData) -> complex:
    """Translate ``z`` by a period into the cell ``|Re| <= K, |Im| <= Kp``."""
    z = complex(z)
    x = z.real - 2.0 * lat.K * round(z.real / (2.0 * lat.K))
    y = z.imag - 2.0 * lat.Kp * round(z.imag / (2.0 * lat.Kp))
    return complex(x, y)


def jacobi_sn_cn_dn(u: float, m: float, mc: float | None = None) -> tuple[float, float, float]:
    """Jacobi sn, cn, dn for real argument and parameter 0 <= m < 1.

    Descending Landen transformation driven by the AGM sequence. ``mc``
    supplies ``1 - m`` when it is known more accurately than by subtraction.
    """
    if mc is None:
        mc = 1.0 - m
    if m == 0.0:
        return math.sin(u), math.cos(u), 1.0
    a, b = 1.0, math.sqrt(mc)
    ratios = []
    for _ in range(64):
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        ratios.append(c / a)
        if abs(c) <= 1e-16 * a:
            break
    phi = (1 << len(ratios)) * a * u
    for ratio in reversed(ratios):
        phi = 0.5 * (phi + math.asin(ratio * math.sin(phi)))
    sn, cn = math.sin(phi), math.cos(phi)
    # sum of non-negative terms: stays accurate where dn is small or cn ~ 0
    return sn, cn, math.sqrt(mc + m * cn * cn)


def _sn_parts(z: complex, lat: LatticeData) -> tuple[complex, complex, complex, float]:
    """Numerators of sn, cn, dn at the scaled argument and their common denominator.

    For ``w = z sqrt(e1 - e3)`` one has sn(w) = N/den, cn(w) = C/den and
    dn(w) = D/den.
    """
    scale = math.sqrt(lat.e1 - lat.e3)
    m, mc = lat.m, lat.mc
    s, c, d = jacobi_sn_cn_dn(z.real * scale, m, mc)
    s1, c1, d1 = jacobi_sn_cn_dn(z.imag * scale, mc, m)
    den = c1 * c1 + m * s * s * s1 * s1
    N = complex(s * d1, c * d * s1 * c1)
    C = complex(c * c1, -s * d * s1 * d1)
    D = complex(d * c1 * d1, -m * s * c * s1)
    return N, C, D, den


def _check_lattice_pole(z: complex, zr: complex) -> None:
    if abs(zr) < POLE_TOLERANCE:
        raise PoleError("wp has a double pole at lattice points", z - zr)


def wp(z: complex, lat: LatticeData) -> complex:
    """The Weierstrass function at ``z``; raises PoleError near lattice points."""
    zr = reduce_to_cell(z, lat)
    _check_lattice_pole(z, zr)
    N, _, _, den = _sn_parts(zr, lat)
    return lat.e3 + (lat.e1 - lat.e3) * (den / N) ** 2


def wp_prime(z: complex, lat: LatticeData) -> complex:
    zr = reduce_to_cell(z, lat)
    _check_lattice_pole(z, zr)
    N, C, D, den = _sn_parts(zr, lat)
    return -2.0 * (lat.e1 - lat.e3) ** 1.5 * C * D * den / N ** 3


def wp_shifted_reciprocal(z: complex, shift: float, lat: LatticeData) -> tuple[complex, complex]:
    """Return ``1/(shift + wp(z))`` and ``wp'(z)/(shift + wp(z))^2``.

    Both are finite at the lattice points, where they vanish, so this is the
    form to use for functions that are regular where wp has its poles.
    Raises PoleError where ``shift + wp`` vanishes exactly.
    """
    zr = reduce_to_cell(z, lat)
    N, C, D, den = _sn_parts(zr, lat)
    Q = (shift + lat.e3) * N * N + (lat.e1 - lat.e3) * den * den
    if Q == 0:
        raise PoleError(f"wp(z) = {-shift} here", z)
    recip = N * N / Q
    deriv = -2.0 * (lat.e1 - lat.e3) ** 1.5 * C * D * den * N / (Q * Q)
    return recip, deriv


def order3_quartic(w: complex, inv: Invariants) -> complex:
    """The quartic satisfied by wp at the points of order three."""
    return w ** 4 - 0.5 * inv.g2 * w * w - inv.g3 * w - inv.g2 * inv.g2 / 48.0


def order3_quartic_roots(inv: Invariants) -> tuple[float, float, complex]:
    """Zeros of the order-three quartic: (-1/3, positive root, upper complex root).

    The known root -1/3 is divided out and the residual cubic is solved in
    closed form; its real root is Newton-polished before the last quadratic
    factor is split off.
    """
    r0 = -1.0 / 3.0
    b1 = r0
    b2 = -0.5 * inv.g2 + r0 * b1
    b3 = -inv.g3 + r0 * b2
    remainder = -inv.g2 * inv.g2 / 48.0 + r0 * b3
    if abs(remainder) > 1e-12:
        raise DomainError(f"-1/3 is not a zero of the quartic (remainder {remainder:.3e})")

    # w^3 + b1 w^2 + b2 w + b3, depressed by w = t - b1/3
    p = b2 - b1 * b1 / 3.0
    q = 2.0 * b1 ** 3 / 27.0 - b1 * b2 / 3.0 + b3
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc < 0:
        raise ConvergenceError(f"residual cubic has three real roots (disc {disc:.3e})")
    sq = math.sqrt(disc)
    t = math.copysign(abs(-q / 2.0 + sq) ** (1 / 3), -q / 2.0 + sq) \
        + math.copysign(abs(-q / 2.0 - sq) ** (1 / 3), -q / 2.0 - sq)
    r1 = t - b1 / 3.0
    for _ in range(4):
        f = ((r1 + b1) * r1 + b2) * r1 + b3
        df = (3.0 * r1 + 2.0 * b1) * r1 + b2
        r1 -= f / df

    c1 = b1 + r1
    c0 = b2 + r1 * c1
    pair = complex(-0.5 * c1, 0.5 * math.sqrt(max(0.0, 4.0 * c0 - c1 * c1)))
    if not r1 > 0:
        raise ConvergenceError(f"expected a positive real zero, found {r1}")
    return r0, r1, pair
