"""Identity checks behind ``shen-dn3 verify``.

Every check produces one :class:`Entry`. Tolerances live in
:data:`TOLERANCES` and nowhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import core, ramanujan
from . import weierstrass as wps
from .hypergeo import complete_K_agm, signature3_K

TOLERANCES: dict[str, float] = {
    "route_agreement": 1e-9,
    "pythagorean_cubic": 1e-9,
    "pythagorean_factored": 1e-9,
    "complementary_cn": 1e-9,
    "dn3_ode": 1e-9,
    "dn3_derivative_fd": 1e-6,
    "wp_ode_relative": 1e-9,
    "wp_at_pole": 1e-10,
    "quartic_at_minus_third": 1e-14,
    "pole_residue_relative": 1e-6,
    "critical_values_vs_cubic": 1e-12,
    "vieta_sum": 1e-12,
    "vieta_product": 1e-12,
    "dn3_at_K": 1e-10,
    "dn3_at_K_plus_iKp": 1e-10,
    "dn3_at_iKp": 1e-10,
    "midpoint_values_vs_cubic": 1e-10,
    "K_greenhill_vs_lattice": 1e-10,
    "Kp_greenhill_vs_lattice": 1e-10,
    "Kp_over_K_quotient": 1e-10,
    "K_signature3_series": 1e-10,
    "K_quadrature": 1e-10,
    "phi_at_K": 1e-10,
    "cubic_transformation": 1e-10,
    "multiplier_map": 1e-12,
    "legendre_modulus_map": 1e-12,
    "zero_on_right_edge": 1e-10,
    "minus_two_on_upper_edge": 1e-10,
    "sn3_squared_at_minus_two": 1e-12,
    "ellipticity": 1e-9,
    "monotone_on_0_K": 0.0,
}

FD_STEP = 1e-6
POLE_OFFSET = 1e-7


@dataclass
class Entry:
    name: str
    expected: float
    actual: float
    residual: float
    tolerance: float
    passed: bool


@dataclass
class Report:
    entries: list[Entry] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(e.passed for e in self.entries)

    def add(self, name: str, expected: float, actual: float, residual: float | None = None) -> None:
        if residual is None:
            residual = abs(actual - expected)
        tol = TOLERANCES[name]
        passed = bool(math.isfinite(residual) and residual <= tol)
        self.entries.append(Entry(name, float(expected), float(actual), float(residual), tol, passed))

    def run(self, name: str, check: Callable[[], tuple]) -> None:
        """Record ``check()``; an exception becomes a failing entry."""
        try:
            self.add(name, *check())
        except ArithmeticError:
            self.add(name, 0.0, math.nan, math.nan)


def interior_grid(K: float, Kp: float, n: int = 10) -> list[complex]:
    """Cell centres of an n x n subdivision of the quarter rectangle."""
    return [complex((i + 0.5) * K / n, (j + 0.5) * Kp / n) for i in range(n) for j in range(n)]


def _max(values) -> float:
    return max(values, default=0.0)


def run_verification(kappa2: float, grid: int = 100) -> Report:
    report = Report()
    if grid == 0:
        return report

    mod = core.Modulus.from_kappa2(kappa2)
    lat, inv = mod.lattice, mod.invariants
    geo = core.periods_via_greenhill(mod)
    cv = core.critical_values(mod)
    lam2 = mod.lam ** 2
    k2 = mod.kappa2
    reals = [2.0 * lat.K * i / max(grid - 1, 1) for i in range(grid)]
    cells = interior_grid(lat.K, lat.Kp)

    # real line: both routes
    direct = [(u, core.dn3_direct(u, mod), core.sn3_cn3_direct(u, mod), core.dn3_wp(u, mod)) for u in reals]
    report.add("route_agreement", 0.0, _max(
        max(abs(d - w.real), abs(w.imag)) for _, d, _, w in direct))
    report.add("pythagorean_cubic", 0.0, _max(
        abs(4.0 * (1.0 - k2 * s * s) - (d ** 3 + 3.0 * d * d)) for _, d, (s, _), _ in direct))
    report.add("pythagorean_factored", 0.0, _max(
        abs(4.0 * k2 * s * s - (1.0 - d) * (2.0 + d) ** 2) for _, d, (s, _), _ in direct))
    report.add("complementary_cn", 0.0, _max(
        abs(4.0 * k2 * c * c - (d ** 3 + 3.0 * d * d - 4.0 * lam2)) for _, d, (_, c), _ in direct))

    # complex points of the quarter rectangle
    def ode_residual(z):
        d = core.dn3_wp(z, mod)
        dp = core.dn3_derivative_wp(z, mod)
        return abs(dp * dp - 4.0 / 9.0 * (1.0 - d) * (d ** 3 + 3.0 * d * d - 4.0 * lam2))

    def fd_residual(z):
        h = FD_STEP
        fd = (core.dn3_wp(z + h, mod) - core.dn3_wp(z - h, mod)) / (2.0 * h)
        return abs(fd - core.dn3_derivative_wp(z, mod))

    def wp_ode(z):
        w, dw = wps.wp(z, lat), wps.wp_prime(z, lat)
        return abs(dw * dw - (4.0 * w ** 3 - inv.g2 * w - inv.g3)) / (1.0 + abs(dw) ** 2)

    report.run("dn3_ode", lambda: (0.0, _max(map(ode_residual, cells))))
    report.run("dn3_derivative_fd", lambda: (0.0, _max(map(fd_residual, cells))))
    report.run("wp_ode_relative", lambda: (0.0, _max(map(wp_ode, cells))))

    # poles
    pole = 1j * geo.pole_height
    report.run("wp_at_pole", lambda: (-1.0 / 3.0, wps.wp(pole, lat).real,
                                      abs(wps.wp(pole, lat) + 1.0 / 3.0)))
    report.add("quartic_at_minus_third", 0.0, abs(wps.order3_quartic(-1.0 / 3.0, inv)))

    def residue():
        predicted = 4.0 / 9.0 * k2 / abs(wps.wp_prime(pole, lat))
        seen = [abs(core.dn3_wp(pole + POLE_OFFSET * np.exp(1j * t), mod)) * POLE_OFFSET
                for t in np.linspace(0.0, 2.0 * math.pi, 8, endpoint=False)]
        worst = max(seen, key=lambda s: abs(s - predicted))
        return predicted, worst, abs(worst - predicted) / predicted

    report.run("pole_residue_relative", residue)

    # critical values and midpoint values
    cubic = sorted(np.roots([1.0, 3.0, 0.0, -4.0 * lam2]).real, reverse=True)
    report.add("critical_values_vs_cubic", 0.0, 0.0,
               max(abs(cubic[0] - cv.x1), abs(cubic[1] + cv.x2), abs(cubic[2] + cv.x3)))
    report.add("vieta_sum", -3.0, cv.x1 - cv.x2 - cv.x3)
    report.add("vieta_product", 4.0 * lam2, cv.x1 * cv.x2 * cv.x3)
    report.run("dn3_at_K", lambda: (cv.x1, core.dn3_wp(lat.K, mod).real))
    report.run("dn3_at_K_plus_iKp", lambda: (-cv.x2, core.dn3_wp(complex(lat.K, lat.Kp), mod).real))
    report.run("dn3_at_iKp", lambda: (-cv.x3, core.dn3_wp(complex(0.0, lat.Kp), mod).real))
    closed = core.midpoint_wp_values(mod)
    roots = wps.cubic_e_roots(inv)
    report.add("midpoint_values_vs_cubic", 0.0, 0.0, max(abs(a - b) for a, b in zip(closed, roots)))

    # periods
    report.add("K_greenhill_vs_lattice", lat.K, geo.K, abs(geo.K - lat.K) / lat.K)
    report.add("Kp_greenhill_vs_lattice", lat.Kp, geo.Kp, abs(geo.Kp - lat.Kp) / lat.Kp)
    gd = core.greenhill_data(mod)
    quotient = complete_K_agm(gd.kp2, gd.k2) / complete_K_agm(gd.k2, gd.kp2)
    report.add("Kp_over_K_quotient", quotient, lat.Kp / lat.K,
               abs(lat.Kp / lat.K - quotient) / quotient)
    report.run("K_signature3_series", lambda: (
        signature3_K(k2), geo.K, abs(geo.K - signature3_K(k2)) / geo.K))
    report.add("K_quadrature", geo.K, mod.quarter_integral,
               abs(mod.quarter_integral - geo.K) / geo.K)
    report.run("phi_at_K", lambda: (0.5 * math.pi, core.phi(geo.K, mod)))

    # the cubic transformation at the p matching this modulus
    p = ramanujan.p_from_angle(mod.angle_a)
    pp = ramanujan.ramanujan_maps(p)

    def transformation():
        lhs, rhs, resid = ramanujan.verify_identity(p, p_max=1.0)
        return rhs, lhs, resid

    report.run("cubic_transformation", transformation)
    expected_M2 = 9.0 * (1.0 + 2.0 * p) / (1.0 + p + p * p) ** 2
    report.add("multiplier_map", expected_M2, 4.0 * gd.M2)
    report.add("legendre_modulus_map", pp.alpha_r, gd.k2)

    # zero, the -2 point
    def zero_check():
        L = core.zero_height_L(mod)
        return 0.0, abs(core.dn3_wp(complex(lat.K, L), mod))

    def minus_two():
        x0 = core.minus_two_point(mod)
        return -2.0, core.dn3_wp(complex(x0, lat.Kp), mod).real

    def sn3_sq():
        x0 = core.minus_two_point(mod)
        return 0.0, abs(core.sn3_squared_elliptic(complex(x0, lat.Kp), mod))

    report.run("zero_on_right_edge", zero_check)
    report.run("minus_two_on_upper_edge", minus_two)
    report.run("sn3_squared_at_minus_two", sn3_sq)

    # ellipticity, parity and reality on a grid covering the period cell
    def symmetry():
        worst = 0.0
        for z in interior_grid(2.0 * lat.K, 2.0 * lat.Kp):
            z = z - complex(lat.K, lat.Kp)
            d = core.dn3_wp(z, mod)
            scale = 1.0 + abs(d)
            for other in (z + 2.0 * lat.K, z + 2j * lat.Kp, -z):
                worst = max(worst, abs(core.dn3_wp(other, mod) - d) / scale)
            worst = max(worst, abs(core.dn3_wp(z.conjugate(), mod).conjugate() - d) / scale)
        return 0.0, worst

    report.run("ellipticity", symmetry)

    def monotone():
        us = [lat.K * (i + 1) / 51 for i in range(50)]
        vals = [core.dn3_direct(u, mod) for u in us]
        violations = sum(1 for a, b in zip(vals, vals[1:]) if not b < a)
        return 0.0, float(violations)

    report.run("monotone_on_0_K", monotone)
    return report
