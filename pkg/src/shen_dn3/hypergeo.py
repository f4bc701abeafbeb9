"""Gauss hypergeometric series and complete elliptic integrals.

Only real parameters and real arguments with ``|z| < 1`` are supported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SeriesDivergenceError

__all__ = [
    "SeriesControl",
    "agm",
    "gauss_2f1",
    "hyp_half_closed",
    "complete_K_agm",
    "signature3_K",
]


@dataclass(frozen=True)
class SeriesControl:
    rel_tol: float = 1e-15
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_CONTROL = SeriesControl()


def _is_nonpositive_integer(c: float) -> bool:
    return c <= 0 and c == math.floor(c)


def gauss_2f1(a: float, b: float, c: float, z: float,
              ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Sum the hypergeometric series F(a, b; c; z) for real ``|z| < 1``.

    Summation stops at the first term whose magnitude is at most
    ``ctrl.rel_tol`` times the running sum. The sum is accumulated with
    Neumaier compensation so that long series near ``z = 1`` do not drift.
    """
    if _is_nonpositive_integer(c):
        raise DomainError(f"c must not be zero or a negative integer, got {c}")
    if not abs(z) < 1:
        raise DomainError(f"series requires |z| < 1, got z={z}")

    total, comp = 1.0, 0.0
    term = 1.0
    for n in range(ctrl.max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        if abs(term) <= ctrl.rel_tol * abs(total + comp):
            return total + comp
    raise SeriesDivergenceError(
        f"2F1({a}, {b}; {c}; {z}) did not converge", total + comp, ctrl.max_terms
    )


def hyp_half_closed(t: float, kappa: float) -> float:
    """F(1/3, 2/3; 1/2; kappa^2 sin^2 t) through its trigonometric closed form.

    With ``sin psi = kappa sin t`` (principal arcsine) the value is
    ``cos(psi/3) / cos(psi)``.
    """
    psi = math.asin(kappa * math.sin(t))
    return math.cos(psi / 3.0) / math.cos(psi)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if a < 0 or b < 0:
        raise DomainError(f"agm needs non-negative arguments, got {a}, {b}")
    for _ in range(64):
        if abs(a - b) <= 1e-15 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_K_agm(m: float, mc: float | None = None) -> float:
    """Complete elliptic integral of the first kind, K(m), with m = k^2.

    ``mc`` may be passed to supply ``1 - m`` without cancellation.
    """
    if not 0 <= m < 1:
        raise DomainError(f"parameter m must lie in [0, 1), got {m}")
    if mc is None:
        mc = 1.0 - m
    return math.pi / (2.0 * agm(1.0, math.sqrt(mc)))


def signature3_K(kappa2: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """(pi/2) F(1/3, 2/3; 1; kappa^2), the signature-three complete integral."""
    if not 0 < kappa2 < 1:
        raise DomainError(f"kappa^2 must lie in (0, 1), got {kappa2}")
    return 0.5 * math.pi * gauss_2f1(1.0 / 3.0, 2.0 / 3.0, 1.0, kappa2, ctrl)
