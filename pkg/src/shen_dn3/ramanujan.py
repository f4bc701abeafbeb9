"""The p-parametrisation linking F(1/3, 2/3; 1; .) with F(1/2, 1/2; 1; .).

For 0 < p < 1,

    F(1/3, 2/3; 1; beta) = (1 + p + p^2)/sqrt(1 + 2p) * F(1/2, 1/2; 1; alpha),

    alpha = p^3 (2 + p)/(1 + 2p),   beta = (27/4) p^2 (1 + p)^2 / (1 + p + p^2)^3.

The angle a of a modulus with kappa^2 = beta is tied to p by
sin a = (sqrt(3)/2) p / sqrt(1 + p + p^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .hypergeo import SeriesControl, complete_K_agm, gauss_2f1

__all__ = [
    "PParam",
    "P_MAX_DEFAULT",
    "angle_from_p",
    "p_from_angle",
    "s_cubic_roots",
    "ramanujan_maps",
    "verify_identity",
]

P_MAX_DEFAULT = 0.97
# beta -> 1 as p -> 1 and the 2F1 series then needs tens of thousands of terms
IDENTITY_SERIES = SeriesControl(rel_tol=1e-15, max_terms=400_000)

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class PParam:
    p: float
    angle_a: float
    beta: float
    alpha_r: float
    multiplier: float


def _check_p(p: float) -> None:
    if not 0 < p < 1:
        raise DomainError(f"p must lie in (0, 1), got {p}")


def angle_from_p(p: float) -> float:
    _check_p(p)
    return math.asin(0.5 * _SQRT3 * p / math.sqrt(1.0 + p + p * p))


def p_from_angle(angle_a: float) -> float:
    """Positive root of p^2 (3 - 4r^2) - 4r^2 p - 4r^2 = 0 with r = sin a."""
    if not 0 < angle_a < math.pi / 6:
        raise DomainError(f"angle must lie in (0, pi/6), got {angle_a}")
    r2 = math.sin(angle_a) ** 2
    A, B, C = 3.0 - 4.0 * r2, -4.0 * r2, -4.0 * r2
    # C < 0 < A: the roots have opposite signs; form avoids cancellation
    return 2.0 * C / (-B - math.sqrt(B * B - 4.0 * A * C))


def s_cubic_roots(p: float) -> tuple[float, float, float]:
    """Roots of S(3 - 4S)^2 = beta(p).

    Returned as ``(outer_lo, mid, outer_hi)``: the two outer roots exceed 1/4
    and ``mid`` (the one proportional to p^2) lies below 1/4.
    """
    _check_p(p)
    q = 4.0 * (1.0 + p + p * p)
    return 3.0 / q, 3.0 * p * p / q, 3.0 * (1.0 + p) ** 2 / q


def ramanujan_maps(p: float) -> PParam:
    _check_p(p)
    s = 1.0 + p + p * p
    return PParam(
        p=p,
        angle_a=angle_from_p(p),
        beta=6.75 * p * p * (1.0 + p) ** 2 / s ** 3,
        alpha_r=p ** 3 * (2.0 + p) / (1.0 + 2.0 * p),
        multiplier=s / math.sqrt(1.0 + 2.0 * p),
    )


def verify_identity(p: float, p_max: float = P_MAX_DEFAULT,
                    ctrl: SeriesControl = IDENTITY_SERIES) -> tuple[float, float, float]:
    """Evaluate both sides of the cubic transformation at ``p``.

    The left side is summed as a series, the right side comes from the AGM.
    Returns ``(lhs, rhs, relative residual)``.
    """
    _check_p(p)
    if p > p_max:
        raise DomainError(f"p={p} exceeds the verification cap {p_max}")
    pp = ramanujan_maps(p)
    lhs = gauss_2f1(1.0 / 3.0, 2.0 / 3.0, 1.0, pp.beta, ctrl)
    rhs = pp.multiplier * (2.0 / math.pi) * complete_K_agm(pp.alpha_r)
    return lhs, rhs, abs(lhs - rhs) / abs(rhs)
