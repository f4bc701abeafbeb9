"""Adaptive Gauss-Legendre quadrature for smooth real integrands."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import ConvergenceError


@lru_cache(maxsize=None)
def _rule(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def _gauss(func: Callable[[np.ndarray], np.ndarray], a: float, b: float, order: int) -> float:
    x, w = _rule(order)
    half, mid = 0.5 * (b - a), 0.5 * (b + a)
    return half * float(np.dot(w, func(half * x + mid)))


def adaptive_gauss_legendre(
    func: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    abs_tol: float = 1e-12,
    order: int = 20,
    max_depth: int = 40,
) -> float:
    """Integrate a vectorised ``func`` over [a, b].

    Each panel is accepted when the ``order``-point rule agrees with the sum
    of the same rule on its two halves; otherwise both halves are refined
    with half the tolerance.
    """
    if a == b:
        return 0.0
    whole = _gauss(func, a, b, order)
    # explicit stack: (a, b, estimate, tolerance, depth)
    stack = [(a, b, whole, abs_tol, 0)]
    total = 0.0
    worst = 0.0
    while stack:
        lo, hi, est, tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _gauss(func, lo, mid, order)
        right = _gauss(func, mid, hi, order)
        err = abs(left + right - est)
        if err <= tol:
            total += left + right
            continue
        if depth >= max_depth:
            worst = max(worst, err)
            total += left + right
            continue
        stack.append((lo, mid, left, 0.5 * tol, depth + 1))
        stack.append((mid, hi, right, 0.5 * tol, depth + 1))
    if worst:
        raise ConvergenceError(f"quadrature on [{a}, {b}] missed tolerance {abs_tol}", worst)
    return total
