"""Exception types raised by the numerical routines."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain where the routine is defined."""


class SeriesDivergenceError(ArithmeticError):
    """A power series failed to meet its tolerance within the term budget."""

    def __init__(self, message: str, partial_sum: float, n_terms: int):
        super().__init__(f"{message} (partial sum {partial_sum!r} after {n_terms} terms)")
        self.partial_sum = partial_sum
        self.n_terms = n_terms


class ConvergenceError(ArithmeticError):
    """An iterative solver or adaptive quadrature did not converge."""

    def __init__(self, message: str, error_estimate: float | None = None):
        if error_estimate is not None:
            message = f"{message} (error estimate {error_estimate:.3e})"
        super().__init__(message)
        self.error_estimate = error_estimate


class PoleError(ArithmeticError):
    """Evaluation requested at (or too near) a pole."""

    def __init__(self, message: str, pole: complex):
        super().__init__(f"{message}: nearest pole at {pole!r}")
        self.pole = pole
