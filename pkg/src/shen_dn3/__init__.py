"""Signature-three elliptic function dn3.

Submodules: :mod:`hypergeo` (2F1 series, AGM), :mod:`weierstrass` (wp on the
rectangular lattice), :mod:`core` (dn3 and its closed forms),
:mod:`ramanujan` (the p-parametrised cubic transformation) and :mod:`cli`.
"""

from .core import (
    CriticalValues,
    FundamentalGeometry,
    GreenhillData,
    Modulus,
    critical_values,
    dn3_derivative_wp,
    dn3_direct,
    dn3_wp,
    f_integral,
    greenhill_data,
    midpoint_wp_values,
    minus_two_point,
    periods_via_greenhill,
    phi,
    pole_locations,
    sn3_cn3_direct,
    sn3_squared_elliptic,
    zero_height_L,
)
from .errors import ConvergenceError, DomainError, PoleError, SeriesDivergenceError

__version__ = "0.1.0"
