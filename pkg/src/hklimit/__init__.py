"""Exact Hilbert-Kunz colengths for diagonal hypersurfaces over F_p and
their large-p multiplicity limits, with the Eulerian-polynomial and
secant-tangent identities of the all-squares case."""

from .colength import (
    HKInstance,
    SandwichReport,
    colength_bruteforce,
    colength_formula,
    frobenius_colength,
    increment_bound_holds,
    product_coefficients,
    sandwich_bounds,
)
from .errors import ConsistencyError
from .eulerian import eulerian_polynomial, zigzag_coefficient, zigzag_numbers
from .gaussian import GaussianRational
from .limit import (
    ConvergenceRow,
    LimitResult,
    convergence_table,
    eulerian_gaussian_ratio,
    limit_coefficient,
    multiplicity_limit,
    multiplicity_limit_quadratic,
    multiplicity_limit_sec_tan,
    quadratic_sum,
    quadratic_sum_via_eulerian,
    signed_power_sum,
    signed_power_sum_identity_holds,
)
from .modp import ModMatrix
from .poly import Polynomial
from .series import TruncatedSeries, eulerian_egf_residual, sec_tan_series

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "ConvergenceRow",
    "GaussianRational",
    "HKInstance",
    "LimitResult",
    "ModMatrix",
    "Polynomial",
    "SandwichReport",
    "TruncatedSeries",
    "colength_bruteforce",
    "colength_formula",
    "convergence_table",
    "eulerian_egf_residual",
    "eulerian_gaussian_ratio",
    "eulerian_polynomial",
    "frobenius_colength",
    "increment_bound_holds",
    "limit_coefficient",
    "multiplicity_limit",
    "multiplicity_limit_quadratic",
    "multiplicity_limit_sec_tan",
    "product_coefficients",
    "quadratic_sum",
    "quadratic_sum_via_eulerian",
    "sandwich_bounds",
    "sec_tan_series",
    "signed_power_sum",
    "signed_power_sum_identity_holds",
    "zigzag_coefficient",
    "zigzag_numbers",
]
