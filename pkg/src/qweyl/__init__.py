"""Exact arithmetic and factorization classifiers for the algebra yx = q*xy + 1."""

from .field import Field, Scalar, multiplicative_order, q_int, square_root
from .algebra import WeylAlgebra, WeylPoly, divides, is_central, is_normal, u_power_coeffs

__all__ = [
    "Field",
    "Scalar",
    "square_root",
    "multiplicative_order",
    "q_int",
    "WeylAlgebra",
    "WeylPoly",
    "divides",
    "is_normal",
    "is_central",
    "u_power_coeffs",
]

__version__ = "0.1.0"
