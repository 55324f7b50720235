"""Exact verification of local zeta-integral and Euler-factor identities.

Symbolic pipelines (Weyl-symmetrized spherical values, torus integrals) and a
concrete-prime p-adic Whittaker/Hecke oracle, all in exact arithmetic.
"""

from .cyclotomic import CyclotomicNumber
from .laurent import KERNEL, LaurentPolynomial, poly_gcd
from .ratfunc import PoleError, RationalFunction
from .series import sum_power_series

__all__ = [
    "CyclotomicNumber",
    "LaurentPolynomial",
    "RationalFunction",
    "PoleError",
    "poly_gcd",
    "sum_power_series",
    "KERNEL",
]

__version__ = "0.1.0"
