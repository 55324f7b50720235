"""Closed forms for power sums: sum_{k>=0} c * k^e * x^k as a rational function."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPolynomial
from .ratfunc import RationalFunction

_T = ("T",)


@lru_cache(maxsize=None)
def _power_sum_generic(e: int) -> RationalFunction:
    """sum_{k>=0} k^e T^k in the single formal variable T.

    e = 0 gives 1/(1-T); higher e by the derivative recursion S_e = T * S_{e-1}'.
    """
    if e == 0:
        one = LaurentPolynomial.one(_T)
        t = LaurentPolynomial.var(_T, "T")
        return RationalFunction(one, one - t)
    prev = _power_sum_generic(e - 1)
    return _t_derivative(prev) * RationalFunction.var(_T, "T")


def _t_derivative(f: RationalFunction) -> RationalFunction:
    def d(poly: LaurentPolynomial) -> LaurentPolynomial:
        out = {}
        for (k,), c in poly.terms.items():
            if k:
                out[(k - 1,)] = c * k
        return LaurentPolynomial(_T, out)

    num, den = f.num, f.den
    return RationalFunction(d(num) * den - num * d(den), den * den)


def sum_power_series(c: RationalFunction, e: int, x: RationalFunction) -> RationalFunction:
    """Closed form of sum_{k>=0} c * k^e * x^k (formal continuation, no convergence).

    Raises ZeroDivisionError when x is identically 1 (the geometric pole).
    """
    if e < 0:
        raise ValueError("power of k must be nonnegative")
    one = RationalFunction.from_const(x.vars, 1)
    if x == one:
        raise ZeroDivisionError("summation parameter is identically 1")
    generic = _power_sum_generic(e)
    return c * generic.substitute({"T": x})


def partial_power_sum(c: Fraction, e: int, x: Fraction, kmax: int) -> Fraction:
    """Numeric oracle: sum_{k=0}^{kmax} c * k^e * x^k."""
    total = Fraction(0)
    for k in range(kmax + 1):
        total += c * Fraction(k) ** e * x**k
    return total
