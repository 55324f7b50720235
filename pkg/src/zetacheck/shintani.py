"""Weyl-symmetrized spherical values, p-stabilized values, the special-case
closed forms, and the symbolic identity verifier.

The symmetrized sums are computed with denominators kept as multisets of
irreducible binomial factors, so cancellation is exact binomial division and
no multivariate gcd is ever needed in the hot path.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .factors import factor, factor_terms, l_polynomial, relabel, relabel_table, relabeled_delta, relabeled_gamma
from .factors import GSP4_RELABEL_VARS, GSP4XGL2_RELABEL_VARS
from .laurent import LaurentPolynomial
from .params import CTX, WEYL_GSP4, apply_weyl, reduce_at_q1, weyl_triples
from .ratfunc import PoleError, RationalFunction

# ---------------------------------------------------------------------------
# Factored rationals over a fixed set of irreducible binomial denominators.


def canonical_factor(f: RationalFunction):
    """Split a binomial factor as unit * P with P the canonical polynomial.

    Returns (P, unit) with unit a monomial RationalFunction such that
    f == unit * P.
    """
    num, den = f.num, f.den
    if not den.is_monomial():
        raise ValueError("factor must have monomial denominator")
    m = num.min_exponents()
    shifted = num.shift({v: -k for v, k in zip(num.vars, m) if k}) if any(m) else num
    _, lc = shifted.lex_leading()
    if lc != 1:
        shifted = shifted.scale(Fraction(1, 1) / lc)
    # f = (lc * x^m / den) * shifted
    unit_num = LaurentPolynomial.monomial(num.vars, {v: k for v, k in zip(num.vars, m)}, lc)
    unit = RationalFunction(unit_num, den)
    return shifted, unit


class FactoredRational:
    """num / prod(factors^mult) with factors canonical irreducible binomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: dict | None = None):
        self.num = num
        self.den = dict(den or {})

    @classmethod
    def from_poly(cls, p: LaurentPolynomial) -> "FactoredRational":
        return cls(p, {})

    def scale_monomial(self, rf: RationalFunction) -> "FactoredRational":
        """Multiply by a monomial rational function."""
        ((en, cn),) = rf.num.terms.items()
        ((ed, cd),) = rf.den.terms.items()
        shift = {v: a - b for v, a, b in zip(rf.vars, en, ed) if a - b}
        return FactoredRational(self.num.shift(shift, Fraction(cn) / cd), self.den)

    def mul_poly(self, p: LaurentPolynomial) -> "FactoredRational":
        return FactoredRational(self.num * p, self.den)

    def div_factor(self, f: RationalFunction, mult: int = 1) -> "FactoredRational":
        P, unit = canonical_factor(f)
        out = self
        for _ in range(mult):
            out = out.scale_monomial(unit.inv())
        den = dict(out.den)
        den[P] = den.get(P, 0) + mult
        return FactoredRational(out.num, den)

    def __add__(self, other: "FactoredRational") -> "FactoredRational":
        union = dict(self.den)
        for f, k in other.den.items():
            union[f] = max(union.get(f, 0), k)
        numL = self.num
        for f, k in union.items():
            for _ in range(k - self.den.get(f, 0)):
                numL = numL * f
        numR = other.num
        for f, k in union.items():
            for _ in range(k - other.den.get(f, 0)):
                numR = numR * f
        return FactoredRational(numL + numR, union)._reduced()

    def _reduced(self) -> "FactoredRational":
        num = self.num
        den = {}
        if num.is_zero():
            return FactoredRational(num, {})
        for f, k in self.den.items():
            while k > 0:
                q = num.divexact(f)
                if q is None:
                    break
                num = q
                k -= 1
            if k:
                den[f] = k
        return FactoredRational(num, den)

    def to_ratfunc(self) -> RationalFunction:
        # Factors are irreducible binomials not dividing num, so only unit
        # normalization remains.
        reduced = self._reduced()
        den = LaurentPolynomial.one(self.num.vars)
        for f, k in reduced.den.items():
            den = den * f**k
        num, den = _canonicalize_units_only(reduced.num, den)
        return RationalFunction(num, den, _canonical=True)


def _canonicalize_units_only(num: LaurentPolynomial, den: LaurentPolynomial):
    m = den.min_exponents()
    if any(m):
        shift = {v: -k for v, k in zip(den.vars, m) if k}
        den = den.shift(shift)
        num = num.shift(shift)
    _, lc = den.lex_leading()
    if lc != 1:
        inv = Fraction(1, 1) / lc
        den = den.scale(inv)
        num = num.scale(inv)
    return num, den


# ---------------------------------------------------------------------------
# Precomputed Weyl images of the Euler data.


@lru_cache(maxsize=None)
def _triple_data():
    """Per Weyl triple: E^w / (Delta0*Delta1*Delta2)^w as a FactoredRational."""
    data = []
    e_terms = factor_terms("E")
    d_terms = factor_terms("Delta0") + factor_terms("Delta1") + factor_terms("Delta2")
    for w in weyl_triples():
        data.append((w, _factored_image(w, e_terms, d_terms)))
    return tuple(data)


_Q_MINUS_1 = CTX.q - 1
_Q_PLUS_1 = CTX.q + 1


def _monomial_weight(m: int, n: int, x1: int, x2: int) -> RationalFunction:
    return (
        CTX.alpha ** (m + n)
        * CTX.beta**n
        * CTX.a1**x1
        * CTX.a2**x2
        / CTX.q ** (3 * m + 5 * n + x1 + x2)
    )


def spherical_value(m: int, n: int, x1: int, x2: int) -> RationalFunction:
    """The Weyl-symmetrized closed form for spherical data:

        q^4/(q^2-1)^2 * sum over the 32 Weyl triples of
            [ alpha^m (alpha beta)^n a1^x1 a2^x2 / q^(3m+5n+x1+x2) * E/(D0 D1 D2) ].
    """
    if min(m, n, x1, x2) < 0:
        raise ValueError("indices must be nonnegative")
    mono = _monomial_weight(m, n, x1, x2)
    total = None
    for w, fr in _triple_data():
        term = fr.scale_monomial(apply_weyl(w, mono))
        total = term if total is None else total + term
    total = total.div_factor(_Q_MINUS_1, 2).div_factor(_Q_PLUS_1, 2)
    return total.to_ratfunc() * CTX.q**4


def pstabilized_value(m: int, n: int, x1: int, x2: int) -> RationalFunction:
    """q^4/(q^2-1)^2 * alpha^m (alpha beta)^n a1^x1 a2^x2 / q^(3m+5n+x1+x2) * E."""
    if min(m, n, x1, x2) < 0:
        raise ValueError("indices must be nonnegative")
    return CTX.q**4 / (CTX.q**2 - 1) ** 2 * _monomial_weight(m, n, x1, x2) * factor("E")


_VARIANT_DOMAINS = {
    "i": lambda m, n, x1, x2: m >= 0 and n >= 0 and x1 >= 1 and x2 >= 1,
    "ii": lambda m, n, x1, x2: m >= 1 and n >= 1 and x1 >= 0 and x2 >= 0,
    "iii": lambda m, n, x1, x2: min(m, n, x1, x2) >= 1,
    "iv": lambda m, n, x1, x2: m >= 1 and n >= 1 and x2 >= 1 and x1 >= 0,
}


def variant_value(case: str, m: int, n: int, x1: int, x2: int) -> RationalFunction:
    """The common value of the four p-stabilized variants on its stated domain."""
    if case not in _VARIANT_DOMAINS:
        raise KeyError(f"unknown variant case {case!r}")
    if not _VARIANT_DOMAINS[case](m, n, x1, x2):
        raise ValueError(f"indices outside the stated domain of case {case}")
    return pstabilized_value(m, n, x1, x2)


# ---------------------------------------------------------------------------
# Special cases.


def _sum_over_w0(build) -> RationalFunction:
    """Sum over the 8 GSp4 Weyl elements of build(w) given as FactoredRational."""
    total = None
    for w in WEYL_GSP4:
        term = build(w)
        total = term if total is None else total + term
    return total.to_ratfunc()


def _factored_image(w, numerator_terms, denominator_terms) -> FactoredRational:
    """prod(numerator_terms)^w / prod(denominator_terms)^w as FactoredRational."""
    img = CTX.one
    for t in numerator_terms:
        img = img * apply_weyl(w, t)
    fr = FactoredRational(img.num)
    fr = fr.scale_monomial(RationalFunction(LaurentPolynomial.one(CTX.vars), img.den))
    for t in denominator_terms:
        fr = fr.div_factor(apply_weyl(w, t))
    return fr


def tame_norm_sum() -> RationalFunction:
    """sum over w0 of [ E/Delta0 * (1 - alpha b1 b2 / q^3) ]^w0."""
    extra = CTX.one - CTX.alpha * CTX.b1 * CTX.b2 / CTX.q**3
    return _sum_over_w0(
        lambda w: _factored_image(w, factor_terms("E") + [extra], factor_terms("Delta0"))
    )


def tame_norm_closed_form() -> RationalFunction:
    return CTX.q**3 / ((CTX.q - 1) * (CTX.q + 1) ** 2) * l_polynomial(
        "P_pi", CTX.b1 * CTX.b2 / CTX.q**3
    )


def siegel_two_term_sum() -> RationalFunction:
    """q^4/(q^2-1)^2 * (alpha/q^3) * [ E/(1-gamma/beta) + (beta<->gamma image) ]."""
    from .params import WEYL_BY_LABEL

    identity = WEYL_BY_LABEL["ab"]
    swap_bg = next(w for w in WEYL_GSP4 if w.perm == {"a": "a", "b": "g", "g": "b", "d": "d"})
    one_minus_gb = CTX.one - CTX.gamma / CTX.beta
    first = _factored_image(identity, factor_terms("E"), [one_minus_gb])
    second = _factored_image(swap_bg, factor_terms("E"), [one_minus_gb])
    total = (first + second).to_ratfunc()
    return CTX.q**4 / (CTX.q**2 - 1) ** 2 * (CTX.alpha / CTX.q**3) * total


def siegel_closed_form() -> RationalFunction:
    a, b, g = CTX.alpha, CTX.beta, CTX.gamma
    q2 = CTX.q**2
    a1, b1, a2, b2 = CTX.a1, CTX.b1, CTX.a2, CTX.b2
    prod = (
        (CTX.one - q2 / (a * a1 * a2))
        * (CTX.one - q2 / (a * b1 * a2))
        * (CTX.one - q2 / (a * a1 * b2))
        * (CTX.one - q2 / (a * b1 * b2))
        * (CTX.one - q2 / (b * a1 * a2))
        * (CTX.one - q2 / (g * a1 * a2))
    )
    return CTX.alpha / ((CTX.q - 1) * (CTX.q + 1) ** 2) * prod


def siegel_six_factor_terms() -> list:
    a, b, g = CTX.alpha, CTX.beta, CTX.gamma
    q2 = CTX.q**2
    a1, b1, a2, b2 = CTX.a1, CTX.b1, CTX.a2, CTX.b2
    return [
        CTX.one - q2 / (a * a1 * a2),
        CTX.one - q2 / (a * b1 * a2),
        CTX.one - q2 / (a * a1 * b2),
        CTX.one - q2 / (a * b1 * b2),
        CTX.one - q2 / (b * a1 * a2),
        CTX.one - q2 / (g * a1 * a2),
    ]


def klingen_eigen_closed_form(n: int, x1: int, x2: int) -> RationalFunction:
    pref = CTX.q**3 / ((CTX.q + 1) ** 2 * (CTX.q - 1))
    return (
        pref
        * (CTX.alpha * CTX.beta / CTX.q**5) ** n
        * (CTX.a1 / CTX.q) ** x1
        * (CTX.a2 / CTX.q) ** x2
        * factor("E_Kl")
    )


def iwahori_eigen_closed_form() -> RationalFunction:
    pref = CTX.q**3 / ((CTX.q + 1) ** 2 * (CTX.q - 1))
    return pref * (CTX.one - CTX.q**2 / (CTX.beta * CTX.b1 * CTX.b2)).inv() * factor("B_Kl")


def depleted_closed_form() -> RationalFunction:
    return CTX.q**3 / ((CTX.q + 1) ** 2 * (CTX.q - 1)) * factor("B_Kl")


def special_case(case_id: str, *args) -> RationalFunction:
    """Closed forms for the named special cases of the zeta-value formulas."""
    if case_id == "iwahori1":
        return CTX.alpha**2 * CTX.beta * CTX.a1 * CTX.a2 * factor("E") / (
            CTX.q**6 * (CTX.q**2 - 1) ** 2
        )
    if case_id == "iwahori2":
        return CTX.alpha**2 * CTX.beta * factor("E") / (CTX.q**4 * (CTX.q**2 - 1) ** 2)
    if case_id == "iwahori3":
        return CTX.alpha**2 * CTX.beta * CTX.a2 * factor("E") / (
            CTX.q**5 * (CTX.q**2 - 1) ** 2
        )
    if case_id == "siegel":
        return siegel_closed_form()
    if case_id == "klingenEigen":
        n, x1, x2 = args if args else (0, 0, 0)
        return klingen_eigen_closed_form(n, x1, x2)
    if case_id == "tameNorm":
        return tame_norm_closed_form()
    if case_id == "iwahoriEigen":
        return iwahori_eigen_closed_form()
    if case_id == "depleted":
        return depleted_closed_form()
    raise KeyError(f"unknown special case {case_id!r}")


def sum_invdelta0() -> RationalFunction:
    return _sum_over_w0(lambda w: _factored_image(w, [], factor_terms("Delta0")))


def sum_invdelta0_delta2() -> RationalFunction:
    """Sum over (w0, swap2) of 1/(Delta0 * Delta2)."""
    total = None
    dterms = factor_terms("Delta0") + factor_terms("Delta2")
    for w0 in WEYL_GSP4:
        for s2 in (False, True):
            term = _factored_image((w0, False, s2), [], dterms)
            total = term if total is None else total + term
    return total.to_ratfunc()


def mod_q1_double_sum() -> RationalFunction:
    """sum over (w0, swap2) of [ alpha^2 beta a2 E / (q^5 Delta0 Delta2) ]^(w0,w2)."""
    mono = CTX.alpha**2 * CTX.beta * CTX.a2 / CTX.q**5
    dterms = factor_terms("Delta0") + factor_terms("Delta2")
    total = None
    for w0 in WEYL_GSP4:
        for s2 in (False, True):
            w = (w0, False, s2)
            term = _factored_image(w, factor_terms("E"), dterms)
            term = term.scale_monomial(apply_weyl(w, mono))
            total = term if total is None else total + term
    return total.to_ratfunc()


def mod_q1_rhs() -> RationalFunction:
    return -l_polynomial("P_pi_sigma2", CTX.b1) / (CTX.b1**3 * CTX.a2 * CTX.b2)
