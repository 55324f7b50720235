"""Exact rational functions: quotients of Laurent polynomials in canonical form.

Canonical form: numerator and denominator coprime, the denominator free of
monomial units (min exponent 0 in every variable) and scaled so its
lex-leading coefficient is 1.  Equal values then have identical canonical
forms, so ``==`` is value equality.  (With cyclotomic coefficients the gcd
step is skipped; use ``equals`` for value equality there.)
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .laurent import LaurentPolynomial, poly_gcd


class PoleError(ZeroDivisionError):
    """Evaluation or substitution hit a zero denominator."""


def _inv_coeff(c):
    if isinstance(c, CyclotomicNumber):
        return c.inv()
    return Fraction(1, 1) / c


def _rational_coeffs(*polys) -> bool:
    return all(p.coefficient_field_is_rational() for p in polys)


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None, *, _canonical=False):
        if den is None:
            den = LaurentPolynomial.one(num.vars)
        if num.vars != den.vars:
            raise ValueError("variable mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if _canonical:
            self.num = num
            self.den = den
            return
        num, den = _canonicalize(num, den)
        self.num = num
        self.den = den

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_const(cls, vars, c) -> "RationalFunction":
        return cls(LaurentPolynomial.constant(vars, c))

    @classmethod
    def from_poly(cls, p: LaurentPolynomial) -> "RationalFunction":
        return cls(p)

    @classmethod
    def var(cls, vars, name: str, power: int = 1) -> "RationalFunction":
        return cls(LaurentPolynomial.var(vars, name, power))

    # -- queries -----------------------------------------------------------

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_polynomial(self) -> bool:
        """True when the canonical denominator is a monomial (a Laurent unit)."""
        return self.den.is_monomial()

    def is_monomial(self) -> bool:
        return self.num.is_monomial() and self.den.is_monomial()

    def constant_value(self):
        if self.is_zero():
            return 0
        if not self.den.is_constant() or not self.num.is_constant():
            raise ValueError("not a constant")
        c = self.num.constant_value()
        d = self.den.constant_value()
        if isinstance(c, CyclotomicNumber) or isinstance(d, CyclotomicNumber):
            raise ValueError("not a rational constant")
        return Fraction(c) / d

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.vars != self.vars:
                raise ValueError("variable mismatch")
            return other
        if isinstance(other, LaurentPolynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return RationalFunction.from_const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if _rational_coeffs(self.den, other.den):
            g = poly_gcd(self.den, other.den)
            if not g.is_constant():
                d2 = other.den.divexact(g)
                d1 = self.den.divexact(g)
                return RationalFunction(self.num * d2 + other.num * d1, self.den * d2)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if _rational_coeffs(n1, d1, n2, d2):
            g1 = poly_gcd(n1, d2)
            if not g1.is_constant():
                n1 = n1.divexact(g1)
                d2 = d2.divexact(g1)
            g2 = poly_gcd(n2, d1)
            if not g2.is_constant():
                n2 = n2.divexact(g2)
                d1 = d1.divexact(g2)
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return self * RationalFunction(other.den, other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("division by the zero function")
            return RationalFunction(self.den, self.num) ** (-k)
        return RationalFunction(self.num**k, self.den**k)

    def inv(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.den, self.num)

    # -- substitution / evaluation --------------------------------------------

    def substitute(self, images: dict) -> "RationalFunction":
        """Simultaneous substitution var -> RationalFunction.

        All images must share one variable tuple, which becomes the result's;
        variables without an explicit image must exist in that tuple.
        """
        target = None
        for img in images.values():
            if isinstance(img, RationalFunction):
                target = img.vars
                break
        if target is None:
            target = self.vars
        full = {}
        for v in self.vars:
            img = images.get(v)
            if img is None:
                if v not in target:
                    raise ValueError(f"no image for {v}")
                img = RationalFunction.var(target, v)
            elif not isinstance(img, RationalFunction):
                img = RationalFunction.from_const(target, img)
            full[v] = img
        if all(img.is_monomial() for img in full.values()):
            mono = {}
            for v, img in full.items():
                ((en, cn),) = img.num.terms.items()
                ((ed, cd),) = img.den.terms.items()
                c = cn if cd == 1 else cn * _inv_coeff(cd)
                mono[v] = (c, tuple(a - b for a, b in zip(en, ed)))
            return RationalFunction(
                _mono_image_poly(self.num, mono, target),
                _mono_image_poly(self.den, mono, target),
            )
        num = _poly_substitute(self.num, full, target)
        den = _poly_substitute(self.den, full, target)
        if den.is_zero():
            raise PoleError("substitution produced a zero denominator")
        return num / den

    def evaluate(self, point: dict):
        den = self.den.evaluate(point)
        if not den:
            raise PoleError("pole at evaluation point")
        num = self.num.evaluate(point)
        if isinstance(num, CyclotomicNumber) or isinstance(den, CyclotomicNumber):
            if not isinstance(den, CyclotomicNumber):
                den = CyclotomicNumber.from_rational(den, num.p)
            if not isinstance(num, CyclotomicNumber):
                num = CyclotomicNumber.from_rational(num, den.p)
            return num * den.inv()
        return Fraction(num) / den

    def equals(self, other) -> bool:
        """Value equality via cross multiplication (works for any coefficients)."""
        other = self._coerce(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    # -- structure ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPolynomial, CyclotomicNumber)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        if not _rational_coeffs(self.num, self.den, other.num, other.den):
            return self.equals(other)
        return False

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        from .serialize import ratfunc_text

        return f"<{ratfunc_text(self)}>"


def _canonicalize(num: LaurentPolynomial, den: LaurentPolynomial):
    if num.is_zero():
        return num, LaurentPolynomial.one(num.vars)
    if not den.is_monomial() and _rational_coeffs(num, den):
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = num.divexact(g)
            den = den.divexact(g)
    m = den.min_exponents()
    if any(m):
        shift = {v: -k for v, k in zip(den.vars, m) if k}
        den = den.shift(shift)
        num = num.shift(shift)
    _, lc = den.lex_leading()
    if lc != 1:
        inv = _inv_coeff(lc)
        den = den.scale(inv)
        num = num.scale(inv)
    return num, den


def _mono_image_poly(p: LaurentPolynomial, mono: dict, target: tuple) -> LaurentPolynomial:
    """Image of p under var -> coeff*monomial maps into the target variable tuple."""
    n = len(target)
    out: dict = {}
    vecs = []
    coefs = []
    for i, v in enumerate(p.vars):
        if v in mono:
            c, vec = mono[v]
            vecs.append(vec)
            coefs.append(c)
        else:
            j = target.index(v)
            vecs.append(tuple(1 if t == j else 0 for t in range(n)))
            coefs.append(1)
    for e, c in p.terms.items():
        vec = [0] * n
        coef = c
        for i, k in enumerate(e):
            if k:
                w = vecs[i]
                for j in range(n):
                    if w[j]:
                        vec[j] += k * w[j]
                base = coefs[i]
                if base != 1:
                    if isinstance(base, CyclotomicNumber):
                        coef = coef * base**k
                    elif k >= 0:
                        coef = coef * base**k
                    else:
                        coef = coef * Fraction(base) ** k
        key = tuple(vec)
        s = out.get(key)
        if s is None:
            out[key] = coef
        else:
            s = s + coef
            if s:
                out[key] = s
            else:
                del out[key]
    return LaurentPolynomial(target, out)


def _poly_substitute(p: LaurentPolynomial, images: dict, target: tuple) -> RationalFunction:
    out = RationalFunction.from_const(target, 0)
    cache: dict = {}

    def img_pow(v, k):
        key = (v, k)
        if key not in cache:
            cache[key] = images[v] ** k
        return cache[key]

    for e, c in p.terms.items():
        term = RationalFunction.from_const(target, c)
        for v, k in zip(p.vars, e):
            if k:
                term = term * img_pow(v, k)
        out = out + term
    return out
