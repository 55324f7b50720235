"""Sparse multivariate Laurent polynomials with exact coefficients.

Coefficients are ``int``/``Fraction`` (or ``CyclotomicNumber`` in the p-adic
oracle); exponents are machine integers and may be negative.  Term-dict
arithmetic is delegated to the compiled kernels when available.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .cyclotomic import CyclotomicNumber

if os.environ.get("ZETACHECK_PURE"):
    from . import _kernels_py as _k

    KERNEL = "python"
else:
    try:
        from . import _speedups as _k  # type: ignore

        KERNEL = "compiled"
    except ImportError:
        from . import _kernels_py as _k

        KERNEL = "python"


class ExponentOverflow(ArithmeticError):
    """Exponent outside the supported machine range."""


_EXP_BOUND = 2**40


def _normc(c):
    """Canonical coefficient: ints stay int, integral Fractions collapse."""
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, CyclotomicNumber):
        if c.is_rational():
            return _normc(c.as_fraction())
        return c
    return c


class LaurentPolynomial:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple, terms: dict, *, _clean: bool = False):
        self.vars = tuple(vars)
        if _clean:
            self.terms = terms
            return
        clean = {}
        n = len(self.vars)
        for e, c in terms.items():
            if len(e) != n:
                raise ValueError("exponent arity mismatch")
            if any(abs(x) > _EXP_BOUND for x in e):
                raise ExponentOverflow(str(e))
            c = _normc(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, vars, c) -> "LaurentPolynomial":
        c = _normc(c)
        z = (0,) * len(vars)
        return cls(vars, {z: c} if c else {}, _clean=True)

    @classmethod
    def zero(cls, vars) -> "LaurentPolynomial":
        return cls(vars, {}, _clean=True)

    @classmethod
    def one(cls, vars) -> "LaurentPolynomial":
        return cls.constant(vars, 1)

    @classmethod
    def monomial(cls, vars, exps: dict, c=1) -> "LaurentPolynomial":
        vars = tuple(vars)
        e = [0] * len(vars)
        for name, k in exps.items():
            e[vars.index(name)] = k
        return cls(vars, {tuple(e): c})

    @classmethod
    def var(cls, vars, name: str, power: int = 1) -> "LaurentPolynomial":
        return cls.monomial(vars, {name: power})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if self.is_zero():
            return 0
        ((e, c),) = self.terms.items()
        if any(e):
            raise ValueError("not a constant")
        return c

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def min_exponents(self) -> tuple:
        n = len(self.vars)
        if not self.terms:
            return (0,) * n
        return tuple(min(e[i] for e in self.terms) for i in range(n))

    def lex_leading(self):
        """(exponent, coefficient) of the lex-greatest term."""
        e = max(self.terms)
        return e, self.terms[e]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return LaurentPolynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPolynomial(self.vars, _k.terms_add(self.terms, other.terms), _clean=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPolynomial(self.vars, _k.terms_sub(self.terms, other.terms), _clean=True)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPolynomial(self.vars, _k.terms_neg(self.terms), _clean=True)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPolynomial(self.vars, _k.terms_mul(self.terms, other.terms), _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial; use RationalFunction")
        out = LaurentPolynomial.one(self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        c = _normc(c)
        if not c:
            return LaurentPolynomial.zero(self.vars)
        return LaurentPolynomial(self.vars, _k.terms_scale(self.terms, c), _clean=True)

    def shift(self, exps: dict, c=1):
        """Multiply by the monomial c * prod(var^e)."""
        vec = [0] * len(self.vars)
        for name, k in exps.items():
            vec[self.vars.index(name)] = k
        return LaurentPolynomial(self.vars, _k.terms_shift(self.terms, tuple(vec), c), _clean=True)

    def divexact(self, other: "LaurentPolynomial"):
        """Exact quotient self/other, or None if not divisible."""
        other = self._coerce(other)
        q = _k.terms_divexact(self.terms, other.terms)
        if q is None:
            return None
        return LaurentPolynomial(self.vars, q)

    # -- substitution and evaluation ----------------------------------------

    def substitute_monomials(self, images: dict) -> "LaurentPolynomial":
        """Map each variable to c*monomial over the same variable tuple.

        images: var -> (coeff, exponent tuple).  Substitution is exponent-linear.
        """
        n = len(self.vars)
        vecs = []
        coefs = []
        for i, v in enumerate(self.vars):
            if v in images:
                c, vec = images[v]
                vecs.append(tuple(vec))
                coefs.append(c)
            else:
                vecs.append(tuple(1 if j == i else 0 for j in range(n)))
                coefs.append(1)
        out: dict = {}
        for e, c in self.terms.items():
            vec = [0] * n
            coef = c
            for i, k in enumerate(e):
                if k:
                    w = vecs[i]
                    for j in range(n):
                        vec[j] += k * w[j]
                    base = coefs[i]
                    if base != 1:
                        if k >= 0:
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
        return LaurentPolynomial(self.vars, out)

    def evaluate(self, point: dict):
        """Exact value at a point assigning a number to every variable."""
        vals = []
        for v in self.vars:
            if v not in point:
                raise ValueError(f"no value for {v}")
            vals.append(Fraction(point[v]) if isinstance(point[v], int) else point[v])
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c if not isinstance(c, int) else Fraction(c)
            for x, k in zip(vals, e):
                if k:
                    if isinstance(x, CyclotomicNumber):
                        term = term * (x.inv() ** (-k) if k < 0 else x**k)
                    else:
                        if k < 0 and x == 0:
                            raise ZeroDivisionError("zero raised to negative power")
                        term = term * x**k
            total = total + term
        return _normc(total)

    def embed(self, new_vars: tuple) -> "LaurentPolynomial":
        """Reinterpret over a variable tuple containing self.vars."""
        new_vars = tuple(new_vars)
        idx = [new_vars.index(v) for v in self.vars]
        n = len(new_vars)
        out = {}
        for e, c in self.terms.items():
            vec = [0] * n
            for i, k in zip(idx, e):
                vec[i] = k
            out[tuple(vec)] = c
        return LaurentPolynomial(new_vars, out, _clean=True)

    # -- structure ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = LaurentPolynomial.constant(self.vars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        from .serialize import poly_text

        return f"<{poly_text(self)}>"

    def coefficient_field_is_rational(self) -> bool:
        return all(not isinstance(c, CyclotomicNumber) for c in self.terms.values())


# ---------------------------------------------------------------------------
# gcd


def _split_by_var(A: LaurentPolynomial, i: int) -> dict:
    """Decompose by the power of variable i: deg -> LaurentPolynomial (with var i flattened)."""
    buckets: dict = {}
    for e, c in A.terms.items():
        d = e[i]
        key = e[:i] + (0,) + e[i + 1 :]
        buckets.setdefault(d, {})[key] = c
    return {d: LaurentPolynomial(A.vars, t, _clean=True) for d, t in buckets.items()}


def _from_split(vars: tuple, i: int, parts: dict) -> LaurentPolynomial:
    out: dict = {}
    for d, poly in parts.items():
        for e, c in poly.terms.items():
            key = e[:i] + (d,) + e[i + 1 :]
            out[key] = c
    return LaurentPolynomial(vars, out, _clean=True)


def _strip_units(A: LaurentPolynomial) -> LaurentPolynomial:
    """Divide by the monomial content so min exponent is 0 in every variable."""
    if A.is_zero():
        return A
    m = A.min_exponents()
    if not any(m):
        return A
    return LaurentPolynomial(
        A.vars, {tuple(x - y for x, y in zip(e, m)): c for e, c in A.terms.items()}, _clean=True
    )


def _leading_norm(A: LaurentPolynomial) -> LaurentPolynomial:
    """Scale so the lex-leading coefficient is 1."""
    if A.is_zero():
        return A
    _, c = A.lex_leading()
    if c == 1:
        return A
    if isinstance(c, CyclotomicNumber):
        return A.scale(c.inv())
    return A.scale(Fraction(1, 1) / c)


def poly_gcd(A: LaurentPolynomial, B: LaurentPolynomial) -> LaurentPolynomial:
    """A gcd in the Laurent ring, normalized (unit-free, monic leading term).

    Units (monomials) are stripped, so gcd(f, monomial) == 1.
    """
    if A.vars != B.vars:
        raise ValueError("variable mismatch")
    if A.is_zero():
        return _leading_norm(_strip_units(B))
    if B.is_zero():
        return _leading_norm(_strip_units(A))
    A = _strip_units(A)
    B = _strip_units(B)
    if A.is_monomial() or B.is_monomial():
        return LaurentPolynomial.one(A.vars)
    active = [
        i
        for i in range(len(A.vars))
        if any(e[i] for e in A.terms) and any(e[i] for e in B.terms)
    ]
    if not active:
        return LaurentPolynomial.one(A.vars)
    # Pick the active variable with the smallest max-degree.
    i = min(active, key=lambda j: max(max(e[j] for e in A.terms), max(e[j] for e in B.terms)))
    g = _gcd_in_var(A, B, i)
    return _leading_norm(_strip_units(g))


def _content_and_prim(A: LaurentPolynomial, i: int):
    parts = _split_by_var(A, i)
    cont = None
    for poly in parts.values():
        cont = poly if cont is None else poly_gcd(cont, poly)
        if cont.is_constant():
            break
    if cont.is_constant():
        return LaurentPolynomial.one(A.vars), A
    prim = _from_split(A.vars, i, {d: p.divexact(cont) for d, p in parts.items()})
    return cont, prim


def _gcd_in_var(A: LaurentPolynomial, B: LaurentPolynomial, i: int) -> LaurentPolynomial:
    ca, pa = _content_and_prim(A, i)
    cb, pb = _content_and_prim(B, i)
    cont = poly_gcd(ca, cb)
    f, g = pa, pb
    while True:
        dg = max(e[i] for e in g.terms) if any(e[i] for e in g.terms) else 0
        df = max(e[i] for e in f.terms) if any(e[i] for e in f.terms) else 0
        if df < dg:
            f, g = g, f
            df, dg = dg, df
        if dg == 0:
            # g is free of the variable; gcd of primitives divides it.
            if g.is_zero():
                result = f
            else:
                result = LaurentPolynomial.one(A.vars)
            break
        r = _pseudo_rem(f, g, i)
        if r.is_zero():
            result = g
            break
        _, r = _content_and_prim(r, i)
        f, g = g, r
    _, result = _content_and_prim(result, i) if not result.is_constant() else (None, result)
    return cont * result


def _pseudo_rem(F: LaurentPolynomial, G: LaurentPolynomial, i: int) -> LaurentPolynomial:
    """Pseudo-remainder of F by G with respect to variable i."""
    fparts = _split_by_var(F, i)
    gparts = _split_by_var(G, i)
    dg = max(gparts)
    lcg = gparts[dg]
    R = fparts
    df = max(R) if R else -1
    while R and max(R) >= dg:
        d = max(R)
        lead = R.pop(d)
        # R = lcg*R - lead * x^(d-dg) * G
        newR: dict = {}
        for k, poly in R.items():
            newR[k] = poly * lcg
        for k, poly in gparts.items():
            if k == dg:
                continue
            key = k + d - dg
            sub = lead * poly
            newR[key] = newR[key] - sub if key in newR else -sub
        R = {k: p for k, p in newR.items() if not p.is_zero()}
    return _from_split(F.vars, i, R) if R else LaurentPolynomial.zero(F.vars)
