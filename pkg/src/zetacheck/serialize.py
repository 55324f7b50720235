"""Plain-text, JSON and LaTeX forms for polynomials and rational functions.

Text grammar (also accepted by the parser):
    expr     := sum | sum "/" "(" sum ")" | "(" sum ")" "/" "(" sum ")"
    sum      := term (("+" | "-") term)*
    term     := coeff ("*" factor)* | factor ("*" factor)*
    factor   := name ("^" int)?
    coeff    := int ("/" int)?       # in leading position only
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .laurent import LaurentPolynomial
from .ratfunc import RationalFunction


def _coeff_text(c) -> str:
    if isinstance(c, CyclotomicNumber):
        if c.is_rational():
            return str(c.as_fraction())
        inner = ",".join(f"{e}:{v}" for e, v in sorted(c.coeffs.items()))
        return f"zeta{c.order}{{{inner}}}"
    return str(c)


def poly_text(p: LaurentPolynomial) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        factors = [f"{v}^{k}" if k != 1 else v for v, k in zip(p.vars, e) if k]
        cyclo = isinstance(c, CyclotomicNumber)
        neg = (not cyclo) and c < 0
        mag = -c if neg else c
        if not factors:
            body = _coeff_text(mag)
        elif mag == 1 and not cyclo:
            body = "*".join(factors)
        else:
            body = "*".join([_coeff_text(mag)] + factors)
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


def ratfunc_text(f: RationalFunction) -> str:
    if f.den == LaurentPolynomial.one(f.vars):
        return poly_text(f.num)
    return f"({poly_text(f.num)})/({poly_text(f.den)})"


_TOKEN = re.compile(r"\s*(zeta\d+\{[^}]*\}|[A-Za-z_][A-Za-z_0-9]*|\d+|\^|\*|\+|-|/|\(|\))")


def _tokens(s: str):
    pos = 0
    out = []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"bad token at: {s[pos:pos+12]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def _parse_coeff(tok: str):
    if tok.startswith("zeta"):
        m = re.match(r"zeta(\d+)\{([^}]*)\}", tok)
        order = int(m.group(1))
        p = 2
        n = 0
        o = order
        for q in (2, 3, 5, 7, 11, 13):
            if o % q == 0:
                p = q
                while o % q == 0:
                    o //= q
                    n += 1
                break
        coeffs = {}
        if m.group(2):
            for part in m.group(2).split(","):
                e, v = part.split(":")
                coeffs[int(e)] = Fraction(v)
        return CyclotomicNumber(p, n, coeffs)
    return Fraction(tok)


class _Parser:
    def __init__(self, toks, vars):
        self.toks = toks
        self.i = 0
        self.vars = tuple(vars)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse_sum(self) -> LaurentPolynomial:
        total = LaurentPolynomial.zero(self.vars)
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        total = total + self.parse_term(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            total = total + self.parse_term(sign)
        return total

    def parse_term(self, sign) -> LaurentPolynomial:
        coeff = Fraction(sign)
        exps = {}
        first = True
        while True:
            t = self.peek()
            if t is None or t in ("+", "-", ")", "/"):
                break
            if t == "*":
                self.take()
                continue
            self.take()
            if t[0].isdigit() or t.startswith("zeta"):
                c = _parse_coeff(t)
                if self.peek() == "/" and first and not t.startswith("zeta"):
                    # Lookahead: integer/int is a coefficient fraction only if
                    # followed by an integer.
                    save = self.i
                    self.take()
                    nxt = self.peek()
                    if nxt is not None and nxt[0].isdigit():
                        c = Fraction(int(t), int(self.take()))
                    else:
                        self.i = save
                coeff = coeff * c
            else:
                k = 1
                if self.peek() == "^":
                    self.take()
                    neg = False
                    if self.peek() == "-":
                        self.take()
                        neg = True
                    k = int(self.take())
                    if neg:
                        k = -k
                exps[t] = exps.get(t, 0) + k
            first = False
        vec = [0] * len(self.vars)
        for v, k in exps.items():
            if v not in self.vars:
                raise ValueError(f"unknown variable {v}")
            vec[self.vars.index(v)] += k
        return LaurentPolynomial(self.vars, {tuple(vec): coeff})


def poly_from_text(s: str, vars) -> LaurentPolynomial:
    p = _Parser(_tokens(s), vars)
    out = p.parse_sum()
    if p.peek() is not None:
        raise ValueError("trailing input")
    return out


def ratfunc_from_text(s: str, vars) -> RationalFunction:
    s = s.strip()
    toks = _tokens(s)
    # Split at the top-level "/(" if present.
    depth = 0
    for i, t in enumerate(toks):
        if t == "(":
            depth += 1
        elif t == ")":
            depth -= 1
        elif t == "/" and depth == 0 and i + 1 < len(toks) and toks[i + 1] == "(":
            num_toks = toks[:i]
            den_toks = toks[i + 1 :]
            if num_toks and num_toks[0] == "(" and num_toks[-1] == ")":
                num_toks = num_toks[1:-1]
            num = _Parser(num_toks, vars).parse_sum()
            pd = _Parser(den_toks[1:-1], vars)
            den = pd.parse_sum()
            return RationalFunction(num, den)
    return RationalFunction(poly_from_text(s, vars))


# -- JSON -------------------------------------------------------------------


def _coeff_json(c):
    return _coeff_text(c)


def _poly_json(p: LaurentPolynomial) -> list:
    out = []
    for e in sorted(p.terms, reverse=True):
        exps = {v: k for v, k in zip(p.vars, e) if k}
        out.append([_coeff_json(p.terms[e]), exps])
    return out


def ratfunc_to_json(f: RationalFunction) -> dict:
    return {"vars": list(f.vars), "num": _poly_json(f.num), "den": _poly_json(f.den)}


def _poly_from_json(data: list, vars) -> LaurentPolynomial:
    vars = tuple(vars)
    terms = {}
    for coeff, exps in data:
        vec = [0] * len(vars)
        for v, k in exps.items():
            vec[vars.index(v)] = k
        terms[tuple(vec)] = _parse_coeff(coeff) if isinstance(coeff, str) else Fraction(coeff)
    return LaurentPolynomial(vars, terms)


def ratfunc_from_json(data: dict, vars=None) -> RationalFunction:
    vars = tuple(vars) if vars is not None else tuple(data["vars"])
    return RationalFunction(_poly_from_json(data["num"], vars), _poly_from_json(data["den"], vars))


def ratfunc_json_str(f: RationalFunction) -> str:
    return json.dumps(ratfunc_to_json(f), sort_keys=True)


# -- LaTeX ------------------------------------------------------------------

_LATEX_NAMES = {
    "q": "q",
    "p": "p",
    "alpha": r"\alpha",
    "beta": r"\beta",
    "a1": r"\mathfrak{a}_1",
    "b1": r"\mathfrak{b}_1",
    "a2": r"\mathfrak{a}_2",
    "b2": r"\mathfrak{b}_2",
    "a": r"\mathfrak{a}",
    "b": r"\mathfrak{b}",
    "cpi": r"c_\pi",
    "X": "X",
}


def poly_latex(poly: LaurentPolynomial) -> str:
    if poly.is_zero():
        return "0"
    chunks = []
    for e in sorted(poly.terms, reverse=True):
        c = poly.terms[e]
        factors = []
        for v, k in zip(poly.vars, e):
            if k:
                name = _LATEX_NAMES.get(v, v)
                factors.append(name if k == 1 else f"{name}^{{{k}}}")
        neg = (not isinstance(c, CyclotomicNumber)) and c < 0
        mag = -c if neg else c
        if isinstance(mag, Fraction) and mag.denominator != 1:
            cs = rf"\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            cs = _coeff_text(mag)
        body = " ".join(([] if (mag == 1 and factors) else [cs]) + factors)
        chunks.append(("-" if neg else ("+" if chunks else "")) + body)
    return " ".join(chunks)


def ratfunc_latex(f: RationalFunction) -> str:
    if f.den == LaurentPolynomial.one(f.vars):
        return poly_latex(f.num)
    return rf"\frac{{{poly_latex(f.num)}}}{{{poly_latex(f.den)}}}"
