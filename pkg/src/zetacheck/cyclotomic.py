"""Exact arithmetic in cyclotomic fields Q(zeta) of prime-power order.

Elements are stored in the power basis zeta^0 .. zeta^(phi-1) of a primitive
p^n-th root of unity, reduced modulo the p^n-th cyclotomic polynomial, and
always at the *minimal* order that contains them (so rationals have n = 0 and
compare equal to Fraction/int).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _phi(p: int, n: int) -> int:
    return 1 if n == 0 else (p - 1) * p ** (n - 1)


@lru_cache(maxsize=None)
def _reduction_table(p: int, n: int) -> tuple:
    """zeta^e as a coefficient tuple over the power basis, for 0 <= e < p^n."""
    order = p**n
    phi = _phi(p, n)
    step = p ** (n - 1)
    table: list = [None] * order
    for e in range(phi):
        row = [0] * phi
        row[e] = 1
        table[e] = tuple(row)
    # zeta^phi = -(zeta^0 + zeta^step + ... + zeta^((p-2)*step)), shifted.
    for e in range(phi, order):
        row = [0] * phi
        base = e - phi
        for j in range(p - 1):
            sub = table[base + j * step]
            for k in range(phi):
                row[k] -= sub[k]
        table[e] = tuple(row)
    return tuple(table)


class CyclotomicNumber:
    """An element of Q(zeta_{p^n}), n minimal."""

    __slots__ = ("p", "n", "coeffs")

    def __init__(self, p: int, n: int, coeffs: dict, *, _reduced: bool = False):
        if _reduced:
            self.p = p
            self.n = n
            self.coeffs = coeffs
            return
        phi = _phi(p, n)
        clean = {}
        for e, c in coeffs.items():
            if not 0 <= e < phi:
                raise ValueError("coefficient exponent outside power basis")
            c = Fraction(c)
            if c:
                clean[e] = c
        p_, n_, coeffs_ = _lower(p, n, clean)
        self.p = p_
        self.n = n_
        self.coeffs = coeffs_

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(x, p: int = 2) -> "CyclotomicNumber":
        x = Fraction(x)
        return CyclotomicNumber(p, 0, {0: x} if x else {})

    @staticmethod
    def root_power(p: int, n: int, e: int) -> "CyclotomicNumber":
        """zeta_{p^n}^e."""
        order = p**n
        e %= order
        if n == 0:
            return CyclotomicNumber(p, 0, {0: Fraction(1)})
        row = _reduction_table(p, n)[e]
        return CyclotomicNumber(p, n, {k: Fraction(c) for k, c in enumerate(row) if c})

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.n == 0

    def as_fraction(self) -> Fraction:
        if self.n != 0:
            raise ValueError("not a rational number")
        return self.coeffs.get(0, Fraction(0))

    @property
    def order(self) -> int:
        return self.p**self.n

    # -- arithmetic ----------------------------------------------------

    def _lift_pair(self, other: "CyclotomicNumber"):
        if self.p != other.p and self.n and other.n:
            raise ValueError("mixed root-of-unity characteristics")
        p = self.p if self.n else (other.p if other.n else self.p)
        n = max(self.n, other.n)
        return _lift(self, p, n), _lift(other, p, n), p, n

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, p, n = self._lift_pair(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return CyclotomicNumber(p, n, out)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.p, self.n, {e: -c for e, c in self.coeffs.items()}, _reduced=True)

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
        a, b, p, n = self._lift_pair(other)
        if not a or not b:
            return CyclotomicNumber(p, 0, {})
        table = _reduction_table(p, n) if n else None
        phi = _phi(p, n)
        acc = [Fraction(0)] * phi
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                c = c1 * c2
                e = e1 + e2
                if e < phi:
                    acc[e] += c
                else:
                    row = table[e % (p**n)] if e >= p**n else table[e]
                    for k, r in enumerate(row):
                        if r:
                            acc[k] += c * r
        return CyclotomicNumber(p, n, {e: c for e, c in enumerate(acc) if c})

    __rmul__ = __mul__

    def inv(self) -> "CyclotomicNumber":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        if self.n == 0:
            return CyclotomicNumber(self.p, 0, {0: 1 / self.coeffs[0]})
        p, n = self.p, self.n
        phi = _phi(p, n)
        # Columns of the multiplication-by-self matrix.
        cols = []
        for e in range(phi):
            prod = self * CyclotomicNumber.root_power(p, n, e)
            prod = _lift(prod, p, n)
            cols.append([prod.get(k, Fraction(0)) for k in range(phi)])
        # Solve M x = e0 by Gaussian elimination (M[k][e] = cols[e][k]).
        M = [[cols[e][k] for e in range(phi)] + [Fraction(1 if k == 0 else 0)] for k in range(phi)]
        for i in range(phi):
            piv = next(r for r in range(i, phi) if M[r][i])
            M[i], M[piv] = M[piv], M[i]
            inv = 1 / M[i][i]
            M[i] = [x * inv for x in M[i]]
            for r in range(phi):
                if r != i and M[r][i]:
                    f = M[r][i]
                    M[r] = [x - f * y for x, y in zip(M[r], M[i])]
        return CyclotomicNumber(p, n, {e: M[e][phi] for e in range(phi) if M[e][phi]})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = CyclotomicNumber.from_rational(1, self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __rtruediv__(self, other):
        return self.inv() * other

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.n == 0 and self.coeffs.get(0, Fraction(0)) == other
        if isinstance(other, CyclotomicNumber):
            if self.n == 0 and other.n == 0:
                return self.coeffs == other.coeffs
            return self.p == other.p and self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.n == 0:
            return hash(self.coeffs.get(0, Fraction(0)))
        return hash((self.p, self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if self.n == 0:
            return f"Cyclo({self.coeffs.get(0, Fraction(0))})"
        parts = "+".join(f"{c}*z^{e}" if e else str(c) for e, c in sorted(self.coeffs.items()))
        return f"Cyclo[{self.p}^{self.n}]({parts})"


def _lift(x: CyclotomicNumber, p: int, n: int) -> dict:
    """Coefficients of x viewed inside Q(zeta_{p^n})."""
    if x.n == n:
        return dict(x.coeffs)
    if x.n == 0:
        return dict(x.coeffs)
    scale = p ** (n - x.n)
    table = _reduction_table(p, n)
    phi = _phi(p, n)
    acc = [Fraction(0)] * phi
    for e, c in x.coeffs.items():
        row = table[e * scale]
        for k, r in enumerate(row):
            if r:
                acc[k] += c * r
    return {e: c for e, c in enumerate(acc) if c}


def _lower(p: int, n: int, coeffs: dict):
    """Reduce to the minimal subfield Q(zeta_{p^m}) containing the element."""
    while n > 0:
        if n == 1:
            # Rational iff it equals c*(sum of all conjugate basis images)... the
            # only rationals in the basis span with n=1 are multiples of 1 when
            # p > 2 forces all higher coefficients equal; handle via trace trick:
            # an element of Q(zeta_p) is rational iff coeffs at 1..p-2 vanish.
            if all(e == 0 for e in coeffs):
                n = 0
                continue
            break
        step = p  # zeta_{p^n}^p = zeta_{p^(n-1)}
        if coeffs and any(e % step for e in coeffs):
            break
        coeffs = {e // step: c for e, c in coeffs.items()}
        n -= 1
        phi = _phi(p, n)
        if coeffs and max(coeffs) >= phi:
            # Re-reduce in the smaller field.
            table = _reduction_table(p, n)
            acc = [Fraction(0)] * phi
            for e, c in coeffs.items():
                row = table[e]
                for k, r in enumerate(row):
                    if r:
                        acc[k] += c * r
            coeffs = {e: c for e, c in enumerate(acc) if c}
    if not coeffs:
        return p, 0, {}
    return p, n, coeffs
