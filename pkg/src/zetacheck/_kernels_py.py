"""Pure-Python kernels for sparse Laurent-term dictionaries.

A term dictionary maps exponent tuples (one slot per variable, entries may be
negative) to nonzero coefficients.  Coefficients are ``int``, ``Fraction`` or
any object with exact ring arithmetic.  These functions are the hot inner
loops of the whole package; ``_speedups`` provides a compiled drop-in.
"""

from __future__ import annotations


def terms_add(A: dict, B: dict) -> dict:
    if len(A) < len(B):
        A, B = B, A
    out = dict(A)
    for e, c in B.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_sub(A: dict, B: dict) -> dict:
    out = dict(A)
    for e, c in B.items():
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_neg(A: dict) -> dict:
    return {e: -c for e, c in A.items()}


def terms_scale(A: dict, c) -> dict:
    if not c:
        return {}
    return {e: c * v for e, v in A.items()}


def terms_shift(A: dict, shift: tuple, c) -> dict:
    """Multiply by the monomial c * x^shift."""
    if not c:
        return {}
    out = {}
    for e, v in A.items():
        out[tuple(a + b for a, b in zip(e, shift))] = c * v
    return out


def terms_mul(A: dict, B: dict) -> dict:
    if not A or not B:
        return {}
    if len(A) > len(B):
        A, B = B, A
    if len(A) == 1:
        ((e, c),) = A.items()
        return terms_shift(B, e, c)
    out = {}
    for e1, c1 in A.items():
        for e2, c2 in B.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = c1 * c2
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def terms_divexact(A: dict, B: dict):
    """Exact division A / B, or None if B does not divide A.

    Works for Laurent supports: both operands are shifted so every exponent is
    nonnegative; divisibility in the Laurent ring is unchanged by monomial
    units.  Division runs against the lex-leading term of B.
    """
    if not B:
        raise ZeroDivisionError("division by zero polynomial")
    if not A:
        return {}
    n = len(next(iter(A)))
    mina = [min(e[i] for e in A) for i in range(n)]
    minb = [min(e[i] for e in B) for i in range(n)]
    A = {tuple(x - m for x, m in zip(e, mina)): c for e, c in A.items()}
    B = {tuple(x - m for x, m in zip(e, minb)): c for e, c in B.items()}
    off = tuple(a - b for a, b in zip(mina, minb))

    from fractions import Fraction

    eb = max(B)
    cb = B[eb]
    rest = [(e, c) for e, c in B.items() if e != eb]
    R = dict(A)
    Q = {}
    while R:
        er = max(R)
        eq = tuple(a - b for a, b in zip(er, eb))
        if any(x < 0 for x in eq):
            return None
        cr = R[er]
        if isinstance(cr, int) and isinstance(cb, int):
            cq = cr // cb if cr % cb == 0 else Fraction(cr, cb)
        else:
            cq = cr / cb
        Q[eq] = cq
        del R[er]
        for e, c in rest:
            key = tuple(a + b for a, b in zip(eq, e))
            s = R.get(key)
            d = cq * c
            if s is None:
                R[key] = -d
            else:
                s = s - d
                if s:
                    R[key] = s
                else:
                    del R[key]
    return {tuple(a + b for a, b in zip(e, off)): c for e, c in Q.items()}
