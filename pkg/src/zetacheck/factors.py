"""Named Euler factors, L-polynomials, and the relabeling tables used by the
application sections (GSp4 Euler systems, GSp4 x GL2, and the triple product).
"""

from __future__ import annotations

from fractions import Fraction

from .params import CTX, apply_weyl, weyl_triples
from .ratfunc import RationalFunction

# ---------------------------------------------------------------------------
# Factor library: each named factor is a product of terms (1 - monomial).


def _one_minus(x: RationalFunction) -> RationalFunction:
    return CTX.one - x


def delta0_terms() -> list:
    a, b, g, d = CTX.alpha, CTX.beta, CTX.gamma, CTX.delta
    return [_one_minus(b / a), _one_minus(g / a), _one_minus(g / b), _one_minus(d / a)]


def delta_i_terms(i: int) -> list:
    if i == 1:
        return [_one_minus(CTX.b1 / CTX.a1)]
    if i == 2:
        return [_one_minus(CTX.b2 / CTX.a2)]
    raise ValueError("index must be 1 or 2")


def euler_e_terms() -> list:
    """The eight-factor Euler product attached to the open-orbit test vector."""
    a, b, g = CTX.alpha, CTX.beta, CTX.gamma
    q2 = CTX.q**2
    a1, b1, a2, b2 = CTX.a1, CTX.b1, CTX.a2, CTX.b2
    return [
        _one_minus(q2 / (a * a1 * a2)),
        _one_minus(q2 / (a * b1 * a2)),
        _one_minus(q2 / (a * a1 * b2)),
        _one_minus(q2 / (a * b1 * b2)),
        _one_minus(q2 / (b * a1 * a2)),
        _one_minus(q2 / (b * a1 * b2)),
        _one_minus(q2 / (b * b1 * a2)),
        _one_minus(q2 / (g * a1 * a2)),
    ]


def euler_b_kl_terms() -> list:
    """All eight combinations over {alpha,beta} x {a1,b1} x {a2,b2}."""
    q2 = CTX.q**2
    out = []
    for lam in (CTX.alpha, CTX.beta):
        for mu in (CTX.a1, CTX.b1):
            for nu in (CTX.a2, CTX.b2):
                out.append(_one_minus(q2 / (lam * mu * nu)))
    return out


def euler_e_kl_terms() -> list:
    q2 = CTX.q**2
    a, b = CTX.alpha, CTX.beta
    a1, b1, a2, b2 = CTX.a1, CTX.b1, CTX.a2, CTX.b2
    return [
        _one_minus(q2 / (a * a1 * a2)),
        _one_minus(q2 / (a * b1 * a2)),
        _one_minus(q2 / (a * a1 * b2)),
        _one_minus(q2 / (b * a1 * a2)),
        _one_minus(q2 / (b * a1 * b2)),
        _one_minus(q2 / (b * b1 * a2)),
    ]


def _product(terms) -> RationalFunction:
    out = CTX.one
    for t in terms:
        out = out * t
    return out


_FACTOR_TERMS = {
    "Delta0": delta0_terms,
    "Delta1": lambda: delta_i_terms(1),
    "Delta2": lambda: delta_i_terms(2),
    "E": euler_e_terms,
    "B_Kl": euler_b_kl_terms,
    "E_Kl": euler_e_kl_terms,
}

FACTOR_NAMES = tuple(_FACTOR_TERMS) + ("P_pi", "P_pi_sigma2")

_cache: dict = {}


def factor_terms(name: str) -> list:
    if name not in _FACTOR_TERMS:
        raise KeyError(f"unknown factor {name!r}")
    return _FACTOR_TERMS[name]()


def factor(name: str) -> RationalFunction:
    """The named Euler factor as a canonical rational function."""
    if name in ("P_pi", "P_pi_sigma2"):
        return l_polynomial(name, RationalFunction.var(LPOLY_VARS, "X"))
    if name not in _cache:
        _cache[name] = _product(factor_terms(name))
    return _cache[name]


# ---------------------------------------------------------------------------
# L-polynomials (over the generic variables extended by X).

LPOLY_VARS = CTX.vars + ("X",)
_LCTX_IMAGES = {v: RationalFunction.var(LPOLY_VARS, v) for v in CTX.vars}


def _to_lpoly_vars(f: RationalFunction) -> RationalFunction:
    return f.substitute(_LCTX_IMAGES)


def l_polynomial(name: str, arg: RationalFunction) -> RationalFunction:
    """P_pi(arg) = prod (1 - lambda*arg); P_pi_sigma2(arg) has the eight factors
    (1 - lambda*mu*arg/q^3) over mu in {a2, b2}."""
    if arg.vars == CTX.vars:
        lift = lambda f: f  # noqa: E731
        one = CTX.one
    elif arg.vars == LPOLY_VARS:
        lift = _to_lpoly_vars
        one = RationalFunction.from_const(LPOLY_VARS, 1)
    else:
        raise ValueError("argument must live over the generic variables (with or without X)")
    four = [CTX.alpha, CTX.beta, CTX.gamma, CTX.delta]
    out = one
    if name == "P_pi":
        for lam in four:
            out = out * (one - lift(lam) * arg)
        return out
    if name == "P_pi_sigma2":
        q3 = lift(CTX.q**3)
        for lam in four:
            for mu in (CTX.a2, CTX.b2):
                out = out * (one - lift(lam * mu) * arg / q3)
        return out
    raise KeyError(f"unknown L-polynomial {name!r}")


# ---------------------------------------------------------------------------
# Relabeling tables.
#
# Unit symbols: uq = p^q, ur = p^r, ur1 = p^r1, ur2 = p^r2, c1 = chi1(p),
# c2 = chi2(p), s12 = p^((r1+r2)/2), h1 = p^(t1/2), h2 = p^(t2/2),
# chat = (chi_pi * chi_sigma2)(p).  The exponents t_i are eliminated through
# t1 = r1 - q - r and t2 = r2 - q + r.

GSP4_RELABEL_VARS = ("p", "uq", "ur", "ur1", "ur2", "c1", "c2", "alpha", "beta")
GSP4XGL2_RELABEL_VARS = ("p", "s12", "h1", "h2", "chat", "alpha", "beta", "a2", "b2")
TRIPLE_RELABEL_VARS = ("p", "s12", "h1", "h2", "alpha", "beta", "a1", "b1", "a2", "b2")

TABLE_IDS = ("gsp4", "gsp4xgl2", "triple")


def _rv(vars, name):
    return RationalFunction.var(vars, name)


def relabel_table(table_id: str) -> dict:
    """The substitution map generic-symbol -> extended-variable expression."""
    if table_id == "gsp4":
        V = GSP4_RELABEL_VARS
        p, uq, ur, ur1, ur2, c1, c2 = (_rv(V, x) for x in V[:7])
        return {
            "q": p,
            "alpha": _rv(V, "alpha") / uq,
            "beta": _rv(V, "beta") / uq,
            "a1": p,
            "b1": uq * ur / (ur1 * c1),
            "a2": p,
            "b2": uq / (ur2 * ur * c2),
        }
    if table_id == "gsp4xgl2":
        V = GSP4XGL2_RELABEL_VARS
        p, s12, h1, h2, chat = (_rv(V, x) for x in V[:5])
        return {
            "q": p,
            "alpha": _rv(V, "alpha") / s12,
            "beta": _rv(V, "beta") / s12,
            "a1": 1 / (h1 * chat),
            "b1": p * h1,
            "a2": _rv(V, "a2") / h2,
            "b2": _rv(V, "b2") / h2,
        }
    if table_id == "triple":
        V = TRIPLE_RELABEL_VARS
        p, s12, h1, h2 = (_rv(V, x) for x in V[:4])
        return {
            "q": p,
            "alpha": _rv(V, "alpha") / s12,
            "beta": _rv(V, "beta") / s12,
            "a1": _rv(V, "a1") / h1,
            "b1": _rv(V, "b1") / h1,
            "a2": _rv(V, "a2") / h2,
            "b2": _rv(V, "b2") / h2,
        }
    raise KeyError(f"unknown relabel table {table_id!r}")


def relabel(table_id: str, f: RationalFunction) -> RationalFunction:
    return f.substitute(relabel_table(table_id))


def relabeled_gamma(table_id: str) -> RationalFunction:
    """The symbol gamma of the relabeled parameter set, expressed through the
    relabeled free variables (old gamma times the table's scaling unit)."""
    scale = {"gsp4": "uq", "gsp4xgl2": "s12", "triple": "s12"}[table_id]
    tab = relabel_table(table_id)
    return _rv(tab["q"].vars, scale) * relabel(table_id, CTX.gamma)


def relabeled_delta(table_id: str) -> RationalFunction:
    scale = {"gsp4": "uq", "gsp4xgl2": "s12", "triple": "s12"}[table_id]
    tab = relabel_table(table_id)
    return _rv(tab["q"].vars, scale) * relabel(table_id, CTX.delta)


# ---------------------------------------------------------------------------
# Valuation bookkeeping (ordinarity splits of Frobenius eigenvalues).

_VAL_PRODUCTS = tuple(
    (lam, mu) for lam in ("alpha", "beta", "gamma", "delta") for mu in ("a2", "b2")
)


def _monomial_valuation(f: RationalFunction, vals: dict) -> Fraction:
    """Valuation of a monomial rational function under additive assignments."""
    if not f.is_monomial():
        raise ValueError("not a monomial")
    ((en, _),) = f.num.terms.items()
    ((ed, _),) = f.den.terms.items()
    total = Fraction(0)
    for v, k in zip(f.vars, tuple(a - b for a, b in zip(en, ed))):
        if k:
            total += k * Fraction(vals[v])
    return total


def valuation_split(vals: dict, threshold) -> tuple:
    """Split the eight products lambda*mu (mu in {a2,b2}) by valuation.

    vals assigns valuations to the seven free symbols; gamma and delta are
    derived.  Returns (small, large, borderline): small has valuation <=
    threshold, large >= threshold + 1, borderline strictly between (reported,
    not fatal).
    """
    threshold = Fraction(threshold)
    named = dict(CTX.four_params(), a2=CTX.a2, b2=CTX.b2)
    letters = {"alpha": "a", "beta": "b", "gamma": "g", "delta": "d"}
    small, large, borderline = [], [], []
    for lam, mu in _VAL_PRODUCTS:
        expr = named[letters[lam]] * named[mu]
        v = _monomial_valuation(expr, vals)
        label = (lam, mu, v)
        if v <= threshold:
            small.append(label)
        elif v >= threshold + 1:
            large.append(label)
        else:
            borderline.append(label)
    return small, large, borderline


def brute_force_valuation_sort(vals: dict) -> list:
    """Independent oracle: the eight products sorted by direct valuation."""
    named = dict(CTX.four_params(), a2=CTX.a2, b2=CTX.b2)
    letters = {"alpha": "a", "beta": "b", "gamma": "g", "delta": "d"}
    out = []
    for lam, mu in _VAL_PRODUCTS:
        v = _monomial_valuation(named[letters[lam]] * named[mu], vals)
        out.append((v, lam, mu))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Weyl-sum helper shared with the identity registry.


def weyl_sum_invdelta0() -> RationalFunction:
    """Sum over the 8 Weyl elements of 1/Delta0 (expected: 1)."""
    total = CTX.const(0)
    d0 = factor("Delta0")
    from .params import WEYL_GSP4

    for w in WEYL_GSP4:
        total = total + w.apply(d0).inv()
    return total
