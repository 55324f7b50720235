"""Hecke-parameter field: free variables, the central-character constraint,
and the order-8 Weyl group acting by formal permutation of the parameters.

The four GSp(4) parameters are (alpha, beta, gamma, delta) with the products
alpha*delta = beta*gamma forced by the central character; gamma and delta are
eliminated, so every symbolic value lives in the rational-function field over

    (q, alpha, beta, a1, b1, a2, b2).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .laurent import LaurentPolynomial
from .ratfunc import PoleError, RationalFunction

GENERIC_VARS = ("q", "alpha", "beta", "a1", "b1", "a2", "b2")

PARTNER = {"a": "d", "b": "g", "g": "b", "d": "a"}
_LETTERS = ("a", "b", "g", "d")


class ParameterContext:
    """The generic parameter field and its distinguished elements."""

    def __init__(self, vars: tuple = GENERIC_VARS):
        self.vars = tuple(vars)
        self.one = RationalFunction.from_const(self.vars, 1)
        self.q = RationalFunction.var(self.vars, "q")
        self.alpha = RationalFunction.var(self.vars, "alpha")
        self.beta = RationalFunction.var(self.vars, "beta")
        self.a1 = RationalFunction.var(self.vars, "a1")
        self.b1 = RationalFunction.var(self.vars, "b1")
        self.a2 = RationalFunction.var(self.vars, "a2")
        self.b2 = RationalFunction.var(self.vars, "b2")
        prod = self.a1 * self.b1 * self.a2 * self.b2
        self.gamma = self.q**5 / (self.beta * prod)
        self.delta = self.q**5 / (self.alpha * prod)

    def const(self, c) -> RationalFunction:
        return RationalFunction.from_const(self.vars, c)

    def letter(self, x: str) -> RationalFunction:
        return {"a": self.alpha, "b": self.beta, "g": self.gamma, "d": self.delta}[x]

    def four_params(self) -> dict:
        return {"a": self.alpha, "b": self.beta, "g": self.gamma, "d": self.delta}


CTX = ParameterContext()


class WeylElement:
    """A GSp(4) Weyl-group element as a permutation of the four parameters.

    The permutation commutes with the partner involution a<->d, b<->g; it acts
    on the free variables by substituting the images of alpha and beta.
    """

    __slots__ = ("perm", "label", "subs_map")

    def __init__(self, perm: dict):
        self.perm = dict(perm)
        self.label = perm["a"] + perm["b"]
        self.subs_map = {
            "alpha": CTX.letter(perm["a"]),
            "beta": CTX.letter(perm["b"]),
        }

    def apply(self, f: RationalFunction) -> RationalFunction:
        return f.substitute(self.subs_map)

    def compose(self, other: "WeylElement") -> "WeylElement":
        # (self.compose(other)).apply == lambda f: self.apply(other.apply(f))
        # as automorphisms; on permutations that is other after self... the
        # substitution realizing sigma sends a variable x to expr(sigma(x)),
        # and apply(sigma) o apply(tau) realizes the permutation tau o sigma.
        return WeylElement({x: other.perm[self.perm[x]] for x in _LETTERS})

    def inverse(self) -> "WeylElement":
        return WeylElement({v: k for k, v in self.perm.items()})

    def is_identity(self) -> bool:
        return all(self.perm[x] == x for x in _LETTERS)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self):
        return hash(tuple(sorted(self.perm.items())))

    def __repr__(self):
        return f"WeylElement({self.label})"


def _commutes_with_partner(perm: dict) -> bool:
    return all(perm[PARTNER[x]] == PARTNER[perm[x]] for x in _LETTERS)


def weyl_group_gsp4() -> list:
    """The 8 elements of the GSp(4) Weyl group, sorted by ordering label."""
    out = []
    for images in itertools.permutations(_LETTERS):
        perm = dict(zip(_LETTERS, images))
        if _commutes_with_partner(perm):
            out.append(WeylElement(perm))
    out.sort(key=lambda w: w.label)
    assert len(out) == 8
    return out


WEYL_GSP4 = weyl_group_gsp4()
WEYL_BY_LABEL = {w.label: w for w in WEYL_GSP4}

ORDERING_LABELS = tuple(w.label for w in WEYL_GSP4)

GL2_SWAP_1 = {"a1": CTX.b1, "b1": CTX.a1}
GL2_SWAP_2 = {"a2": CTX.b2, "b2": CTX.a2}


def apply_weyl(w, f: RationalFunction) -> RationalFunction:
    """Apply a WeylElement or a triple (w0, swap1, swap2) with swaps boolean."""
    if isinstance(w, WeylElement):
        return w.apply(f)
    w0, s1, s2 = w
    g = w0.apply(f) if isinstance(w0, WeylElement) else WEYL_BY_LABEL[w0].apply(f)
    if s1:
        g = g.substitute(GL2_SWAP_1)
    if s2:
        g = g.substitute(GL2_SWAP_2)
    return g


def weyl_triples():
    """All 32 (w0, swap1, swap2) triples."""
    for w0 in WEYL_GSP4:
        for s1 in (False, True):
            for s2 in (False, True):
                yield (w0, s1, s2)


def reduce_at_q1(f: RationalFunction) -> RationalFunction:
    """Substitute q -> 1; raises PoleError when the denominator vanishes there."""
    try:
        return f.substitute({"q": CTX.one})
    except ZeroDivisionError as exc:
        raise PoleError("pole at q = 1") from exc


# ---------------------------------------------------------------------------
# Random admissible specializations


def _standard_avoid_factors() -> list:
    """Every binomial whose vanishing would put a library value at a pole."""
    ctx = CTX
    avoid = [ctx.q, ctx.q**2 - 1]
    four = [ctx.alpha, ctx.beta, ctx.gamma, ctx.delta]
    for i, x in enumerate(four):
        for j, y in enumerate(four):
            if i != j:
                avoid.append(ctx.one - y / x)
    avoid.append(ctx.one - ctx.b1 / ctx.a1)
    avoid.append(ctx.one - ctx.a1 / ctx.b1)
    avoid.append(ctx.one - ctx.b2 / ctx.a2)
    avoid.append(ctx.one - ctx.a2 / ctx.b2)
    for lam in four:
        for mu in (ctx.a1, ctx.b1):
            for nu in (ctx.a2, ctx.b2):
                avoid.append(ctx.one - ctx.q**2 / (lam * mu * nu))
        avoid.append(ctx.one - lam * ctx.b1 * ctx.b2 / ctx.q**3)
        for mu in (ctx.a2, ctx.b2):
            avoid.append(ctx.one - lam * mu * ctx.b1 / ctx.q**3)
    return avoid


_AVOID_CACHE: list | None = None


def random_specialization(seed: int) -> dict:
    """Deterministic nonzero rational values for the 7 free variables, avoiding
    every zero of the standard factor library (rejection sampling)."""
    global _AVOID_CACHE
    if _AVOID_CACHE is None:
        _AVOID_CACHE = _standard_avoid_factors()
    rng = random.Random(seed)

    def draw() -> Fraction:
        num = rng.choice([n for n in range(-9, 10) if n])
        den = rng.randint(1, 9)
        return Fraction(num, den)

    while True:
        point = {v: draw() for v in GENERIC_VARS}
        if abs(point["q"]) in (0, 1):
            continue
        ok = True
        for f in _AVOID_CACHE:
            try:
                if f.evaluate(point) == 0:
                    ok = False
                    break
            except ZeroDivisionError:
                ok = False
                break
        if ok:
            return point


def gamma_value(point: dict) -> Fraction:
    return CTX.gamma.evaluate(point)


def delta_value(point: dict) -> Fraction:
    return CTX.delta.evaluate(point)
