"""Closed-form supertraces, the Fierz identity and the quadratic Casimir."""
from fractions import Fraction

from src.exact_arith.scalars import GaussianRational, ZERO, gaussian
from src.superalgebra.context import AlgebraContext
from src.superalgebra.matrices import GradedMatrix, ehat


def _delta(x: int, y: int) -> int:
    return 1 if x == y else 0


def str2_closed(a: int, b: int, c: int, d: int, ctx: AlgebraContext) -> GaussianRational:
    """Str(e^_ab e^_cd) = (-1)^[a] d_ad d_bc - (-1)^([a]+[c]) d_ab d_cd / (M-N)."""
    for idx in (a, b, c, d):
        ctx.check_index(idx)
    value = Fraction(ctx.sigma(a) * _delta(a, d) * _delta(b, c))
    value -= Fraction(ctx.sigma(a) * ctx.sigma(c) * _delta(a, b) * _delta(c, d), ctx.mn)
    return gaussian(value)


def str3_closed(a: int, b: int, c: int, d: int, e: int, f: int,
                ctx: AlgebraContext) -> GaussianRational:
    """Str(e^_ab e^_cd e^_ef) as the five-term delta expansion."""
    for idx in (a, b, c, d, e, f):
        ctx.check_index(idx)
    s = ctx.sigma
    m = ctx.mn
    value = Fraction(s(a) * _delta(a, f) * _delta(b, c) * _delta(d, e))
    value -= Fraction(s(a) * s(c) * _delta(a, b) * _delta(c, f) * _delta(d, e), m)
    value -= Fraction(s(c) * s(f) * _delta(c, d) * _delta(a, f) * _delta(b, e), m)
    value -= Fraction(s(f) * s(a) * _delta(e, f) * _delta(a, d) * _delta(b, c), m)
    value += Fraction(2 * s(a) * s(c) * s(e) * _delta(a, b) * _delta(c, d) * _delta(e, f), m * m)
    return gaussian(value)


def fierz_rhs(i: int, j: int, k: int, l: int, ctx: AlgebraContext) -> GaussianRational:
    """(-1)^[j] d_il d_jk - d_ij d_kl / (M-N)."""
    for idx in (i, j, k, l):
        ctx.check_index(idx)
    value = Fraction(ctx.sigma(j) * _delta(i, l) * _delta(j, k))
    value -= Fraction(_delta(i, j) * _delta(k, l), ctx.mn)
    return gaussian(value)


def fierz_lhs(i: int, j: int, k: int, l: int, ctx: AlgebraContext,
              basis=None) -> GaussianRational:
    """sum_ab (-1)^[b] (e^_ab)_ij (e^_ba)_kl by explicit summation.

    ``basis`` may map (a, b) to prebuilt e^_ab matrices for sweeps.
    """
    for idx in (i, j, k, l):
        ctx.check_index(idx)
    total = ZERO
    for a in ctx.indices():
        for b in ctx.indices():
            left = basis[(a, b)] if basis else ehat(a, b, ctx)
            x = left.entries[i - 1][j - 1]
            if not x:
                continue
            right = basis[(b, a)] if basis else ehat(b, a, ctx)
            y = right.entries[k - 1][l - 1]
            if y:
                total = total + x * y * ctx.sigma(b)
    return total


def casimir_value(ctx: AlgebraContext) -> Fraction:
    """C2 = ((M-N)^2 - 1) / (2(M-N))."""
    return Fraction(ctx.mn * ctx.mn - 1, 2 * ctx.mn)


def casimir(ctx: AlgebraContext) -> GradedMatrix:
    """sum_ab (-1)^[b] e^_ab e^_ba, built by explicit products."""
    total = GradedMatrix.zero(ctx)
    for a in ctx.indices():
        for b in ctx.indices():
            term = ehat(a, b, ctx) @ ehat(b, a, ctx)
            total = total + term if ctx.sigma(b) > 0 else total - term
    return total
