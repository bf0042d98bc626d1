"""Gauge potential components, field strength and the Chern-Simons density.

A field A_mu = sum_ab A_mu^ab e^_ab is handled through its component arrays
A[mu][a][b] (0-based). Components are supercommutative numbers: even slots
([a]+[b] = 0) hold ordinary Gaussian rationals, odd slots hold Grassmann-odd
values, both as SuperPolynomial.

Matrix forms go through the Grassmann envelope

    Z_ij = (-1)^(([i]+[j])[i]) X^ij - delta_ij sum_a (-1)^[a] X^aa / (M-N)

which turns products of A^ab (x) e^_ab into plain matrix products and keeps
the supertrace as sum_i (-1)^[i] Z_ii.

``commutator_sign`` s fixes the convention F = dA - dA + s[A, A] and the cubic
density coefficient s*2/3.
"""
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.exact_arith.scalars import GaussianRational
from src.exact_arith.superpoly import GeneratorPool, SuperPolynomial, grassmann_value
from src.superalgebra.context import AlgebraContext

Array = List[List[SuperPolynomial]]
Field = List[Array]
Jet = List[List[Array]]

SP_ZERO = SuperPolynomial()
SP_ONE = SuperPolynomial.constant(1)

# (mu, nu, rho, epsilon^{mu nu rho})
LEVI_CIVITA: Tuple[Tuple[int, int, int, int], ...] = (
    (0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
    (0, 2, 1, -1), (2, 1, 0, -1), (1, 0, 2, -1),
)
PRINTED_FIELD_STRENGTH_SIGN = -1
PRINTED_DENSITY_SIGN = 1


def levi_civita(mu: int, nu: int, rho: int) -> int:
    for a, b, c, sign in LEVI_CIVITA:
        if (a, b, c) == (mu, nu, rho):
            return sign
    return 0


def as_super(value) -> SuperPolynomial:
    if isinstance(value, SuperPolynomial):
        return value
    return SuperPolynomial.constant(value)


def coerce_array(rows: Sequence[Sequence], ctx: AlgebraContext) -> Array:
    n = ctx.dim
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"Component array must be {n}x{n}")
    return [[as_super(x) for x in row] for row in rows]


def zero_array(ctx: AlgebraContext) -> Array:
    return [[SP_ZERO] * ctx.dim for _ in range(ctx.dim)]


def zero_field(ctx: AlgebraContext) -> Tuple[Field, Jet]:
    """A = 0 and D = 0."""
    A = [zero_array(ctx) for _ in range(3)]
    D = [[zero_array(ctx) for _ in range(3)] for _ in range(3)]
    return A, D


# envelope matrices

def envelope(X: Array, ctx: AlgebraContext) -> Array:
    n = ctx.dim
    sig = ctx.signs()
    gr = ctx.gradings()
    trace = SP_ZERO
    for a in range(n):
        if X[a][a]:
            trace = trace + X[a][a] * sig[a]
    shift = trace * ctx.inverse_mn if trace else SP_ZERO
    Z = []
    for i in range(n):
        row = []
        for j in range(n):
            value = X[i][j]
            if ((gr[i] + gr[j]) & 1) and gr[i]:
                value = -value
            if i == j and shift:
                value = value - shift
            row.append(value)
        Z.append(row)
    return Z


def mat_mul(P: Array, Q: Array) -> Array:
    n = len(P)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = SP_ZERO
            for k in range(n):
                x = P[i][k]
                if x:
                    y = Q[k][j]
                    if y:
                        acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_combine(P: Array, Q: Array, q_factor=1) -> Array:
    return [[x + y * q_factor if y else x for x, y in zip(rp, rq)] for rp, rq in zip(P, Q)]


def env_supertrace(P: Array, ctx: AlgebraContext) -> SuperPolynomial:
    total = SP_ZERO
    for i, s in enumerate(ctx.signs()):
        if P[i][i]:
            total = total + P[i][i] * s
    return total


# field strength

def field_strength(A: Field, D: Jet, ctx: AlgebraContext,
                   commutator_sign: int = PRINTED_FIELD_STRENGTH_SIGN) -> Jet:
    """F_mu nu^ab = D_mu nu^ab - D_nu mu^ab + s sum_c (-1)^(p_ac p_cb)(A_mu^ac A_nu^cb - A_nu^ac A_mu^cb)."""
    n = ctx.dim
    gr = ctx.gradings()
    F = [[zero_array(ctx) for _ in range(3)] for _ in range(3)]
    for mu in range(3):
        for nu in range(3):
            if mu == nu:
                continue
            Am, An = A[mu], A[nu]
            for a in range(n):
                for b in range(n):
                    value = as_super(D[mu][nu][a][b]) - as_super(D[nu][mu][a][b])
                    bracket = SP_ZERO
                    for c in range(n):
                        p_ac = (gr[a] + gr[c]) & 1
                        p_cb = (gr[c] + gr[b]) & 1
                        piece = as_super(Am[a][c]) * as_super(An[c][b]) - \
                            as_super(An[a][c]) * as_super(Am[c][b])
                        bracket = bracket - piece if p_ac and p_cb else bracket + piece
                    F[mu][nu][a][b] = value + bracket * commutator_sign
    return F


def field_strength_matrix(A: Field, D: Jet, ctx: AlgebraContext,
                          commutator_sign: int = PRINTED_FIELD_STRENGTH_SIGN) -> List[List[Array]]:
    """Direct matrix oracle: Z(D_mu nu) - Z(D_nu mu) + s (Z_mu Z_nu - Z_nu Z_mu)."""
    Z = [envelope(A[mu], ctx) for mu in range(3)]
    out = [[None] * 3 for _ in range(3)]
    for mu in range(3):
        for nu in range(3):
            derivative = mat_combine(envelope(D[mu][nu], ctx), envelope(D[nu][mu], ctx), -1)
            commutator = mat_combine(mat_mul(Z[mu], Z[nu]), mat_mul(Z[nu], Z[mu]), -1)
            out[mu][nu] = mat_combine(derivative, commutator, commutator_sign)
    return out


def field_strength_agrees(A: Field, D: Jet, ctx: AlgebraContext,
                          commutator_sign: int = PRINTED_FIELD_STRENGTH_SIGN) -> bool:
    """Component formula and matrix oracle give the same algebra element."""
    F = field_strength(A, D, ctx, commutator_sign)
    oracle = field_strength_matrix(A, D, ctx, commutator_sign)
    return all(
        envelope(F[mu][nu], ctx) == oracle[mu][nu]
        for mu in range(3) for nu in range(3)
    )


# Chern-Simons density (k/4pi prefactor omitted)

def action_density_component(A: Field, D: Jet, ctx: AlgebraContext,
                             commutator_sign: int = PRINTED_DENSITY_SIGN):
    """Component form of the density, summed term by term."""
    n = ctx.dim
    sig = ctx.signs()
    gr = ctx.gradings()
    m = ctx.mn
    cubic = Fraction(2, 3) * commutator_sign
    total = SP_ZERO
    for mu, nu, rho, eps in LEVI_CIVITA:
        Am, An, Ar, Dnr = A[mu], A[nu], A[rho], D[nu][rho]
        acc = SP_ZERO
        for a in range(n):
            for b in range(n):
                if Am[a][b] and Dnr[b][a]:
                    acc = acc + Am[a][b] * Dnr[b][a] * sig[b]
                if Am[a][a] and Dnr[b][b]:
                    acc = acc - Am[a][a] * Dnr[b][b] * Fraction(sig[a] * sig[b], m)
        for a in range(n):
            for b in range(n):
                if not Am[a][b]:
                    continue
                for c in range(n):
                    if An[b][c] and Ar[c][a]:
                        graded = (gr[a] * gr[b] + gr[b] * gr[c] + gr[c] * gr[a]) & 1
                        sign = sig[b] * sig[c] * (-1 if graded else 1)
                        acc = acc + Am[a][b] * An[b][c] * Ar[c][a] * (cubic * sign)
        for a in range(n):
            if not Am[a][a]:
                continue
            for b in range(n):
                for c in range(n):
                    if An[c][b] and Ar[b][c]:
                        acc = acc - Am[a][a] * An[c][b] * Ar[b][c] * (cubic * sig[a] * sig[b] / m)
                    if An[b][b] and Ar[c][c]:
                        acc = acc + Am[a][a] * An[b][b] * Ar[c][c] * (
                            2 * cubic * sig[a] * sig[b] * sig[c] / (m * m))
        total = total + acc * eps
    return total


def action_density_strform(A: Field, D: Jet, ctx: AlgebraContext,
                           commutator_sign: int = PRINTED_DENSITY_SIGN):
    """eps^{mu nu rho} Str(A_mu d_nu A_rho + s(2/3) A_mu A_nu A_rho) on envelopes."""
    cubic = Fraction(2, 3) * commutator_sign
    Z = [envelope(A[mu], ctx) for mu in range(3)]
    pairs = {}
    total = SP_ZERO
    for mu, nu, rho, eps in LEVI_CIVITA:
        quadratic = mat_mul(Z[mu], envelope(D[nu][rho], ctx))
        if (mu, nu) not in pairs:
            pairs[(mu, nu)] = mat_mul(Z[mu], Z[nu])
        triple = mat_mul(pairs[(mu, nu)], Z[rho])
        value = env_supertrace(quadratic, ctx) + env_supertrace(triple, ctx) * cubic
        total = total + value * eps
    return total


# sampling

def random_gaussian(rng: random.Random, allow_zero: bool = True) -> GaussianRational:
    while True:
        re = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        im = Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < 0.5 else Fraction(0)
        value = GaussianRational(re, im)
        if value or allow_zero:
            return value


def random_array(ctx: AlgebraContext, rng: random.Random, pool: GeneratorPool,
                 density: float = 0.8) -> Array:
    n = ctx.dim
    gr = ctx.gradings()
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            if rng.random() < density:
                row.append(grassmann_value(random_gaussian(rng, allow_zero=False), pool,
                                           (gr[a] + gr[b]) & 1))
            else:
                row.append(SP_ZERO)
        rows.append(row)
    return rows


def random_components(ctx: AlgebraContext, rng: random.Random,
                      pool: Optional[GeneratorPool] = None,
                      density: float = 0.8) -> Tuple[Field, Jet]:
    """Random point values A_mu^ab and D_nu rho^ab; odd slots get fresh odd generators."""
    pool = pool or GeneratorPool()
    A = [random_array(ctx, rng, pool, density) for _ in range(3)]
    D = [[random_array(ctx, rng, pool, density) for _ in range(3)] for _ in range(3)]
    return A, D
