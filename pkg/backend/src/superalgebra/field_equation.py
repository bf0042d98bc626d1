"""Polynomial gauge fields and the Euler-Lagrange form of the field equation.

The density is built once per (ctx, sign) over jet variables A_rho^ab and
D_nu rho^ab, using the same component routine that evaluates it numerically.
Its left derivatives give the Euler-Lagrange expression

    EL_rho^ab = dL/dA_rho^ab - sum_nu d_nu (dL/dD_nu rho^ab)

evaluated on the field at a rational point. The field equation then says
C_mu nu with C^ba = 1/2 sum_rho eps^{mu nu rho} (-1)^[b] EL_rho^ab is the
same algebra element as F_mu nu (the 1/2 is 2pi/k times the k/4pi prefactor).
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import count
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import InputError
from src.exact_arith.multipoly import MultiPoly3
from src.exact_arith.superpoly import GeneratorPool, SuperPolynomial, grassmann_value
from src.superalgebra.context import AlgebraContext
from src.superalgebra.gauge import (
    PRINTED_FIELD_STRENGTH_SIGN, SP_ONE, SP_ZERO, Field, Jet, action_density_component,
    as_super, envelope, field_strength, levi_civita, random_gaussian,
)

MAX_FIELD_DEGREE = 2
MONOMIALS_DEGREE_2: Tuple[Tuple[int, int, int], ...] = tuple(
    (i, j, k) for i in range(3) for j in range(3) for k in range(3) if i + j + k <= 2
)

logger = logging.getLogger('FieldEquation')


@dataclass(frozen=True)
class PolyGaugeField:
    """A_rho^ab(x) as MultiPoly3 with SuperPolynomial coefficients, comps[rho][a][b] 0-based."""

    ctx: AlgebraContext
    comps: Tuple[Tuple[Tuple[MultiPoly3, ...], ...], ...]

    def __post_init__(self):
        n = self.ctx.dim
        if len(self.comps) != 3 or any(len(r) != n or any(len(c) != n for c in r) for r in self.comps):
            raise InputError(f"A polynomial field needs 3 arrays of {n}x{n} components")
        gr = self.ctx.gradings()
        for rho, array in enumerate(self.comps):
            for a, row in enumerate(array):
                for b, poly in enumerate(row):
                    if poly.degree() > MAX_FIELD_DEGREE:
                        raise InputError(
                            f"Component A_{rho + 1}^{a + 1}{b + 1} has degree {poly.degree()}, "
                            f"limit is {MAX_FIELD_DEGREE}"
                        )
                    slot = (gr[a] + gr[b]) & 1
                    for coeff in poly.terms.values():
                        if not isinstance(coeff, SuperPolynomial) or coeff.parities() - {slot}:
                            raise InputError(
                                f"Component A_{rho + 1}^{a + 1}{b + 1} must have parity {slot}"
                            )

    @classmethod
    def from_components(cls, ctx: AlgebraContext,
                        comps: Sequence[Sequence[Sequence[object]]]) -> 'PolyGaugeField':
        """Accepts MultiPoly3 or scalars; scalar coefficients are lifted to SuperPolynomial."""
        def lift(poly):
            if not isinstance(poly, MultiPoly3):
                poly = MultiPoly3.constant(poly)
            return MultiPoly3({d: as_super(c) for d, c in poly.terms.items()})

        return cls(ctx, tuple(
            tuple(tuple(lift(p) for p in row) for row in array) for array in comps
        ))

    @classmethod
    def zero(cls, ctx: AlgebraContext) -> 'PolyGaugeField':
        n = ctx.dim
        return cls(ctx, tuple(tuple(tuple(MultiPoly3() for _ in range(n)) for _ in range(n))
                              for _ in range(3)))

    def component(self, mu: int, a: int, b: int) -> MultiPoly3:
        """A_mu^ab with 1-based mu, a, b."""
        if mu not in (1, 2, 3):
            raise InputError(f"Space index must be 1, 2 or 3, got {mu}")
        self.ctx.check_index(a)
        self.ctx.check_index(b)
        return self.comps[mu - 1][a - 1][b - 1]

    def degree(self) -> int:
        return max(p.degree() for array in self.comps for row in array for p in row)

    def values_at(self, point: Sequence[Fraction]) -> Field:
        return [[[p.evaluate(point, zero=SP_ZERO) for p in row] for row in array]
                for array in self.comps]

    def derivatives_at(self, point: Sequence[Fraction]) -> Jet:
        """D[nu][rho] = d_nu A_rho at the point."""
        return [[[[p.diff(nu).evaluate(point, zero=SP_ZERO) for p in row] for row in self.comps[rho]]
                 for rho in range(3)] for nu in range(3)]


def random_poly_field(ctx: AlgebraContext, rng: random.Random,
                      pool: Optional[GeneratorPool] = None, degree: int = 2,
                      density: float = 0.5) -> PolyGaugeField:
    """Degree <= ``degree`` field; each of the monomials is present with probability ``density``."""
    if degree > MAX_FIELD_DEGREE or degree < 0:
        raise InputError(f"Field degree must lie in 0..{MAX_FIELD_DEGREE}, got {degree}")
    pool = pool or GeneratorPool()
    monomials = [m for m in MONOMIALS_DEGREE_2 if sum(m) <= degree]
    gr = ctx.gradings()
    n = ctx.dim
    comps = []
    for _ in range(3):
        array = []
        for a in range(n):
            row = []
            for b in range(n):
                parity = (gr[a] + gr[b]) & 1
                terms = {
                    m: grassmann_value(random_gaussian(rng, allow_zero=False), pool, parity)
                    for m in monomials if rng.random() < density
                }
                row.append(MultiPoly3(terms))
            array.append(tuple(row))
        comps.append(tuple(array))
    return PolyGaugeField(ctx, tuple(comps))


def random_point(rng: random.Random) -> Tuple[Fraction, Fraction, Fraction]:
    return tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3))


class JetSpace:
    """Symbolic density over jet variables and its first left derivatives."""

    def __init__(self, ctx: AlgebraContext, commutator_sign: int):
        self.ctx = ctx
        self.commutator_sign = commutator_sign
        n = ctx.dim
        gr = ctx.gradings()
        ids = count()
        self.a_ids: Dict[Tuple[int, int, int], int] = {}
        self.d_ids: Dict[Tuple[int, int, int, int], int] = {}
        for rho in range(3):
            for a in range(n):
                for b in range(n):
                    self.a_ids[(rho, a, b)] = 2 * next(ids) + ((gr[a] + gr[b]) & 1)
        for nu in range(3):
            for rho in range(3):
                for a in range(n):
                    for b in range(n):
                        self.d_ids[(nu, rho, a, b)] = 2 * next(ids) + ((gr[a] + gr[b]) & 1)
        A = [[[SuperPolynomial.generator(self.a_ids[(rho, a, b)]) for b in range(n)]
              for a in range(n)] for rho in range(3)]
        D = [[[[SuperPolynomial.generator(self.d_ids[(nu, rho, a, b)]) for b in range(n)]
               for a in range(n)] for rho in range(3)] for nu in range(3)]
        self.density = action_density_component(A, D, ctx, commutator_sign)
        self.d_by_a = {key: self.density.derivative(gid) for key, gid in self.a_ids.items()}
        self.d_by_d = {key: self.density.derivative(gid) for key, gid in self.d_ids.items()}

    def point_values(self, A: Field, D: Jet) -> Dict[int, SuperPolynomial]:
        values = {gid: A[rho][a][b] for (rho, a, b), gid in self.a_ids.items()}
        values.update({gid: D[nu][rho][a][b] for (nu, rho, a, b), gid in self.d_ids.items()})
        return values

    def poly_values(self, field: PolyGaugeField) -> Dict[int, MultiPoly3]:
        values = {gid: field.comps[rho][a][b] for (rho, a, b), gid in self.a_ids.items()}
        values.update({gid: field.comps[rho][a][b].diff(nu)
                       for (nu, rho, a, b), gid in self.d_ids.items()})
        return values


@lru_cache(maxsize=None)
def jet_space(ctx: AlgebraContext, commutator_sign: int) -> JetSpace:
    logger.info(f"Building symbolic density for su({ctx.M}|{ctx.N}), sign {commutator_sign}")
    return JetSpace(ctx, commutator_sign)


def euler_lagrange(field: PolyGaugeField, point: Sequence[Fraction],
                   commutator_sign: int = PRINTED_FIELD_STRENGTH_SIGN) -> List[List[List[SuperPolynomial]]]:
    """EL[rho][a][b] at the point."""
    ctx = field.ctx
    jets = jet_space(ctx, commutator_sign)
    at_point = jets.point_values(field.values_at(point), field.derivatives_at(point))
    as_polys = jets.poly_values(field)
    poly_one = MultiPoly3.constant(SP_ONE)
    n = ctx.dim
    out = []
    for rho in range(3):
        array = []
        for a in range(n):
            row = []
            for b in range(n):
                value = jets.d_by_a[(rho, a, b)].substitute(at_point, SP_ZERO, SP_ONE)
                for nu in range(3):
                    momentum = jets.d_by_d[(nu, rho, a, b)]
                    if not momentum:
                        continue
                    flux = momentum.substitute(as_polys, MultiPoly3(), poly_one)
                    value = value - flux.diff(nu).evaluate(point, zero=SP_ZERO)
                row.append(value)
            array.append(row)
        out.append(array)
    return out


def field_equation_mismatches(field: PolyGaugeField, point: Sequence[Fraction],
                              commutator_sign: int = PRINTED_FIELD_STRENGTH_SIGN,
                              density_sign: Optional[int] = None) -> List[Dict]:
    """Entries (mu, nu, i, j), 1-based, where the two sides differ.

    ``density_sign`` defaults to ``commutator_sign``; passing a different value
    mixes conventions between the density and F.
    """
    ctx = field.ctx
    density_sign = commutator_sign if density_sign is None else density_sign
    el = euler_lagrange(field, point, density_sign)
    F = field_strength(field.values_at(point), field.derivatives_at(point), ctx, commutator_sign)
    sig = ctx.signs()
    n = ctx.dim
    mismatches = []
    for mu in range(3):
        for nu in range(3):
            if mu == nu:
                continue
            C = [[SP_ZERO] * n for _ in range(n)]
            for rho in range(3):
                eps = levi_civita(mu, nu, rho)
                if not eps:
                    continue
                for a in range(n):
                    for b in range(n):
                        if el[rho][a][b]:
                            C[b][a] = C[b][a] + el[rho][a][b] * Fraction(eps * sig[b], 2)
            lhs = envelope(C, ctx)
            rhs = envelope(F[mu][nu], ctx)
            for i in range(n):
                for j in range(n):
                    if lhs[i][j] != rhs[i][j]:
                        mismatches.append({'mu': mu + 1, 'nu': nu + 1, 'i': i + 1, 'j': j + 1})
    return mismatches


def field_equation_check(field: PolyGaugeField, point: Sequence[Fraction],
                         ctx: Optional[AlgebraContext] = None,
                         commutator_sign: int = PRINTED_FIELD_STRENGTH_SIGN) -> bool:
    if ctx is not None and ctx != field.ctx:
        raise InputError(f"Field lives in su({field.ctx.M}|{field.ctx.N}), not su({ctx.M}|{ctx.N})")
    if len(point) != 3:
        raise InputError(f"Sample point needs 3 coordinates, got {len(point)}")
    point = tuple(Fraction(x) for x in point)
    return not field_equation_mismatches(field, point, commutator_sign)
