import logging
import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from src.exact_arith.scalars import ZERO
from src.exact_arith.superpoly import GeneratorPool
from src.report import IdentityResult, all_passed
from src.superalgebra.context import AlgebraContext
from src.superalgebra.field_equation import (
    field_equation_mismatches, random_point, random_poly_field,
)
from src.superalgebra.gauge import (
    action_density_component, action_density_strform, field_strength_agrees, random_components,
)
from src.superalgebra.identities import (
    casimir, casimir_value, fierz_lhs, fierz_rhs, str2_closed, str3_closed,
)
from src.superalgebra.matrices import (
    GradedMatrix, bracket_rhs, ehat, generators, super_bracket, supertrace,
    supertrace_of_product,
)

EXHAUSTIVE_DIM = 5
FIELD_EQUATION_DIM = 4


@dataclass
class VerifierSettings:
    action_samples: int = 100
    field_samples: int = 20
    index_samples: int = 2000
    seed: int = 2024


class AlgebraVerifier:
    """Runs every identity family for one su(M|N) and collects a JSON report."""

    def __init__(self, ctx: AlgebraContext, settings: Optional[VerifierSettings] = None):
        self.ctx = ctx
        self.settings = settings or VerifierSettings()
        self.logger = logging.getLogger('AlgebraVerifier')
        self.basis = {(a, b): ehat(a, b, ctx) for a in ctx.indices() for b in ctx.indices()}
        self.exhaustive = ctx.dim <= EXHAUSTIVE_DIM

    def _tuples(self, arity: int, rng: random.Random) -> Iterable[Tuple[int, ...]]:
        indices = list(self.ctx.indices())
        if self.exhaustive:
            return product(indices, repeat=arity)
        return (tuple(rng.choice(indices) for _ in range(arity))
                for _ in range(self.settings.index_samples))

    def _mode(self) -> str:
        return 'exhaustive' if self.exhaustive else 'sampled'

    def check_traceless(self) -> IdentityResult:
        result = IdentityResult('ehat_traceless')
        for (a, b), x in self.basis.items():
            value = supertrace(x)
            result.record(value == ZERO, (a, b), ZERO, value)
        return result

    def check_diagonal_sum(self) -> IdentityResult:
        result = IdentityResult('ehat_diagonal_sum')
        total = GradedMatrix.zero(self.ctx)
        for a in self.ctx.indices():
            total = total + self.basis[(a, a)]
        result.record(total.is_zero(), (), 'zero matrix', total)
        return result

    def check_super_bracket(self, rng: random.Random) -> IdentityResult:
        result = IdentityResult('super_commutation', mode=self._mode())
        for a, b, c, d in self._tuples(4, rng):
            lhs = super_bracket(self.basis[(a, b)], self.basis[(c, d)])
            rhs = bracket_rhs(a, b, c, d, self.ctx)
            result.record(lhs == rhs, (a, b, c, d), rhs, lhs)
        return result

    def check_str2(self, rng: random.Random) -> IdentityResult:
        result = IdentityResult('supertrace_two', mode=self._mode())
        for a, b, c, d in self._tuples(4, rng):
            direct = supertrace_of_product(self.basis[(a, b)], self.basis[(c, d)])
            closed = str2_closed(a, b, c, d, self.ctx)
            result.record(direct == closed, (a, b, c, d), closed, direct)
        return result

    def check_str3(self, rng: random.Random) -> IdentityResult:
        result = IdentityResult('supertrace_three', mode=self._mode())
        products: Dict[Tuple[int, int, int, int], GradedMatrix] = {}
        for a, b, c, d, e, f in self._tuples(6, rng):
            key = (a, b, c, d)
            if key not in products:
                products[key] = self.basis[(a, b)] @ self.basis[(c, d)]
            direct = supertrace_of_product(products[key], self.basis[(e, f)])
            closed = str3_closed(a, b, c, d, e, f, self.ctx)
            result.record(direct == closed, (a, b, c, d, e, f), closed, direct)
        return result

    def check_fierz(self, rng: random.Random) -> IdentityResult:
        result = IdentityResult('fierz', mode=self._mode())
        for i, j, k, l in self._tuples(4, rng):
            lhs = fierz_lhs(i, j, k, l, self.ctx, basis=self.basis)
            rhs = fierz_rhs(i, j, k, l, self.ctx)
            result.record(lhs == rhs, (i, j, k, l), rhs, lhs)
        return result

    def check_casimir(self) -> IdentityResult:
        result = IdentityResult('casimir')
        operator = casimir(self.ctx)
        expected = GradedMatrix.identity(self.ctx) * (2 * casimir_value(self.ctx))
        result.record(operator == expected, (), expected, operator)
        return result

    def check_generators(self) -> IdentityResult:
        result = IdentityResult('generators_traceless_hermitian')
        ctx = self.ctx
        labelled: List[Tuple[Tuple, GradedMatrix]] = []
        for a in ctx.indices():
            for b in ctx.indices():
                if a != b:
                    labelled.append((('E', a, b), generators('E', a, b, ctx)))
                    labelled.append((('F', a, b), generators('F', a, b, ctx)))
        for c in range(1, ctx.dim):
            labelled.append((('H', c, c), generators('H', c, None, ctx)))
        for label, x in labelled:
            trace = supertrace(x)
            hermitian = x.conjugate_transpose() == x
            result.record(trace == ZERO and hermitian, label,
                          'Str = 0 and X^dagger = X', f"Str = {trace}, hermitian = {hermitian}")
        return result

    def _sampled(self, name: str, samples: int, rng: random.Random,
                 check: Callable[[random.Random, GeneratorPool], Tuple[bool, object, object]]) -> IdentityResult:
        result = IdentityResult(name, mode='sampled')
        pool = GeneratorPool()
        for sample in range(samples):
            ok, expected, actual = check(rng, pool)
            result.record(ok, (sample,), expected, actual)
        return result

    def check_action_density(self, rng: random.Random) -> IdentityResult:
        def one(rng, pool):
            A, D = random_components(self.ctx, rng, pool)
            component = action_density_component(A, D, self.ctx)
            strform = action_density_strform(A, D, self.ctx)
            return component == strform, strform, component
        return self._sampled('action_density', self.settings.action_samples, rng, one)

    def check_field_strength(self, rng: random.Random) -> IdentityResult:
        def one(rng, pool):
            A, D = random_components(self.ctx, rng, pool)
            return field_strength_agrees(A, D, self.ctx), 'matrix oracle', 'component formula'
        return self._sampled('field_strength', self.settings.action_samples, rng, one)

    def check_field_equation(self, rng: random.Random) -> IdentityResult:
        def one(rng, pool):
            field_ = random_poly_field(self.ctx, rng, pool, degree=rng.choice((0, 1, 2)))
            mismatches = field_equation_mismatches(field_, random_point(rng))
            return not mismatches, 'no mismatching entries', mismatches[:3]
        return self._sampled('field_equation', self.settings.field_samples, rng, one)

    def run(self) -> Dict:
        ctx = self.ctx
        rng = random.Random(self.settings.seed)
        self.logger.info(f"Verifying su({ctx.M}|{ctx.N}) identities ({self._mode()})")
        try:
            results = [
                self.check_traceless(),
                self.check_diagonal_sum(),
                self.check_super_bracket(rng),
                self.check_str2(rng),
                self.check_str3(rng),
                self.check_fierz(rng),
                self.check_casimir(),
                self.check_generators(),
                self.check_action_density(rng),
                self.check_field_strength(rng),
            ]
            if ctx.dim <= FIELD_EQUATION_DIM:
                results.append(self.check_field_equation(rng))
        except Exception as e:
            self.logger.error(f"Identity sweep for su({ctx.M}|{ctx.N}) aborted: {str(e)}")
            raise
        for r in results:
            if r.failed:
                self.logger.warning(f"{r.identity}: {r.failed} of {r.checked} checks failed")
        return {
            'M': ctx.M,
            'N': ctx.N,
            'casimir_value': str(casimir_value(ctx)),
            'identities': [r.to_json() for r in results],
            'passed': all_passed(results),
        }


def verify_algebra(ctx: AlgebraContext, settings: Optional[VerifierSettings] = None) -> Dict:
    return AlgebraVerifier(ctx, settings).run()
