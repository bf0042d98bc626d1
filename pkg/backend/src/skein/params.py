"""Skein parameters alpha, beta, z, t, delta for su(M|N).

q-exact values are Laurent polynomials in u = q^(1/(2(M-N))):
alpha = q^C2 = u^((M-N)^2 - 1), beta = u, z = u^(M-N) - u^-(M-N),
t = u^((M-N)^2) and delta = (t - t^-1)/z, the quantum dimension.
paper-literal values are eps-series (q = exp(-i eps)) with delta = M-N.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Literal, Union

from src.errors import InputError
from src.exact_arith.laurent import LaurentUni
from src.exact_arith.series import EpsSeries, MAX_SERIES_ORDER, q_power_series
from src.superalgebra.context import AlgebraContext
from src.superalgebra.identities import casimir_value

Mode = Literal['q-exact', 'paper-literal']
Normalization = Literal['unit', 'paper']
Value = Union[LaurentUni, EpsSeries]

MODES = ('q-exact', 'paper-literal')
NORMALIZATIONS = ('unit', 'paper')


@dataclass(frozen=True)
class SkeinParams:
    M: int
    N: int
    mode: str
    normalization: str
    order: int
    alpha: Value
    beta: Value
    z: Value
    t: Value
    delta: Value

    @property
    def mn(self) -> int:
        return self.M - self.N

    @property
    def uniformizer_denominator(self) -> int:
        """u = q^(1/denominator)."""
        return 2 * self.mn

    def values(self) -> Dict[str, Value]:
        return {'alpha': self.alpha, 'beta': self.beta, 'z': self.z, 't': self.t, 'delta': self.delta}

    def to_json(self) -> Dict:
        return {
            'M': self.M,
            'N': self.N,
            'mode': self.mode,
            'normalization': self.normalization,
            'order': self.order,
            'uniformizer': f"q^(1/{self.uniformizer_denominator})",
            'params': {name: value.to_json() for name, value in self.values().items()},
        }


def normalize_mode(mode: str) -> str:
    if mode not in MODES:
        raise InputError(f"Unsupported mode: {mode}")
    return mode


def normalize_normalization(normalization: str) -> str:
    normalization = {'unit-unknot': 'unit', 'paper-unknot': 'paper'}.get(normalization, normalization)
    if normalization not in NORMALIZATIONS:
        raise InputError(f"Unsupported normalization: {normalization}")
    return normalization


def _q_exact(ctx: AlgebraContext, order: int) -> Dict[str, Value]:
    mn = ctx.mn
    z = LaurentUni({mn: 1, -mn: -1})
    t = LaurentUni.monomial(mn * mn)
    return {
        'alpha': LaurentUni.monomial(mn * mn - 1),
        'beta': LaurentUni.monomial(1),
        'z': z,
        't': t,
        'delta': (t - t.invert()).exact_div(z),
    }


def _paper_literal(ctx: AlgebraContext, order: int) -> Dict[str, Value]:
    mn = ctx.mn
    half = Fraction(1, 2)
    return {
        'alpha': q_power_series(casimir_value(ctx), order),
        'beta': q_power_series(Fraction(1, 2 * mn), order),
        'z': q_power_series(half, order) - q_power_series(-half, order),
        't': q_power_series(Fraction(mn, 2), order),
        'delta': EpsSeries.constant(mn, order),
    }


def make_params(M: int, N: int, mode: str = 'q-exact', order: int = 2,
                normalization: str = 'unit') -> SkeinParams:
    ctx = AlgebraContext(M, N)
    mode = normalize_mode(mode)
    normalization = normalize_normalization(normalization)
    if not 0 <= order <= MAX_SERIES_ORDER:
        raise InputError(f"Series order must lie in 0..{MAX_SERIES_ORDER}, got {order}")
    mode_methods: Dict[str, Callable[[AlgebraContext, int], Dict[str, Value]]] = {
        'q-exact': _q_exact,
        'paper-literal': _paper_literal,
    }
    return SkeinParams(M=M, N=N, mode=mode, normalization=normalization, order=order,
                       **mode_methods[mode](ctx, order))
