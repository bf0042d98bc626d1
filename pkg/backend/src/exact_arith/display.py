"""Human-readable renderings of exact values via sympy.

The exact types never depend on sympy; these helpers only turn finished
values into expressions for tables and logs.
"""
from fractions import Fraction

import sympy as sp

from src.exact_arith.laurent import LaurentBi, LaurentUni
from src.exact_arith.scalars import GaussianRational
from src.exact_arith.series import EpsSeries

q, t, z, eps = sp.symbols('q t z eps')


def gaussian_to_sympy(c: GaussianRational) -> sp.Expr:
    return sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(
        c.im.numerator, c.im.denominator
    )


def uni_to_sympy(p: LaurentUni, denom: int) -> sp.Expr:
    """Rewrite a u-polynomial in q, with u = q^(1/denom)."""
    return sp.Add(*[
        gaussian_to_sympy(c) * q ** sp.Rational(e, denom) for e, c in p.items()
    ])


def bi_to_sympy(p: LaurentBi) -> sp.Expr:
    return sp.Add(*[gaussian_to_sympy(c) * t ** et * z ** ez for (et, ez), c in p.items()])


def series_to_sympy(s: EpsSeries) -> sp.Expr:
    return sp.Add(*[gaussian_to_sympy(c) * eps ** n for n, c in enumerate(s.coeffs)])


def render(value, denom: int = None) -> str:
    """Display string for any invariant value."""
    if isinstance(value, LaurentBi):
        return str(bi_to_sympy(value))
    if isinstance(value, LaurentUni):
        if denom is None:
            return str(sp.Add(*[gaussian_to_sympy(c) * sp.Symbol(value.var) ** e
                                for e, c in value.items()]))
        return str(uni_to_sympy(value, denom))
    if isinstance(value, EpsSeries):
        return str(series_to_sympy(value)) + f" + O(eps^{value.order + 1})"
    if isinstance(value, (GaussianRational, Fraction, int)):
        return str(value)
    raise ValueError(f"Unsupported value type: {type(value).__name__}")
