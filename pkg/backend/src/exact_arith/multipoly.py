"""Polynomials in the three space coordinates x^1, x^2, x^3.

Coefficients are any ring elements that support +, * and truth testing:
Gaussian rationals for ordinary test fields, SuperPolynomials when a field
component is Grassmann-odd. Products keep factor order, so noncommuting
coefficients are safe.
"""
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from src.exact_arith.scalars import GaussianRational, ZERO

Degrees = Tuple[int, int, int]
_Scalar = (int, Fraction, GaussianRational)


class MultiPoly3:
    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[Degrees, object]] = None):
        clean: Dict[Degrees, object] = {}
        for degrees, coeff in (terms or {}).items():
            if len(degrees) != 3 or any(d < 0 for d in degrees):
                raise ValueError(f"Unsupported monomial degrees: {degrees}")
            if isinstance(coeff, _Scalar):
                coeff = GaussianRational.coerce(coeff)
            if coeff:
                clean[tuple(degrees)] = coeff
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: Dict[Degrees, object]) -> 'MultiPoly3':
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, value) -> 'MultiPoly3':
        return cls({(0, 0, 0): value})

    @classmethod
    def coordinate(cls, axis: int) -> 'MultiPoly3':
        degrees = [0, 0, 0]
        degrees[axis] = 1
        return cls({tuple(degrees): 1})

    @property
    def terms(self) -> Dict[Degrees, object]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max((sum(d) for d in self._terms), default=0)

    def _lift(self, other) -> 'MultiPoly3':
        if isinstance(other, MultiPoly3):
            return other
        return MultiPoly3.constant(other)

    def __add__(self, other) -> 'MultiPoly3':
        other = self._lift(other)
        out = dict(self._terms)
        for degrees, coeff in other._terms.items():
            total = out[degrees] + coeff if degrees in out else coeff
            if total:
                out[degrees] = total
            else:
                out.pop(degrees, None)
        return MultiPoly3._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly3':
        return MultiPoly3._from_clean({d: -c for d, c in self._terms.items()})

    def __sub__(self, other) -> 'MultiPoly3':
        return self + (-self._lift(other))

    def __rsub__(self, other) -> 'MultiPoly3':
        return self._lift(other) + (-self)

    def __mul__(self, other) -> 'MultiPoly3':
        if not isinstance(other, MultiPoly3):
            return MultiPoly3._from_clean(
                {d: p for d, c in self._terms.items() for p in [c * other] if p}
            )
        out: Dict[Degrees, object] = {}
        for da, ca in self._terms.items():
            for db, cb in other._terms.items():
                key = (da[0] + db[0], da[1] + db[1], da[2] + db[2])
                product = ca * cb
                out[key] = out[key] + product if key in out else product
        return MultiPoly3._from_clean({d: c for d, c in out.items() if c})

    def __rmul__(self, other) -> 'MultiPoly3':
        return MultiPoly3._from_clean(
            {d: p for d, c in self._terms.items() for p in [other * c] if p}
        )

    def diff(self, axis: int) -> 'MultiPoly3':
        """Exact partial derivative along x^(axis+1)."""
        if axis not in (0, 1, 2):
            raise ValueError(f"Unsupported axis: {axis}")
        out: Dict[Degrees, object] = {}
        for degrees, coeff in self._terms.items():
            power = degrees[axis]
            if power:
                lowered = list(degrees)
                lowered[axis] -= 1
                out[tuple(lowered)] = coeff * power
        return MultiPoly3._from_clean(out)

    def evaluate(self, point: Sequence[Fraction], zero=ZERO):
        """Value at a rational point; empty polynomials evaluate to ``zero``."""
        total = zero
        for (d1, d2, d3), coeff in self._terms.items():
            weight = Fraction(point[0]) ** d1 * Fraction(point[1]) ** d2 * Fraction(point[2]) ** d3
            if weight:
                total = total + coeff * weight
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly3):
            other = self._lift(other)
        return self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        body = ' + '.join(f"({c})*x^{d}" for d, c in sorted(self._terms.items())) or '0'
        return f"MultiPoly3({body})"
