"""Truncated power series in eps = 2*pi/k, with q = exp(-i*eps)."""
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence

from src.errors import InputError
from src.exact_arith.laurent import LaurentUni
from src.exact_arith.scalars import GaussianRational, ONE, ZERO, gaussian

MAX_SERIES_ORDER = 4

# (-i)^n cycles with period four
_MINUS_I_POWERS = (
    GaussianRational(1, 0),
    GaussianRational(0, -1),
    GaussianRational(-1, 0),
    GaussianRational(0, 1),
)


class EpsSeries:
    """Power series c_0 + c_1 eps + ... + c_order eps^order."""

    __slots__ = ('order', 'coeffs')

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError(f"Unsupported series order: {order}")
        values = [gaussian(c) for c in list(coeffs)[:order + 1]]
        values += [ZERO] * (order + 1 - len(values))
        self.order = order
        self.coeffs = tuple(values)

    @classmethod
    def constant(cls, value, order: int) -> 'EpsSeries':
        return cls([value], order)

    def _lift(self, other) -> 'EpsSeries':
        if isinstance(other, EpsSeries):
            if other.order != self.order:
                raise ValueError(f"Series order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return EpsSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return EpsSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> 'EpsSeries':
        return EpsSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = [ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return EpsSeries(out, self.order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'EpsSeries':
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.reciprocal()
        result = EpsSeries.constant(1, self.order)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def reciprocal(self) -> 'EpsSeries':
        """Multiplicative inverse; needs a nonzero constant term."""
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("Series with zero constant term has no inverse")
        inv0 = c0.inverse()
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-acc * inv0)
        return EpsSeries(out, self.order)

    def truncate(self, order: int) -> 'EpsSeries':
        return EpsSeries(self.coeffs[:order + 1], order)

    def agrees_with(self, other: 'EpsSeries', order: int) -> bool:
        """Equality of the coefficients up to and including eps^order."""
        return self.coeffs[:order + 1] == other.coeffs[:order + 1]

    def coefficient(self, n: int) -> GaussianRational:
        return self.coeffs[n] if n <= self.order else ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = EpsSeries.constant(other, self.order)
        if not isinstance(other, EpsSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ' + '.join(f"({c})*eps^{n}" for n, c in enumerate(self.coeffs) if c) or '0'
        return f"EpsSeries[{self.order}]({body})"

    def to_json(self) -> Dict:
        return {
            'var': 'eps',
            'order': self.order,
            'coeffs': [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'EpsSeries':
        try:
            coeffs: List[GaussianRational] = [GaussianRational.from_json(c) for c in data['coeffs']]
            return cls(coeffs, int(data['order']))
        except (KeyError, TypeError) as e:
            raise InputError(f"Malformed series record: {e}") from e


def _check_order(order: int):
    if not 0 <= order <= MAX_SERIES_ORDER:
        raise ValueError(f"Series order must lie in 0..{MAX_SERIES_ORDER}, got {order}")


def q_power_series(r: Fraction, order: int) -> EpsSeries:
    """Expand q^r = exp(-i r eps); the eps^n coefficient is (-i r)^n / n!."""
    _check_order(order)
    r = Fraction(r)
    coeffs = [_MINUS_I_POWERS[n % 4] * (r ** n / factorial(n)) for n in range(order + 1)]
    return EpsSeries(coeffs, order)


def expand_laurent_to_series(p: LaurentUni, denom: int, order: int) -> EpsSeries:
    """Map u^n to q^(n/denom) and sum the term expansions."""
    _check_order(order)
    if denom == 0:
        raise ValueError("Uniformizer denominator must be nonzero")
    total = EpsSeries.constant(0, order)
    for e, c in p.items():
        total = total + q_power_series(Fraction(e, denom), order) * c
    return total


def one_series(order: int) -> EpsSeries:
    return EpsSeries([ONE], order)
