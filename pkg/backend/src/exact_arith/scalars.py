from fractions import Fraction
from typing import Dict, Union

from src.errors import InputError

Rational = Fraction
Number = Union[int, Fraction, 'GaussianRational']


def parse_rational(text: str) -> Fraction:
    """Parse a decimal-rational string such as "-3/4"."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Unsupported rational literal: {text!r}") from e


class GaussianRational:
    """Exact complex number re + im*i with rational parts."""

    __slots__ = ('re', 'im')

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> 'GaussianRational':
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, value) -> 'GaussianRational':
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._raw(Fraction(value), _FZERO)
        raise TypeError(f"Cannot use {type(value).__name__} as a Gaussian rational")

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            if not other.im and not self.im:
                return GaussianRational._raw(self.re * other.re, _FZERO)
            return GaussianRational._raw(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> 'GaussianRational':
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self) -> 'GaussianRational':
        return self

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational._raw(self.re, -self.im)

    def inverse(self) -> 'GaussianRational':
        n = self.norm()
        if not n:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("Gaussian rational division by zero")
            return GaussianRational._raw(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int) -> 'GaussianRational':
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = '+' if self.im > 0 else '-'
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_json(self) -> Dict[str, str]:
        return {'re': str(self.re), 'im': str(self.im)}

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> 'GaussianRational':
        try:
            return cls._raw(parse_rational(data['re']), parse_rational(data['im']))
        except KeyError as e:
            raise InputError(f"Coefficient record is missing {e}") from e


_FZERO = Fraction(0)
ZERO = GaussianRational._raw(_FZERO, _FZERO)
ONE = GaussianRational._raw(Fraction(1), _FZERO)
I = GaussianRational._raw(_FZERO, Fraction(1))


def gaussian(value) -> GaussianRational:
    """Coerce ints, Fractions and Gaussian rationals to a Gaussian rational."""
    return GaussianRational.coerce(value)
