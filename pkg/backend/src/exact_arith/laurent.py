"""Exact Laurent polynomials.

Univariate values live in the uniformizer u = q^(1/(2(M-N))) so every q-power
the invariants need has an integer exponent. Bivariate values carry HOMFLY
results in (t, z); negative z-exponents are allowed because the disjoint-union
factor (t - t^-1)/z divides by z.

Both kinds are immutable and always normalized: zero coefficients are never
stored.
"""
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from src.errors import InexactDivisionError, InputError
from src.exact_arith.scalars import GaussianRational, ONE, ZERO, gaussian

Scalar = (int, Fraction, GaussianRational)


class _LaurentBase:
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping] = None):
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = gaussian(coeff)
            if coeff:
                clean[self._check_key(key)] = coeff
        self._terms = clean
        self._hash = None

    # subclass hooks

    @staticmethod
    def _check_key(key):
        raise NotImplementedError

    @staticmethod
    def _key_add(a, b):
        raise NotImplementedError

    @staticmethod
    def _zero_key():
        raise NotImplementedError

    def _tag(self):
        raise NotImplementedError

    def _from_clean(self, terms: Dict) -> '_LaurentBase':
        raise NotImplementedError

    # shared arithmetic

    def _lift(self, other) -> '_LaurentBase':
        if isinstance(other, Scalar):
            value = gaussian(other)
            return self._from_clean({self._zero_key(): value} if value else {})
        if isinstance(other, _LaurentBase):
            if type(other) is not type(self):
                raise TypeError(
                    f"Cannot mix {type(self).__name__} with {type(other).__name__}"
                )
            if other._tag() != self._tag():
                raise ValueError(f"Variable mismatch: {self._tag()} vs {other._tag()}")
            return other
        return NotImplemented

    @property
    def terms(self) -> Dict:
        return dict(self._terms)

    def items(self) -> List[Tuple]:
        return sorted(self._terms.items())

    def coefficient(self, key) -> GaussianRational:
        return self._terms.get(key, ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            total = out.get(key, ZERO) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

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
        out: Dict = {}
        key_add = self._key_add
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = key_add(ka, kb)
                out[key] = out.get(key, ZERO) + ca * cb
        return self._from_clean({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, factor) -> '_LaurentBase':
        factor = gaussian(factor)
        if not factor:
            return self._from_clean({})
        return self._from_clean({k: c * factor for k, c in self._terms.items()})

    def monomial_inverse(self) -> '_LaurentBase':
        if not self.is_monomial():
            raise InexactDivisionError(f"{self} is not a unit of the Laurent ring")
        (key, coeff), = self._terms.items()
        return self._from_clean({self._key_neg(key): coeff.inverse()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.monomial_inverse()
            exponent = -exponent
        result = self._lift(1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            other = self._lift(other)
        if not isinstance(other, _LaurentBase):
            return NotImplemented
        return (type(other) is type(self) and other._tag() == self._tag()
                and other._terms == self._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._tag(), frozenset(self._terms.items())))
        return self._hash


class LaurentUni(_LaurentBase):
    """Laurent polynomial in a single variable (default tag u)."""

    __slots__ = ('var',)

    def __init__(self, terms: Optional[Mapping[int, object]] = None, var: str = 'u'):
        self.var = var
        super().__init__(terms)

    @staticmethod
    def _check_key(key) -> int:
        if isinstance(key, bool) or not isinstance(key, int):
            raise TypeError(f"Univariate exponent must be an integer, got {key!r}")
        return key

    @staticmethod
    def _key_add(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def _key_neg(a: int) -> int:
        return -a

    @staticmethod
    def _zero_key() -> int:
        return 0

    def _tag(self) -> str:
        return self.var

    def _from_clean(self, terms: Dict[int, GaussianRational]) -> 'LaurentUni':
        obj = object.__new__(LaurentUni)
        obj.var = self.var
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff=1, var: str = 'u') -> 'LaurentUni':
        return cls({exponent: coeff}, var=var)

    @classmethod
    def constant(cls, value, var: str = 'u') -> 'LaurentUni':
        return cls({0: value}, var=var)

    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def shift(self, k: int) -> 'LaurentUni':
        return self._from_clean({e + k: c for e, c in self._terms.items()})

    def invert(self) -> 'LaurentUni':
        """Substitute var -> var^-1 (q <-> q^-1 on Jones values)."""
        return self._from_clean({-e: c for e, c in self._terms.items()})

    def exact_div(self, divisor: 'LaurentUni') -> 'LaurentUni':
        """Exact quotient self / divisor; raises if the remainder is nonzero."""
        divisor = self._lift(divisor)
        if not divisor:
            raise ZeroDivisionError("Laurent division by zero")
        if not self:
            return self
        # strip the u-adic valuations, then divide ordinary polynomials from the top
        lo_n, lo_d = self.min_degree(), divisor.min_degree()
        remainder = {e - lo_n: c for e, c in self._terms.items()}
        den = {e - lo_d: c for e, c in divisor._terms.items()}
        top_d = max(den)
        lead_inv = den[top_d].inverse()
        quotient: Dict[int, GaussianRational] = {}
        while remainder:
            top = max(remainder)
            if top < top_d:
                raise InexactDivisionError(f"{self} is not divisible by {divisor}")
            factor = remainder[top] * lead_inv
            shift = top - top_d
            quotient[shift] = factor
            for e, c in den.items():
                key = e + shift
                value = remainder.get(key, ZERO) - c * factor
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return self._from_clean(quotient).shift(lo_n - lo_d)

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        return ' + '.join(f"({c})*{self.var}^{e}" for e, c in self.items())

    def __repr__(self) -> str:
        return f"LaurentUni({self.var}: {self})"

    def to_json(self) -> Dict:
        return {
            'var': self.var,
            'terms': [dict(e=e, **c.to_json()) for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'LaurentUni':
        try:
            terms = {int(t['e']): GaussianRational.from_json(t) for t in data['terms']}
            return cls(terms, var=data['var'])
        except (KeyError, TypeError) as e:
            raise InputError(f"Malformed univariate polynomial record: {e}") from e


class LaurentBi(_LaurentBase):
    """Laurent polynomial in (t, z), keyed by (t-exponent, z-exponent)."""

    __slots__ = ()

    @staticmethod
    def _check_key(key) -> Tuple[int, int]:
        et, ez = key
        if not isinstance(et, int) or not isinstance(ez, int):
            raise TypeError(f"Bivariate exponents must be integers, got {key!r}")
        return (et, ez)

    @staticmethod
    def _key_add(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _key_neg(a: Tuple[int, int]) -> Tuple[int, int]:
        return (-a[0], -a[1])

    @staticmethod
    def _zero_key() -> Tuple[int, int]:
        return (0, 0)

    def _tag(self) -> str:
        return 'tz'

    def _from_clean(self, terms: Dict[Tuple[int, int], GaussianRational]) -> 'LaurentBi':
        obj = object.__new__(LaurentBi)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, et: int, ez: int, coeff=1) -> 'LaurentBi':
        return cls({(et, ez): coeff})

    @classmethod
    def constant(cls, value) -> 'LaurentBi':
        return cls({(0, 0): value})

    def exact_div(self, divisor: 'LaurentBi') -> 'LaurentBi':
        """Divide by a monomial; the bivariate ring only ever divides by powers of z."""
        divisor = self._lift(divisor)
        if not divisor.is_monomial():
            raise InexactDivisionError("Bivariate division supports monomial divisors only")
        return self * divisor.monomial_inverse()

    def invert(self, var: str = 't') -> 'LaurentBi':
        if var == 't':
            return self._from_clean({(-et, ez): c for (et, ez), c in self._terms.items()})
        if var == 'z':
            return self._from_clean({(et, -ez): c for (et, ez), c in self._terms.items()})
        raise ValueError(f"Unsupported variable: {var}")

    def mirror(self) -> 'LaurentBi':
        """Substitute t -> t^-1, z -> -z (value of the mirror diagram)."""
        return self._from_clean({
            (-et, ez): (-c if ez % 2 else c) for (et, ez), c in self._terms.items()
        })

    def z_degrees(self) -> Tuple[int, int]:
        if not self._terms:
            return (0, 0)
        zs = [ez for _, ez in self._terms]
        return (min(zs), max(zs))

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        return ' + '.join(f"({c})*t^{et}*z^{ez}" for (et, ez), c in self.items())

    def __repr__(self) -> str:
        return f"LaurentBi({self})"

    def to_json(self) -> Dict:
        return {
            'var': 'tz',
            'terms': [dict(et=et, ez=ez, **c.to_json()) for (et, ez), c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Dict) -> 'LaurentBi':
        try:
            if data.get('var', 'tz') != 'tz':
                raise InputError(f"Unsupported bivariate tag: {data['var']}")
            terms = {(int(t['et']), int(t['ez'])): GaussianRational.from_json(t)
                     for t in data['terms']}
            return cls(terms)
        except (KeyError, TypeError) as e:
            raise InputError(f"Malformed bivariate polynomial record: {e}") from e


Laurent = Union[LaurentUni, LaurentBi]


def laurent_arith(a: Laurent, b: Optional[Laurent], op: str) -> Laurent:
    """Apply a ring operation to two Laurent polynomials of the same kind."""
    if b is not None and type(a) is not type(b):
        raise TypeError(f"Cannot mix {type(a).__name__} with {type(b).__name__}")
    op_methods: Dict[str, Callable[[], Laurent]] = {
        'add': lambda: a + b,
        'sub': lambda: a - b,
        'mul': lambda: a * b,
        'neg': lambda: -a,
    }
    if op not in op_methods:
        raise ValueError(f"Unsupported operation: {op}")
    if op != 'neg' and b is None:
        raise ValueError(f"Operation {op} needs two operands")
    return op_methods[op]()


def t_power(a: int) -> LaurentBi:
    return LaurentBi.monomial(a, 0)


def z_power(b: int) -> LaurentBi:
    return LaurentBi.monomial(0, b)


def unknot_factor() -> LaurentBi:
    """delta = (t - t^-1) z^-1, the generic disjoint-union factor."""
    return LaurentBi({(1, -1): 1, (-1, -1): -1})


def z_uniformized(mn: int) -> LaurentUni:
    """z = q^(1/2) - q^(-1/2) written in u = q^(1/(2 mn))."""
    return LaurentUni({mn: 1, -mn: -1})


def specialize(p: LaurentBi, mn: int) -> LaurentUni:
    """Substitute t = q^(mn/2), z = q^(1/2) - q^(-1/2); result in u = q^(1/(2 mn)).

    t^a z^b maps to u^(a mn^2) (u^mn - u^-mn)^b. Negative z-powers are cleared
    by multiplying through and dividing exactly at the end.
    """
    if not isinstance(p, LaurentBi):
        raise TypeError(f"specialize expects a LaurentBi, got {type(p).__name__}")
    if not isinstance(mn, int) or mn == 0:
        raise ValueError(f"Unsupported M-N for specialization: {mn}")
    if not p:
        return LaurentUni()
    z = z_uniformized(mn)
    z_min = min(0, p.z_degrees()[0])
    powers: Dict[int, LaurentUni] = {}
    numerator = LaurentUni()
    for (et, ez), coeff in p.items():
        k = ez - z_min
        if k not in powers:
            powers[k] = z ** k
        numerator = numerator + powers[k].shift(et * mn * mn).scale(coeff)
    if z_min == 0:
        return numerator
    return numerator.exact_div(z ** (-z_min))


def one_uni(var: str = 'u') -> LaurentUni:
    return LaurentUni({0: ONE}, var=var)
