"""Supercommutative polynomials over the Gaussian rationals.

Generators are integers whose low bit is their parity: even ids commute and may
repeat, odd ids anticommute and square to zero. A monomial is stored as the
sorted tuple of its generator ids, so the sign of any product is the parity of
the odd-odd inversions needed to sort the concatenation.

With only odd generators this is a Grassmann algebra, which is how odd
components of su(M|N) fields are modelled. With mixed generators it is the jet
space in which the action density is differentiated.
"""
from bisect import bisect_right
from fractions import Fraction
from itertools import count
from typing import Dict, Mapping, Optional, Tuple

from src.exact_arith.scalars import GaussianRational, ZERO, gaussian

Monomial = Tuple[int, ...]
_Scalar = (int, Fraction, GaussianRational)


def is_odd(generator: int) -> bool:
    return bool(generator & 1)


def _merge(a: Monomial, b: Monomial) -> Optional[Tuple[int, Monomial]]:
    if not a:
        return 1, b
    if not b:
        return 1, a
    odd_a = [x for x in a if x & 1]
    odd_b = [y for y in b if y & 1]
    inversions = 0
    if odd_a and odd_b:
        if not set(odd_a).isdisjoint(odd_b):
            return None
        for y in odd_b:
            inversions += len(odd_a) - bisect_right(odd_a, y)
    return (-1 if inversions & 1 else 1), tuple(sorted(a + b))


class SuperPolynomial:
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, GaussianRational] = {}
        for key, coeff in (terms or {}).items():
            coeff = gaussian(coeff)
            if not coeff:
                continue
            odd = [g for g in key if g & 1]
            if len(odd) != len(set(odd)):
                continue
            # a key is read as a written product; sorting it costs the odd inversions
            inversions = sum(1 for i, x in enumerate(odd) for y in odd[i + 1:] if x > y)
            if inversions & 1:
                coeff = -coeff
            key = tuple(sorted(key))
            clean[key] = clean.get(key, ZERO) + coeff
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, GaussianRational]) -> 'SuperPolynomial':
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def generator(cls, gid: int, coeff=1) -> 'SuperPolynomial':
        return cls._from_clean({(gid,): gaussian(coeff)} if coeff else {})

    @classmethod
    def constant(cls, value) -> 'SuperPolynomial':
        value = gaussian(value)
        return cls._from_clean({(): value} if value else {})

    @property
    def terms(self) -> Dict[Monomial, GaussianRational]:
        return dict(self._terms)

    def _lift(self, other):
        if isinstance(other, SuperPolynomial):
            return other
        if isinstance(other, _Scalar):
            return SuperPolynomial.constant(other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            total = out.get(key, ZERO) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return SuperPolynomial._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> 'SuperPolynomial':
        return SuperPolynomial._from_clean({k: -c for k, c in self._terms.items()})

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

    def scale(self, factor) -> 'SuperPolynomial':
        factor = gaussian(factor)
        if not factor:
            return SuperPolynomial._from_clean({})
        return SuperPolynomial._from_clean({k: c * factor for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, GaussianRational] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                merged = _merge(ka, kb)
                if merged is None:
                    continue
                sign, key = merged
                value = ca * cb
                out[key] = out.get(key, ZERO) + (value if sign > 0 else -value)
        return SuperPolynomial._from_clean({k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        # scalars are even, so left and right multiplication agree
        if isinstance(other, _Scalar):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return 'SuperPolynomial(0)'
        body = ' + '.join(f"({c})*{list(k)}" for k, c in sorted(self._terms.items()))
        return f"SuperPolynomial({body})"

    def parities(self) -> set:
        return {sum(g & 1 for g in key) & 1 for key in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.parities()) <= 1

    def generators(self) -> set:
        return {g for key in self._terms for g in key}

    def derivative(self, gid: int) -> 'SuperPolynomial':
        """Left derivative: move the generator to the front, then strip it."""
        out: Dict[Monomial, GaussianRational] = {}
        for key, coeff in self._terms.items():
            if gid not in key:
                continue
            idx = key.index(gid)
            if gid & 1:
                odd_before = sum(g & 1 for g in key[:idx])
                value = -coeff if odd_before & 1 else coeff
            else:
                value = coeff * key.count(gid)
            reduced = key[:idx] + key[idx + 1:]
            out[reduced] = out.get(reduced, ZERO) + value
        return SuperPolynomial._from_clean({k: c for k, c in out.items() if c})

    def substitute(self, values: Mapping[int, object], zero, one):
        """Replace every generator by a value of matching parity.

        Factors are multiplied in sorted-key order, which is the order the
        monomial was normalized to, so the target algebra must be
        supercommutative with the same parities.
        """
        result = zero
        for key, coeff in self._terms.items():
            term = one
            for gid in key:
                term = term * values[gid]
            result = result + term * coeff
        return result


class GeneratorPool:
    """Hands out fresh generator ids of a requested parity."""

    def __init__(self, start: int = 0):
        self._counter = count(start)

    def odd(self) -> int:
        return 2 * next(self._counter) + 1

    def even(self) -> int:
        return 2 * next(self._counter)

    def fresh(self, parity: int) -> int:
        return self.odd() if parity else self.even()


def grassmann_value(coeff, pool: GeneratorPool, parity: int) -> SuperPolynomial:
    """coeff as an even number, or coeff * theta_new when the slot is odd."""
    if parity:
        return SuperPolynomial.generator(pool.odd(), coeff)
    return SuperPolynomial.constant(coeff)
