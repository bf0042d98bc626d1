"""Fundamental representation of su(M|N) on Z2-graded matrices."""
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from src.errors import InputError
from src.exact_arith.scalars import GaussianRational, I, ONE, ZERO, gaussian
from src.superalgebra.context import AlgebraContext

GeneratorKind = Literal['E', 'F', 'H']
_HALF = Fraction(1, 2)


class GradedMatrix:
    """Square matrix of Gaussian rationals with an optional grading tag."""

    __slots__ = ('ctx', 'entries', 'grading')

    def __init__(self, ctx: AlgebraContext, entries: Sequence[Sequence],
                 grading: Optional[int] = None):
        n = ctx.dim
        rows = tuple(tuple(gaussian(x) for x in row) for row in entries)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError(f"Expected a {n}x{n} matrix")
        self.ctx = ctx
        self.entries = rows
        self.grading = grading
        if grading is not None:
            self._check_homogeneous()

    @classmethod
    def _from_rows(cls, ctx: AlgebraContext, rows: Tuple[Tuple[GaussianRational, ...], ...],
                   grading: Optional[int]) -> 'GradedMatrix':
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.entries = rows
        obj.grading = grading
        return obj

    def _check_homogeneous(self):
        gradings = self.ctx.gradings()
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x and (gradings[i] + gradings[j]) & 1 != self.grading:
                    raise ValueError(
                        f"Entry ({i + 1},{j + 1}) breaks homogeneity of grading {self.grading}"
                    )

    @classmethod
    def zero(cls, ctx: AlgebraContext, grading: Optional[int] = 0) -> 'GradedMatrix':
        n = ctx.dim
        return cls._from_rows(ctx, tuple((ZERO,) * n for _ in range(n)), grading)

    @classmethod
    def identity(cls, ctx: AlgebraContext) -> 'GradedMatrix':
        return cls.diagonal(ctx, [ONE] * ctx.dim)

    @classmethod
    def diagonal(cls, ctx: AlgebraContext, values: Sequence) -> 'GradedMatrix':
        n = ctx.dim
        values = [gaussian(v) for v in values]
        rows = tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n))
        return cls._from_rows(ctx, rows, 0)

    @property
    def dim(self) -> int:
        return self.ctx.dim

    def entry(self, a: int, b: int) -> GaussianRational:
        """Entry at 1-based position (a, b)."""
        self.ctx.check_index(a)
        self.ctx.check_index(b)
        return self.entries[a - 1][b - 1]

    def _combine_grading(self, other: 'GradedMatrix') -> Optional[int]:
        if self.grading is not None and self.grading == other.grading:
            return self.grading
        return None

    def _same_space(self, other: 'GradedMatrix'):
        if other.ctx != self.ctx:
            raise ValueError(f"Context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other: 'GradedMatrix') -> 'GradedMatrix':
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._same_space(other)
        rows = tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return GradedMatrix._from_rows(self.ctx, rows, self._combine_grading(other))

    def __neg__(self) -> 'GradedMatrix':
        return GradedMatrix._from_rows(
            self.ctx, tuple(tuple(-x for x in row) for row in self.entries), self.grading
        )

    def __sub__(self, other: 'GradedMatrix') -> 'GradedMatrix':
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> 'GradedMatrix':
        if isinstance(scalar, GradedMatrix):
            raise TypeError("Use @ for matrix products")
        scalar = gaussian(scalar)
        rows = tuple(tuple(x * scalar for x in row) for row in self.entries)
        return GradedMatrix._from_rows(self.ctx, rows, self.grading if scalar else 0)

    __rmul__ = __mul__

    def __matmul__(self, other: 'GradedMatrix') -> 'GradedMatrix':
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._same_space(other)
        n = self.dim
        rows: List[Tuple[GaussianRational, ...]] = []
        for row in self.entries:
            acc = [ZERO] * n
            for k, x in enumerate(row):
                if not x:
                    continue
                for j, y in enumerate(other.entries[k]):
                    if y:
                        acc[j] = acc[j] + x * y
            rows.append(tuple(acc))
        grading = None
        if self.grading is not None and other.grading is not None:
            grading = (self.grading + other.grading) & 1
        return GradedMatrix._from_rows(self.ctx, tuple(rows), grading)

    def conjugate_transpose(self) -> 'GradedMatrix':
        n = self.dim
        rows = tuple(tuple(self.entries[j][i].conjugate() for j in range(n)) for i in range(n))
        return GradedMatrix._from_rows(self.ctx, rows, self.grading)

    def scalar_value(self) -> Optional[GaussianRational]:
        """c when the matrix equals c*I, else None."""
        c = self.entries[0][0]
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x != (c if i == j else ZERO):
                    return None
        return c

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self.entries == other.entries

    __hash__ = None

    def __repr__(self) -> str:
        body = '; '.join(' '.join(str(x) for x in row) for row in self.entries)
        return f"GradedMatrix[{self.ctx.M}|{self.ctx.N}, g={self.grading}]({body})"

    def to_json(self) -> Dict:
        return {
            'M': self.ctx.M,
            'N': self.ctx.N,
            'grading': self.grading,
            'entries': [[x.to_json() for x in row] for row in self.entries],
        }


def matrix_unit(a: int, b: int, ctx: AlgebraContext) -> GradedMatrix:
    """Bare e_ab with a single entry 1."""
    ctx.check_index(a)
    ctx.check_index(b)
    n = ctx.dim
    rows = tuple(
        tuple(ONE if (i == a - 1 and j == b - 1) else ZERO for j in range(n)) for i in range(n)
    )
    return GradedMatrix._from_rows(ctx, rows, ctx.parity(a, b))


def identity(ctx: AlgebraContext) -> GradedMatrix:
    return GradedMatrix.identity(ctx)


def ehat(a: int, b: int, ctx: AlgebraContext) -> GradedMatrix:
    """e_ab - delta_ab (-1)^[a]/(M-N) I, the traceless basis element."""
    unit = matrix_unit(a, b, ctx)
    if a != b:
        return unit
    shift = Fraction(ctx.sigma(a), ctx.mn)
    return unit - GradedMatrix.identity(ctx) * shift


def generators(kind: GeneratorKind, a: int, b: Optional[int], ctx: AlgebraContext) -> GradedMatrix:
    """E_ab = (i/2)(e^_ab - e^_ba), F_ab = (1/2)(e^_ab + e^_ba), H_cc = sum_l l(e^_ll - e^_l+1,l+1)."""
    if kind in ('E', 'F'):
        if b is None or a == b:
            raise InputError(f"{kind} generators need two distinct indices, got ({a}, {b})")
        forward, backward = ehat(a, b, ctx), ehat(b, a, ctx)
        if kind == 'E':
            return (forward - backward) * (I * _HALF)
        return (forward + backward) * _HALF
    if kind == 'H':
        c = a
        if b is not None and b != c:
            raise InputError(f"H generators are diagonal, got ({a}, {b})")
        if not 1 <= c <= ctx.dim - 1:
            raise InputError(f"H index must lie in 1..{ctx.dim - 1}, got {c}")
        total = GradedMatrix.zero(ctx)
        for l in range(1, c + 1):
            total = total + (ehat(l, l, ctx) - ehat(l + 1, l + 1, ctx)) * l
        return total
    raise InputError(f"Unsupported generator kind: {kind}")


def supertrace(X: GradedMatrix) -> GaussianRational:
    total = ZERO
    for i, s in enumerate(X.ctx.signs()):
        x = X.entries[i][i]
        if x:
            total = total + x if s > 0 else total - x
    return total


def supertrace_of_product(X: GradedMatrix, Y: GradedMatrix) -> GaussianRational:
    """Str(XY) without forming the product."""
    total = ZERO
    for i, s in enumerate(X.ctx.signs()):
        acc = ZERO
        for k, x in enumerate(X.entries[i]):
            if x:
                y = Y.entries[k][i]
                if y:
                    acc = acc + x * y
        if acc:
            total = total + acc if s > 0 else total - acc
    return total


def super_bracket(X: GradedMatrix, Y: GradedMatrix) -> GradedMatrix:
    """XY - (-1)^([X][Y]) YX on homogeneous elements."""
    if X.grading is None or Y.grading is None:
        raise InputError("Super bracket needs homogeneous (graded) arguments")
    product = X @ Y
    reverse = Y @ X
    if X.grading and Y.grading:
        return product + reverse
    return product - reverse


def bracket_rhs(a: int, b: int, c: int, d: int, ctx: AlgebraContext) -> GradedMatrix:
    """delta_bc e^_ad - (-1)^(([a]+[b])([c]+[d])) delta_da e^_cb."""
    result = GradedMatrix.zero(ctx, (ctx.parity(a, b) + ctx.parity(c, d)) & 1)
    if b == c:
        result = result + ehat(a, d, ctx)
    if d == a:
        term = ehat(c, b, ctx)
        if ctx.parity(a, b) and ctx.parity(c, d):
            result = result + term
        else:
            result = result - term
    return result
