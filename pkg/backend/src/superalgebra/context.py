from dataclasses import dataclass
from fractions import Fraction
from typing import List

from src.errors import InputError


@dataclass(frozen=True)
class AlgebraContext:
    """su(M|N) with indices 1..M even and M+1..M+N odd."""

    M: int
    N: int

    def __post_init__(self):
        for name, value in (('M', self.M), ('N', self.N)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InputError(f"{name} must be a positive integer, got {value!r}")
        if self.M == self.N:
            raise InputError(f"su(M|N) needs M != N, got M = N = {self.M}")

    @property
    def dim(self) -> int:
        return self.M + self.N

    @property
    def mn(self) -> int:
        """Signed M - N; negative values are allowed."""
        return self.M - self.N

    def check_index(self, a: int):
        if isinstance(a, bool) or not isinstance(a, int) or not 1 <= a <= self.dim:
            raise InputError(f"Index {a!r} outside 1..{self.dim}")

    def indices(self) -> range:
        return range(1, self.dim + 1)

    def grading(self, a: int) -> int:
        self.check_index(a)
        return 0 if a <= self.M else 1

    def sigma(self, a: int) -> int:
        """(-1)^[a]."""
        return 1 if self.grading(a) == 0 else -1

    def parity(self, a: int, b: int) -> int:
        """[a] + [b] mod 2, the grading of e_ab."""
        return (self.grading(a) + self.grading(b)) & 1

    def signs(self) -> List[int]:
        """(-1)^[i] by 0-based position."""
        return [1] * self.M + [-1] * self.N

    def gradings(self) -> List[int]:
        return [0] * self.M + [1] * self.N

    @property
    def inverse_mn(self) -> Fraction:
        return Fraction(1, self.mn)


def grading(a: int, ctx: AlgebraContext) -> int:
    return ctx.grading(a)
