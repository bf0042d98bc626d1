"""Exception types shared across the package.

The CLI maps these onto exit codes: InputError -> 2, CrossingCeilingError -> 3.
"""


class InputError(ValueError):
    """Malformed user input: braid text, PD JSON, corpus rows, configuration."""


class MoveError(InputError):
    """A Reidemeister site does not match the requested move."""


class InexactDivisionError(ArithmeticError):
    """Long division left a nonzero remainder."""


class CrossingCeilingError(RuntimeError):
    """A diagram exceeds the configured crossing ceiling."""

    def __init__(self, crossings: int, ceiling: int):
        super().__init__(f"Diagram has {crossings} crossings, ceiling is {ceiling}")
        self.crossings = crossings
        self.ceiling = ceiling
