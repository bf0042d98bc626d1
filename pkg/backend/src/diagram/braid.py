"""Braid words and their closures as link diagrams."""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.diagram.link_diagram import Crossing, LinkDiagram
from src.errors import InputError


@dataclass(frozen=True)
class BraidWord:
    """Letter i is sigma_i on strands i, i+1; -i is its inverse."""

    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(self.letters))
        if isinstance(self.strands, bool) or not isinstance(self.strands, int) or self.strands < 1:
            raise InputError(f"Braid needs a positive strand count, got {self.strands!r}")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise InputError(
                    f"Braid letter {letter} is invalid on {self.strands} strands"
                )

    def __str__(self) -> str:
        return ' '.join(str(x) for x in self.letters)


def parse_braid(text: str, strands: Optional[int] = None) -> BraidWord:
    """Whitespace-separated signed integers; strands default to max |letter| + 1."""
    letters: List[int] = []
    for token in (text or '').split():
        try:
            letters.append(int(token))
        except ValueError:
            raise InputError(f"Unsupported braid letter: {token!r}")
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def braid_closure(word: BraidWord) -> LinkDiagram:
    """Close the braid by joining each bottom position to the same top position."""
    # each position holds ('top', start position) or ('out', pending out label)
    state: List[Tuple[str, int]] = [('top', p) for p in range(word.strands)]
    first_in: Dict[int, int] = {}
    closures: Dict[int, int] = {}
    crossings: List[Crossing] = []

    def attach(position: int, in_label: int):
        kind, value = state[position]
        if kind == 'top':
            first_in[value] = in_label
        else:
            closures[value] = in_label

    for k, letter in enumerate(word.letters):
        crossing = Crossing(1 if letter > 0 else -1, 4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3)
        crossings.append(crossing)
        left = abs(letter) - 1
        if letter > 0:
            attach(left, crossing.ui)
            attach(left + 1, crossing.oi)
            state[left], state[left + 1] = ('out', crossing.oo), ('out', crossing.uo)
        else:
            attach(left, crossing.oi)
            attach(left + 1, crossing.ui)
            state[left], state[left + 1] = ('out', crossing.uo), ('out', crossing.oo)

    free_loops = 0
    for position, (kind, value) in enumerate(state):
        if kind == 'top':
            free_loops += 1
        else:
            closures[value] = first_in[position]
    return LinkDiagram.build(crossings, closures, free_loops)


def closure_of(text: str, strands: Optional[int] = None) -> LinkDiagram:
    return braid_closure(parse_braid(text, strands))
