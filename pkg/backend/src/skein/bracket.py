"""Kauffman bracket state sum, an oracle for the Jones specialization.

<D> = sum over states of A^(a - b) d^(loops - 1) with d = -A^2 - A^-2. The A
smoothing of a positive crossing is the oriented one; a negative crossing
swaps the two.
"""
from itertools import product
from typing import Dict, List, Tuple

from src.diagram.link_diagram import LinkDiagram
from src.errors import CrossingCeilingError
from src.exact_arith.laurent import LaurentUni

BRACKET_MAX_CROSSINGS = 14

ORIENTED_PAIRS = (('ui', 'oo'), ('oi', 'uo'))
UNORIENTED_PAIRS = (('ui', 'oi'), ('uo', 'oo'))


def _smoothing_pairs(sign: int, a_state: bool) -> Tuple[Tuple[str, str], ...]:
    if (sign > 0) == a_state:
        return ORIENTED_PAIRS
    return UNORIENTED_PAIRS


def _count_loops(d: LinkDiagram, states: Tuple[bool, ...]) -> int:
    labels = d.labels()
    parent: Dict[int, int] = {x: x for x in labels}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for out_label, in_label in d.closures:
        union(out_label, in_label)
    for c, a_state in zip(d.crossings, states):
        for r1, r2 in _smoothing_pairs(c.sign, a_state):
            union(c.port(r1), c.port(r2))
    return len({find(x) for x in labels}) + d.free_loops


def kauffman_bracket(d: LinkDiagram) -> LaurentUni:
    """<D> in the variable A, normalized to <O> = 1."""
    if d.crossing_count > BRACKET_MAX_CROSSINGS:
        raise CrossingCeilingError(d.crossing_count, BRACKET_MAX_CROSSINGS)
    loop_value = LaurentUni({2: -1, -2: -1}, var='A')
    total = LaurentUni(var='A')
    powers: List[LaurentUni] = []
    n = d.crossing_count
    for states in product((True, False), repeat=n):
        a = sum(states)
        loops = _count_loops(d, states)
        while len(powers) < loops:
            powers.append(loop_value ** len(powers))
        total = total + powers[loops - 1].shift(a - (n - a))
    return total


def jones_via_bracket(d: LinkDiagram) -> LaurentUni:
    """(-1)^(c-1) (-A^3)^(-w) <D> read in u = A, where q = u^4."""
    bracket = kauffman_bracket(d)
    w = d.writhe()
    sign = -1 if (w + d.component_count() - 1) % 2 else 1
    return LaurentUni({e - 3 * w: c * sign for e, c in bracket.items()})
