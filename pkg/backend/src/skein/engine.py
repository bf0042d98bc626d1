"""Skein recursion by descending diagrams.

Components are walked in order from their base points. The first crossing
that is first met on its under strand is switched and smoothed; a diagram
with no such crossing is descending, hence an unlink. A switched child keeps
the walk of its parent and a smoothed child retraces it up to the smoothed
crossing, so every crossing is resolved at most once along any path.
"""
import logging
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.diagram.link_diagram import SMOOTH_THROUGH, LinkDiagram
from src.errors import CrossingCeilingError, InputError
from src.exact_arith.laurent import LaurentBi, t_power, unknot_factor, z_power
from src.exact_arith.series import EpsSeries
from src.skein.params import SkeinParams, normalize_normalization

DEFAULT_MAX_CROSSINGS = 14
TREE_MAX_CROSSINGS = 10

BasePoints = Tuple[int, ...]


def check_diagram(d: LinkDiagram, ceiling: int):
    if d.component_count() == 0:
        raise InputError("Empty diagram has no components")
    if d.crossing_count > ceiling:
        raise CrossingCeilingError(d.crossing_count, ceiling)


class _DescendingWalk:
    """Start labels, component order and bad-crossing choice shared by every engine.

    A walk is an ordered tuple of start in-labels. Components are visited in
    that order, each from its listed start; components with no listed start
    follow from their default one.
    """

    def base_points(self, d: LinkDiagram) -> BasePoints:
        points = []
        for cycle in d.cycles:
            overs = [label for label in cycle if d.role(label) == 'oi']
            points.append(min(overs) if overs else min(cycle))
        return tuple(points)

    def ordered_cycles(self, d: LinkDiagram, base_points: BasePoints) -> List[Tuple[int, ...]]:
        """Each cycle rotated to start at its base point, in walk order."""
        cycle_of = {label: cycle for cycle in d.cycles for label in cycle}
        rotated, done = [], set()
        for base in tuple(base_points) + self.base_points(d):
            cycle = cycle_of.get(base)
            if cycle is None or cycle in done:
                continue
            done.add(cycle)
            i = cycle.index(base)
            rotated.append(cycle[i:] + cycle[:i])
        return rotated

    def bad_crossings(self, d: LinkDiagram, base_points: BasePoints) -> List[int]:
        first_seen: Dict[int, str] = {}
        bad = []
        for cycle in self.ordered_cycles(d, base_points):
            for label in cycle:
                idx, role = d.owner(label)
                if idx not in first_seen:
                    first_seen[idx] = role
                    if role == 'ui':
                        bad.append(idx)
        return bad

    def smoothed_base_points(self, d: LinkDiagram, c: int, base_points: BasePoints) -> BasePoints:
        """Starts for d.smooth(c) that retrace the walk of d up to crossing c.

        A start on crossing c moves along the smoothed strand to the next
        surviving in-label; a start that closes into a free loop is dropped.
        """
        crossing = d.crossings[c]
        ports = set(crossing.labels())
        starts = []
        for cycle in self.ordered_cycles(d, base_points):
            label, steps = cycle[0], 0
            while label in ports and steps < 2:
                label = d.successor(crossing.port(SMOOTH_THROUGH[d.role(label)]))
                steps += 1
            if label not in ports:
                starts.append(label)
        return tuple(starts)

    def pick(self, bad: List[int]) -> int:
        return bad[0]


class _NaiveWalk(_DescendingWalk):
    """Maximum-label base points, reversed component order, last bad crossing."""

    def base_points(self, d: LinkDiagram) -> BasePoints:
        return tuple(reversed([max(cycle) for cycle in d.cycles]))

    def pick(self, bad: List[int]) -> int:
        return bad[-1]


class HomflyEngine:
    """Memoized HOMFLY evaluation in (t, z): t P+ - t^-1 P- = z P0, P(unknot) = 1."""

    def __init__(self, max_crossings: int = DEFAULT_MAX_CROSSINGS):
        self.max_crossings = max_crossings
        self.logger = logging.getLogger('HomflyEngine')
        self._walk = _DescendingWalk()
        self._memo: Dict[Tuple, LaurentBi] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def homfly(self, d: LinkDiagram, normalization: str = 'unit') -> LaurentBi:
        normalization = normalize_normalization(normalization)
        check_diagram(d, self.max_crossings)
        try:
            value = self._evaluate(d, None)
        except RecursionError as e:
            self.logger.error(f"Skein recursion too deep on {d.crossing_count} crossings: {str(e)}")
            raise
        if normalization == 'paper':
            value = value * unknot_factor()
        return value

    def _lookup(self, key) -> Optional[LaurentBi]:
        with self._lock:
            value = self._memo.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def _store(self, key, value: LaurentBi) -> LaurentBi:
        with self._lock:
            return self._memo.setdefault(key, value)

    def _leaf(self, d: LinkDiagram) -> LaurentBi:
        return unknot_factor() ** (d.component_count() - 1)

    def _evaluate(self, d: LinkDiagram, base_points: Optional[BasePoints]) -> LaurentBi:
        key = d.canonical_key
        cached = self._lookup(key)
        if cached is not None:
            return cached
        if base_points is None:
            base_points = self._walk.base_points(d)
        bad = self._walk.bad_crossings(d, base_points)
        if not bad:
            return self._store(key, self._leaf(d))
        c = self._walk.pick(bad)
        sign = d.crossings[c].sign
        self.logger.debug(f"Branching at crossing {c} (sign {sign:+d}) of {d.crossing_count}")
        switched = self._evaluate(d.switch(c), base_points)
        smoothed = self._evaluate(
            d.smooth(c), self._walk.smoothed_base_points(d, c, base_points))
        if sign > 0:
            value = t_power(-2) * switched + t_power(-1) * z_power(1) * smoothed
        else:
            value = t_power(2) * switched - t_power(1) * z_power(1) * smoothed
        return self._store(key, value)

    def stats(self) -> Dict[str, int]:
        with self._lock:
            return {'memo_size': len(self._memo), 'hits': self.hits, 'misses': self.misses}


class NaiveHomflyEngine:
    """Unmemoized oracle with a different walk; must agree with HomflyEngine."""

    def __init__(self, max_crossings: int = DEFAULT_MAX_CROSSINGS):
        self.max_crossings = max_crossings
        self.logger = logging.getLogger('NaiveHomflyEngine')
        self._walk = _NaiveWalk()

    def homfly(self, d: LinkDiagram, normalization: str = 'unit') -> LaurentBi:
        normalization = normalize_normalization(normalization)
        check_diagram(d, self.max_crossings)
        value = self._evaluate(d, None)
        if normalization == 'paper':
            value = value * unknot_factor()
        return value

    def _evaluate(self, d: LinkDiagram, base_points: Optional[BasePoints]) -> LaurentBi:
        if base_points is None:
            base_points = self._walk.base_points(d)
        bad = self._walk.bad_crossings(d, base_points)
        if not bad:
            return unknot_factor() ** (d.component_count() - 1)
        c = self._walk.pick(bad)
        switched = self._evaluate(d.switch(c), base_points)
        smoothed = self._evaluate(d.smooth(c), None)
        if d.crossings[c].sign > 0:
            return t_power(-2) * switched + t_power(-1) * z_power(1) * smoothed
        return t_power(2) * switched - t_power(1) * z_power(1) * smoothed


class PerturbativeEngine:
    """W in eps-series: beta W+ - beta^-1 W- = z W0, unlink leaves alpha^w (M-N)^k."""

    def __init__(self, params: SkeinParams, max_crossings: int = DEFAULT_MAX_CROSSINGS):
        if params.mode != 'paper-literal':
            raise ValueError(f"PerturbativeEngine needs paper-literal parameters, got {params.mode}")
        self.params = params
        self.max_crossings = max_crossings
        self.logger = logging.getLogger('PerturbativeEngine')
        self._walk = _DescendingWalk()
        self._beta_inv = params.beta.reciprocal()

    def w_series(self, d: LinkDiagram) -> EpsSeries:
        check_diagram(d, self.max_crossings)
        return self._evaluate(d, None)

    def _evaluate(self, d: LinkDiagram, base_points: Optional[BasePoints]) -> EpsSeries:
        p = self.params
        if base_points is None:
            base_points = self._walk.base_points(d)
        bad = self._walk.bad_crossings(d, base_points)
        if not bad:
            return p.alpha ** d.writhe() * (p.delta ** d.component_count())
        c = self._walk.pick(bad)
        switched = self._evaluate(d.switch(c), base_points)
        smoothed = self._evaluate(
            d.smooth(c), self._walk.smoothed_base_points(d, c, base_points))
        if d.crossings[c].sign > 0:
            # W+ = beta^-2 W- + beta^-1 z W0
            return self._beta_inv * self._beta_inv * switched + self._beta_inv * p.z * smoothed
        # W- = beta^2 W+ - beta z W0
        return p.beta * p.beta * switched - p.beta * p.z * smoothed


# skein trees

@dataclass
class SkeinTreeNode:
    diagram: LinkDiagram
    crossing: Optional[int] = None
    sign: Optional[int] = None
    switched: Optional['SkeinTreeNode'] = None
    smoothed: Optional['SkeinTreeNode'] = None
    component_writhes: List[int] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return self.crossing is None

    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return self.switched.leaf_count() + self.smoothed.leaf_count()

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.switched.depth(), self.smoothed.depth())

    def to_json(self) -> Dict:
        node = {
            'crossings': self.diagram.crossing_count,
            'components': self.diagram.component_count(),
            'writhe': self.diagram.writhe(),
        }
        if self.is_leaf:
            node['leaf'] = {
                'descending': True,
                'component_writhes': self.component_writhes,
                'free_loops': self.diagram.free_loops,
            }
            return node
        node['branch'] = {
            'crossing': self.crossing,
            'sign': self.sign,
            'switched': self.switched.to_json(),
            'smoothed': self.smoothed.to_json(),
        }
        return node


def skein_tree(d: LinkDiagram, max_crossings: int = TREE_MAX_CROSSINGS) -> SkeinTreeNode:
    """Full branch tree of the HomflyEngine recursion, without memo collapsing."""
    check_diagram(d, max_crossings)
    walk = _DescendingWalk()

    def build(diagram: LinkDiagram, base_points: Optional[BasePoints]) -> SkeinTreeNode:
        if base_points is None:
            base_points = walk.base_points(diagram)
        bad = walk.bad_crossings(diagram, base_points)
        if not bad:
            return SkeinTreeNode(diagram, component_writhes=diagram.component_writhes())
        c = walk.pick(bad)
        return SkeinTreeNode(
            diagram, crossing=c, sign=diagram.crossings[c].sign,
            switched=build(diagram.switch(c), base_points),
            smoothed=build(diagram.smooth(c), walk.smoothed_base_points(diagram, c, base_points)),
        )

    return build(d, None)


def evaluate_tree(node: SkeinTreeNode) -> LaurentBi:
    """Unit-normalized HOMFLY read off a tree; agrees with HomflyEngine."""
    if node.is_leaf:
        return unknot_factor() ** (node.diagram.component_count() - 1)
    switched, smoothed = evaluate_tree(node.switched), evaluate_tree(node.smoothed)
    if node.sign > 0:
        return t_power(-2) * switched + t_power(-1) * z_power(1) * smoothed
    return t_power(2) * switched - t_power(1) * z_power(1) * smoothed
