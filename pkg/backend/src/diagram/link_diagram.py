"""Oriented link diagrams stored as crossings plus an arc closure map.

Every crossing owns four port labels: under-in (ui), under-out (uo), over-in
(oi) and over-out (oo). An arc runs from an out port to an in port, and the
closure map lists every arc as (out, in). Crossingless circles are only
counted (``free_loops``).

The planar embedding is implied by the crossing signs. Counter-clockwise the
ports sit in the order oo, uo, oi, ui at a positive crossing and oo, ui, oi, uo
at a negative one; face tracing under this rotation system has to give
crossings + 2 faces for every connected piece.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.errors import InputError

ROLES = ('ui', 'uo', 'oi', 'oo')
IN_ROLES = ('ui', 'oi')
OUT_ROLES = ('uo', 'oo')
OVER_ROLES = ('oi', 'oo')

IDENTITY_THROUGH = {'ui': 'uo', 'oi': 'oo'}
SMOOTH_THROUGH = {'ui': 'oo', 'oi': 'uo'}

ROTATION = {
    1: ('oo', 'uo', 'oi', 'ui'),
    -1: ('oo', 'ui', 'oi', 'uo'),
}
PORT_VECTORS = {
    1: {'oo': (1, 1), 'uo': (-1, 1), 'oi': (-1, -1), 'ui': (1, -1)},
    -1: {'uo': (1, 1), 'oo': (-1, 1), 'ui': (-1, -1), 'oi': (1, -1)},
}

Pass = Tuple[int, str]
_SEPARATOR = (-1, -1, 0)


@dataclass(frozen=True)
class Crossing:
    sign: int
    ui: int
    uo: int
    oi: int
    oo: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InputError(f"Crossing sign must be +1 or -1, got {self.sign!r}")
        labels = self.labels()
        if any(isinstance(x, bool) or not isinstance(x, int) for x in labels):
            raise InputError(f"Crossing labels must be integers, got {labels}")
        if len(set(labels)) != 4:
            raise InputError(f"Crossing labels must be distinct, got {labels}")

    def labels(self) -> Tuple[int, int, int, int]:
        return self.ui, self.uo, self.oi, self.oo

    def port(self, role: str) -> int:
        return getattr(self, role)

    def switched(self) -> 'Crossing':
        # labels stay on their strands, so the strand that was over becomes under
        return Crossing(-self.sign, ui=self.oi, uo=self.oo, oi=self.ui, oo=self.uo)

    def shifted(self, offset: int) -> 'Crossing':
        return Crossing(self.sign, self.ui + offset, self.uo + offset,
                        self.oi + offset, self.oo + offset)

    def to_json(self) -> Dict:
        return {'sign': self.sign, 'ui': self.ui, 'uo': self.uo, 'oi': self.oi, 'oo': self.oo}


@dataclass(frozen=True)
class LinkDiagram:
    crossings: Tuple[Crossing, ...] = ()
    closures: Tuple[Tuple[int, int], ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'crossings', tuple(self.crossings))
        object.__setattr__(self, 'closures', tuple(sorted((int(a), int(b)) for a, b in self.closures)))
        if isinstance(self.free_loops, bool) or not isinstance(self.free_loops, int) or self.free_loops < 0:
            raise InputError(f"free_loops must be a non-negative integer, got {self.free_loops!r}")
        self._validate_structure()

    @classmethod
    def build(cls, crossings: Iterable[Crossing], closures: Mapping[int, int],
              free_loops: int = 0) -> 'LinkDiagram':
        return cls(tuple(crossings), tuple(closures.items()), free_loops)

    def _validate_structure(self):
        outs, ins = set(), set()
        seen = set()
        for c in self.crossings:
            for label in c.labels():
                if label in seen:
                    raise InputError(f"Port label {label} is used twice")
                seen.add(label)
            ins.update((c.ui, c.oi))
            outs.update((c.uo, c.oo))
        sources = [a for a, _ in self.closures]
        targets = [b for _, b in self.closures]
        if len(set(sources)) != len(sources) or set(sources) != outs:
            raise InputError("Closures must start exactly once at every out port")
        if len(set(targets)) != len(targets) or set(targets) != ins:
            raise InputError("Closures must end exactly once at every in port")

    # lookups

    @cached_property
    def _owner(self) -> Dict[int, Tuple[int, str]]:
        return {c.port(role): (idx, role) for idx, c in enumerate(self.crossings) for role in ROLES}

    @cached_property
    def _next(self) -> Dict[int, int]:
        return dict(self.closures)

    @cached_property
    def _prev(self) -> Dict[int, int]:
        return {b: a for a, b in self.closures}

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def labels(self) -> List[int]:
        return [x for c in self.crossings for x in c.labels()]

    def fresh_label(self) -> int:
        return max(self.labels(), default=-1) + 1

    def owner(self, label: int) -> Tuple[int, str]:
        if label not in self._owner:
            raise InputError(f"Unknown port label {label}")
        return self._owner[label]

    def role(self, label: int) -> str:
        return self.owner(label)[1]

    def is_out(self, label: int) -> bool:
        return self.role(label) in OUT_ROLES

    def successor(self, out_label: int) -> int:
        return self._next[out_label]

    def predecessor(self, in_label: int) -> int:
        return self._prev[in_label]

    def other_end(self, label: int) -> int:
        """Port at the far end of the arc through ``label``."""
        return self._next[label] if self.is_out(label) else self._prev[label]

    def arc_of(self, label: int) -> int:
        """Arcs are named by their out port."""
        return label if self.is_out(label) else self._prev[label]

    def through(self, in_label: int) -> int:
        idx, role = self._owner[in_label]
        return self.crossings[idx].port(IDENTITY_THROUGH[role])

    def ccw_next(self, label: int) -> int:
        idx, role = self._owner[label]
        crossing = self.crossings[idx]
        order = ROTATION[crossing.sign]
        return crossing.port(order[(order.index(role) + 1) % 4])

    def port_vector(self, label: int) -> Tuple[int, int]:
        idx, role = self._owner[label]
        return PORT_VECTORS[self.crossings[idx].sign][role]

    def check_index(self, c: int):
        if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < len(self.crossings):
            raise InputError(f"Crossing index {c!r} outside 0..{len(self.crossings) - 1}")

    # global structure

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    @cached_property
    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        """In-port sequence of every crossing component, each from its minimum in-label."""
        seen = set()
        out = []
        for start in sorted(self._prev):
            if start in seen:
                continue
            cycle = []
            label = start
            while label not in seen:
                seen.add(label)
                cycle.append(label)
                label = self._next[self.through(label)]
            out.append(tuple(cycle))
        return tuple(out)

    def component_count(self) -> int:
        return len(self.cycles) + self.free_loops

    def component_writhes(self) -> List[int]:
        """Self-crossing writhe of each crossing component, in cycle order."""
        result = []
        for cycle in self.cycles:
            members = {self._owner[label][0] for label in cycle}
            own = [idx for idx in members
                   if {self.crossings[idx].ui, self.crossings[idx].oi} <= set(cycle)]
            result.append(sum(self.crossings[idx].sign for idx in own))
        return result

    @cached_property
    def pieces(self) -> Tuple[Tuple[int, ...], ...]:
        """Crossing indices of every connected piece of the projection."""
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.closures:
            ra, rb = find(self._owner[a][0]), find(self._owner[b][0])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: Dict[int, List[int]] = {}
        for idx in range(len(self.crossings)):
            groups.setdefault(find(idx), []).append(idx)
        return tuple(tuple(g) for _, g in sorted(groups.items()))

    @cached_property
    def faces(self) -> Tuple[Tuple[int, ...], ...]:
        """Port cycles of p -> ccw_next(other_end(p))."""
        seen = set()
        out = []
        for start in sorted(self._owner):
            if start in seen:
                continue
            face = []
            label = start
            while label not in seen:
                seen.add(label)
                face.append(label)
                label = self.ccw_next(self.other_end(label))
            out.append(tuple(face))
        return tuple(out)

    def is_planar(self) -> bool:
        faces_per_piece: Dict[int, int] = {}
        piece_of = {idx: p for p, members in enumerate(self.pieces) for idx in members}
        for face in self.faces:
            piece = piece_of[self._owner[face[0]][0]]
            faces_per_piece[piece] = faces_per_piece.get(piece, 0) + 1
        return all(faces_per_piece.get(p, 0) == len(members) + 2
                   for p, members in enumerate(self.pieces))

    def validate(self) -> 'LinkDiagram':
        if not self.is_planar():
            raise InputError("Diagram is not planar under its crossing signs")
        return self

    # local operations

    def switch(self, c: int) -> 'LinkDiagram':
        self.check_index(c)
        crossings = list(self.crossings)
        crossings[c] = crossings[c].switched()
        return LinkDiagram(tuple(crossings), self.closures, self.free_loops)

    def smooth(self, c: int) -> 'LinkDiagram':
        """Oriented smoothing: ui joins oo, oi joins uo."""
        self.check_index(c)
        return self.reconnect({c}, SMOOTH_THROUGH)

    def reconnect(self, removed: Iterable[int], through: Mapping[str, str]) -> 'LinkDiagram':
        """Delete crossings, joining each removed in port to the out port ``through`` names."""
        removed = set(removed)
        jump: Dict[int, int] = {}
        dropped = set()
        for idx in removed:
            crossing = self.crossings[idx]
            dropped.update(crossing.labels())
            for r_in, r_out in through.items():
                jump[crossing.port(r_in)] = crossing.port(r_out)
        closures: Dict[int, int] = {}
        reached = set()
        for out_label, in_label in self.closures:
            if out_label in dropped:
                continue
            target = in_label
            while target in jump:
                reached.add(target)
                target = self._next[jump[target]]
            closures[out_label] = target
        loops = 0
        for start in sorted(jump):
            if start in reached:
                continue
            loops += 1
            label = start
            while label not in reached:
                reached.add(label)
                label = self._next[jump[label]]
        kept = [c for idx, c in enumerate(self.crossings) if idx not in removed]
        return LinkDiagram.build(kept, closures, self.free_loops + loops)

    def mirror(self) -> 'LinkDiagram':
        return LinkDiagram(tuple(c.switched() for c in self.crossings), self.closures, self.free_loops)

    def shifted(self, offset: int) -> 'LinkDiagram':
        return LinkDiagram(
            tuple(c.shifted(offset) for c in self.crossings),
            tuple((a + offset, b + offset) for a, b in self.closures),
            self.free_loops,
        )

    def disjoint_union(self, other: 'LinkDiagram') -> 'LinkDiagram':
        labels = other.labels()
        offset = self.fresh_label() - min(labels) if labels else 0
        moved = other.shifted(offset)
        return LinkDiagram(self.crossings + moved.crossings, self.closures + moved.closures,
                           self.free_loops + other.free_loops)

    # pass sequences

    def pass_sequences(self) -> Tuple[Tuple[int, ...], List[List[Pass]]]:
        """Crossing signs and, per component, the (crossing, 'o'|'u') passes in order."""
        sequences = []
        for cycle in self.cycles:
            sequences.append([
                (self._owner[label][0], 'o' if self._owner[label][1] == 'oi' else 'u')
                for label in cycle
            ])
        return tuple(c.sign for c in self.crossings), sequences

    @classmethod
    def from_sequences(cls, signs: Sequence[int], sequences: Sequence[Sequence[Pass]],
                       free_loops: int = 0) -> 'LinkDiagram':
        counts: Dict[Pass, int] = {}
        for seq in sequences:
            for crossing, role in seq:
                if role not in ('o', 'u') or not 0 <= crossing < len(signs):
                    raise InputError(f"Bad pass ({crossing}, {role!r})")
                counts[(crossing, role)] = counts.get((crossing, role), 0) + 1
        for idx in range(len(signs)):
            if counts.get((idx, 'o')) != 1 or counts.get((idx, 'u')) != 1:
                raise InputError(f"Crossing {idx} must be passed once over and once under")
        crossings = [Crossing(s, 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3) for i, s in enumerate(signs)]

        def in_label(p: Pass) -> int:
            return 4 * p[0] + (2 if p[1] == 'o' else 0)

        closures = {}
        for seq in sequences:
            for i, current in enumerate(seq):
                following = seq[(i + 1) % len(seq)]
                closures[in_label(current) + 1] = in_label(following)
        return cls.build(crossings, closures, free_loops)

    # canonical form

    def _walk_code(self, start: int) -> Tuple:
        numbering: Dict[int, int] = {}
        visited = set()
        code = []
        label: Optional[int] = start
        while label is not None:
            while label not in visited:
                visited.add(label)
                idx, role = self._owner[label]
                if idx not in numbering:
                    numbering[idx] = len(numbering)
                code.append((numbering[idx], 0 if role == 'oi' else 1, self.crossings[idx].sign))
                label = self._next[self.through(label)]
            code.append(_SEPARATOR)
            label = None
            for idx in sorted(numbering, key=numbering.get):
                crossing = self.crossings[idx]
                pending = [x for x in (crossing.oi, crossing.ui) if x not in visited]
                if pending:
                    label = pending[0]
                    break
        return tuple(code)

    @cached_property
    def canonical_key(self) -> Tuple:
        """Invariant under relabeling and reordering of crossings and components."""
        codes = []
        for piece in self.pieces:
            starts = [self.crossings[idx].port(role) for idx in piece for role in IN_ROLES]
            codes.append(min(self._walk_code(s) for s in starts))
        return tuple(sorted(codes)), self.free_loops

    # serialization

    def to_json(self) -> Dict:
        return {
            'crossings': [c.to_json() for c in self.crossings],
            'closures': [[a, b] for a, b in self.closures],
            'free_loops': self.free_loops,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> 'LinkDiagram':
        try:
            crossings = [
                Crossing(int(c['sign']), int(c['ui']), int(c['uo']), int(c['oi']), int(c['oo']))
                for c in data.get('crossings', [])
            ]
            closures = [(int(a), int(b)) for a, b in data.get('closures', [])]
            free_loops = int(data.get('free_loops', 0))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Malformed diagram JSON: {str(e)}")
        return cls(tuple(crossings), tuple(closures), free_loops).validate()


def unknot(loops: int = 1) -> LinkDiagram:
    return LinkDiagram(free_loops=loops)


def writhe(d: LinkDiagram) -> int:
    return d.writhe()


def switch_crossing(d: LinkDiagram, c: int) -> LinkDiagram:
    return d.switch(c)


def smooth_crossing(d: LinkDiagram, c: int) -> LinkDiagram:
    return d.smooth(c)


def component_count(d: LinkDiagram) -> int:
    return d.component_count()


def mirror(d: LinkDiagram) -> LinkDiagram:
    return d.mirror()


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    return d1.disjoint_union(d2)


def canonical_key(d: LinkDiagram) -> Tuple:
    return d.canonical_key
