"""Reidemeister moves on arc-closure diagrams.

R1+ raises the writhe by one (a positive curl appears or a negative curl goes
away) and R1- lowers it by one. R2 inserts a canceling pair by pushing a finger
of one arc over another across a face corner, or removes a bigon whose arcs
run over-over and under-under. R3 slides a strand across a triangle whose arcs
are over-over, under-under and mixed.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple, Union

from src.diagram.link_diagram import (
    IDENTITY_THROUGH, IN_ROLES, OUT_ROLES, OVER_ROLES, ROTATION, Crossing, LinkDiagram,
)
from src.errors import MoveError

MOVES = ('R1+', 'R1-', 'R2', 'R3')

logger = logging.getLogger('Reidemeister')


@dataclass(frozen=True)
class ArcSite:
    """Curl insertion on the arc leaving ``arc``."""
    arc: int
    over_first: bool = True


@dataclass(frozen=True)
class FreeLoopSite:
    """Curl insertion on a crossingless circle."""


@dataclass(frozen=True)
class CrossingSite:
    """Curl removal at crossing ``crossing``."""
    crossing: int


@dataclass(frozen=True)
class CornerSite:
    """Finger of the arc at ``over_port`` pushed over the arc at ``under_port``.

    Both ports belong to one crossing and are neighbours in its rotation.
    """
    under_port: int
    over_port: int


@dataclass(frozen=True)
class BigonSite:
    first: int
    second: int


@dataclass(frozen=True)
class TriangleSite:
    """Arcs (named by their out ports) bounding a triangular face."""
    arcs: Tuple[int, int, int]


Site = Union[ArcSite, FreeLoopSite, CrossingSite, CornerSite, BigonSite, TriangleSite]


def normalize_move(move: str) -> str:
    move = (move or '').replace('−', '-').strip().upper()
    if move not in MOVES:
        raise MoveError(f"Unsupported move: {move}")
    return move


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _cross(a: Tuple[int, int], b: Tuple[int, int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


# site scans

def curl_crossings(d: LinkDiagram) -> List[int]:
    out = []
    for idx, c in enumerate(d.crossings):
        if d.successor(c.oo) == c.ui or d.successor(c.uo) == c.oi:
            out.append(idx)
    return out


def _arc_roles(d: LinkDiagram, out_label: int) -> Tuple[Tuple[int, str], Tuple[int, str]]:
    return d.owner(out_label), d.owner(d.successor(out_label))


def _arc_kind(d: LinkDiagram, out_label: int) -> str:
    (_, r1), (_, r2) = _arc_roles(d, out_label)
    over = (r1 in OVER_ROLES, r2 in OVER_ROLES)
    if all(over):
        return 'over'
    if not any(over):
        return 'under'
    return 'mixed'


def bigon_sites(d: LinkDiagram) -> List[BigonSite]:
    sites = []
    for face in d.faces:
        if len(face) != 2:
            continue
        arcs = [d.arc_of(p) for p in face]
        if arcs[0] == arcs[1]:
            continue
        ends = [{d.owner(a)[0], d.owner(d.successor(a))[0]} for a in arcs]
        if ends[0] != ends[1] or len(ends[0]) != 2:
            continue
        if sorted(_arc_kind(d, a) for a in arcs) != ['over', 'under']:
            continue
        first, second = sorted(ends[0])
        if d.crossings[first].sign == d.crossings[second].sign:
            continue
        site = BigonSite(first, second)
        if site not in sites:
            sites.append(site)
    return sites


def corner_sites(d: LinkDiagram) -> List[CornerSite]:
    sites = []
    for c in d.crossings:
        order = ROTATION[c.sign]
        for i, role in enumerate(order):
            a, b = c.port(role), c.port(order[(i + 1) % 4])
            if d.arc_of(a) == d.arc_of(b):
                continue
            sites.append(CornerSite(under_port=a, over_port=b))
            sites.append(CornerSite(under_port=b, over_port=a))
    return sites


def triangle_sites(d: LinkDiagram) -> List[TriangleSite]:
    sites = []
    for face in d.faces:
        if len(face) != 3:
            continue
        arcs = tuple(d.arc_of(p) for p in face)
        if len(set(arcs)) != 3 or len({d.owner(p)[0] for p in face}) != 3:
            continue
        if sorted(_arc_kind(d, a) for a in arcs) != ['mixed', 'over', 'under']:
            continue
        sites.append(TriangleSite(tuple(sorted(arcs))))
    return sites


def find_sites(d: LinkDiagram, move: str) -> List[Site]:
    """Every site where ``move`` applies, in a deterministic order."""
    move = normalize_move(move)
    if move in ('R1+', 'R1-'):
        remove_sign = -1 if move == 'R1+' else 1
        sites: List[Site] = [ArcSite(arc, flag) for arc, _ in d.closures for flag in (True, False)]
        if d.free_loops:
            sites.append(FreeLoopSite())
        sites.extend(CrossingSite(idx) for idx in curl_crossings(d)
                     if d.crossings[idx].sign == remove_sign)
        return sites
    if move == 'R2':
        return [*bigon_sites(d), *corner_sites(d)]
    return list(triangle_sites(d))


# moves

def _curl_move(d: LinkDiagram, site: Site, sign: int) -> LinkDiagram:
    if isinstance(site, CrossingSite):
        d.check_index(site.crossing)
        if site.crossing not in curl_crossings(d):
            raise MoveError(f"Crossing {site.crossing} is not a curl")
        if d.crossings[site.crossing].sign != -sign:
            raise MoveError(
                f"Removing crossing {site.crossing} would not change the writhe by {sign:+d}"
            )
        return d.reconnect({site.crossing}, IDENTITY_THROUGH)
    base = d.fresh_label()
    curl = Crossing(sign, base, base + 1, base + 2, base + 3)
    closures = dict(d.closures)
    if isinstance(site, FreeLoopSite):
        if not d.free_loops:
            raise MoveError("No free loop to put a curl on")
        closures[curl.oo] = curl.ui
        closures[curl.uo] = curl.oi
        return LinkDiagram.build(d.crossings + (curl,), closures, d.free_loops - 1)
    if isinstance(site, ArcSite):
        if site.arc not in closures:
            raise MoveError(f"No arc leaves port {site.arc}")
        target = closures[site.arc]
        if site.over_first:
            closures[site.arc] = curl.oi
            closures[curl.oo] = curl.ui
            closures[curl.uo] = target
        else:
            closures[site.arc] = curl.ui
            closures[curl.uo] = curl.oi
            closures[curl.oo] = target
        return LinkDiagram.build(d.crossings + (curl,), closures, d.free_loops)
    raise MoveError(f"Site {site} does not admit an R1 move")


def _r2_remove(d: LinkDiagram, site: BigonSite) -> LinkDiagram:
    if site not in bigon_sites(d):
        raise MoveError(f"Crossings {site.first} and {site.second} do not bound a removable bigon")
    return d.reconnect({site.first, site.second}, IDENTITY_THROUGH)


def _r2_insert(d: LinkDiagram, site: CornerSite) -> LinkDiagram:
    if site not in corner_sites(d):
        raise MoveError(f"Ports {site.under_port} and {site.over_port} do not form a corner")
    x, y = site.under_port, site.over_port
    e_x, e_y = d.port_vector(x), d.port_vector(y)
    x_out, y_out = d.is_out(x), d.is_out(y)
    normal = (-e_x[1], e_x[0])
    side = _sign(e_y[0] * normal[0] + e_y[1] * normal[1])
    dir_x = e_x if x_out else (-e_x[0], -e_x[1])
    s = side if y_out else -side
    dir_y_far = (s * normal[0], s * normal[1])
    sign_far = _sign(_cross(dir_y_far, dir_x))

    base = d.fresh_label()
    near = Crossing(-sign_far, base, base + 1, base + 2, base + 3)
    far = Crossing(sign_far, base + 4, base + 5, base + 6, base + 7)
    closures = dict(d.closures)

    def thread(port: int, port_is_out: bool, in_role: str, out_role: str):
        arc = d.arc_of(port)
        target = closures[arc]
        first, second = (near, far) if port_is_out else (far, near)
        closures[arc] = first.port(in_role)
        closures[first.port(out_role)] = second.port(in_role)
        closures[second.port(out_role)] = target

    thread(x, x_out, 'ui', 'uo')
    thread(y, y_out, 'oi', 'oo')
    return LinkDiagram.build(d.crossings + (near, far), closures, d.free_loops)


def _r3(d: LinkDiagram, site: TriangleSite) -> LinkDiagram:
    if site not in triangle_sites(d):
        raise MoveError(f"Arcs {site.arcs} do not bound an R3 triangle")
    signs, sequences = d.pass_sequences()
    position: Dict[int, Tuple[int, int]] = {}
    for comp, cycle in enumerate(d.cycles):
        for pos, label in enumerate(cycle):
            position[label] = (comp, pos)
    for arc in site.arcs:
        comp, pos = position[d.successor(arc)]
        seq = sequences[comp]
        prev = (pos - 1) % len(seq)
        seq[prev], seq[pos] = seq[pos], seq[prev]
    return LinkDiagram.from_sequences(signs, sequences, d.free_loops)


def _r2(d: LinkDiagram, site: Site) -> LinkDiagram:
    if isinstance(site, BigonSite):
        return _r2_remove(d, site)
    if isinstance(site, CornerSite):
        return _r2_insert(d, site)
    raise MoveError(f"Site {site} does not admit an R2 move")


def _r3_dispatch(d: LinkDiagram, site: Site) -> LinkDiagram:
    if not isinstance(site, TriangleSite):
        raise MoveError(f"Site {site} does not admit an R3 move")
    return _r3(d, site)


def reidemeister(d: LinkDiagram, move: str, site: Site) -> LinkDiagram:
    move = normalize_move(move)
    move_methods: Dict[str, Callable[[], LinkDiagram]] = {
        'R1+': lambda: _curl_move(d, site, 1),
        'R1-': lambda: _curl_move(d, site, -1),
        'R2': lambda: _r2(d, site),
        'R3': lambda: _r3_dispatch(d, site),
    }
    return move_methods[move]()


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Greedy curl and bigon removal until neither applies."""
    steps = 0
    while True:
        curls = curl_crossings(d)
        if curls:
            d = d.reconnect({curls[0]}, IDENTITY_THROUGH)
        else:
            bigons = bigon_sites(d)
            if not bigons:
                break
            d = d.reconnect({bigons[0].first, bigons[0].second}, IDENTITY_THROUGH)
        steps += 1
    logger.debug(f"simplify applied {steps} reducing moves")
    return d
