"""Invariant front door: HOMFLY, the W form, Jones and the q-form HOMFLY."""
import logging
import random
from typing import Dict, List, Optional, Union

from src.diagram.link_diagram import LinkDiagram
from src.diagram.reidemeister import CornerSite, CrossingSite, MOVES, find_sites, reidemeister
from src.errors import InputError
from src.exact_arith.laurent import LaurentBi, LaurentUni, specialize, t_power, z_power
from src.exact_arith.series import EpsSeries
from src.report import IdentityResult
from src.skein.engine import HomflyEngine, PerturbativeEngine
from src.skein.params import SkeinParams, make_params

JONES_MN = 2
SKEIN_ENGINES = ('homfly', 'w', 'jones')

logger = logging.getLogger('Invariants')

_default_engine = HomflyEngine()


def default_engine() -> HomflyEngine:
    return _default_engine


def homfly(d: LinkDiagram, normalization: str = 'unit',
           engine: Optional[HomflyEngine] = None) -> LaurentBi:
    return (engine or _default_engine).homfly(d, normalization)


def w_invariant(d: LinkDiagram, params: SkeinParams,
                engine: Optional[HomflyEngine] = None) -> Union[LaurentUni, EpsSeries]:
    """alpha^writhe times the HOMFLY with unknot value delta, specialized to M-N.

    paper-literal parameters go through the eps-series engine instead.
    """
    if params.mode == 'paper-literal':
        return PerturbativeEngine(params, (engine or _default_engine).max_crossings).w_series(d)
    p = specialize(homfly(d, 'paper', engine), params.mn)
    return params.alpha ** d.writhe() * p


def homfly_q(d: LinkDiagram, params: SkeinParams,
             engine: Optional[HomflyEngine] = None) -> LaurentUni:
    return specialize(homfly(d, params.normalization, engine), params.mn)


def jones(d: LinkDiagram, engine: Optional[HomflyEngine] = None) -> LaurentUni:
    """HOMFLY at t = q, z = q^(1/2) - q^(-1/2), in u = q^(1/4)."""
    return specialize(homfly(d, 'unit', engine), JONES_MN)


def _skein_triple(d: LinkDiagram, c: int):
    d.check_index(c)
    switched = d.switch(c)
    if d.crossings[c].sign > 0:
        return d, switched, d.smooth(c)
    return switched, d, d.smooth(c)


def verify_skein(d: LinkDiagram, c: int, engine: str = 'homfly',
                 params: Optional[SkeinParams] = None,
                 homfly_engine: Optional[HomflyEngine] = None) -> bool:
    """Evaluate L+, L- and L0 at crossing c separately and check the relation exactly.

    paper-literal W is checked to first order in eps only.
    """
    if engine not in SKEIN_ENGINES:
        raise InputError(f"Unsupported skein engine: {engine}")
    plus, minus, zero = _skein_triple(d, c)
    if engine == 'homfly':
        values = [homfly(x, 'unit', homfly_engine) for x in (plus, minus, zero)]
        lhs = t_power(1) * values[0] - t_power(-1) * values[1]
        return lhs == z_power(1) * values[2]
    if engine == 'jones':
        jp = make_params(JONES_MN + 1, 1)
        values = [jones(x, homfly_engine) for x in (plus, minus, zero)]
        return jp.t * values[0] - jp.t.invert() * values[1] == jp.z * values[2]
    if params is None:
        raise InputError("The w engine needs skein parameters")
    values = [w_invariant(x, params, homfly_engine) for x in (plus, minus, zero)]
    if params.mode == 'paper-literal':
        beta_inv = params.beta.reciprocal()
        lhs = params.beta * values[0] - beta_inv * values[1]
        return lhs.agrees_with(params.z * values[2], 1)
    return params.beta * values[0] - params.beta.invert() * values[1] == params.z * values[2]


def reidemeister_audit(diagrams: List[LinkDiagram], moves: int, params: SkeinParams,
                       rng: Optional[random.Random] = None, max_crossings: int = 9,
                       engine: Optional[HomflyEngine] = None) -> List[IdentityResult]:
    """Random walk of Reidemeister moves over the given diagrams.

    HOMFLY must not change; W must stay put under R2 and R3 and gain exactly
    alpha^(+-1) under R1+-. Every produced diagram must stay planar.
    """
    if params.mode != 'q-exact':
        raise InputError("The Reidemeister audit runs on q-exact parameters")
    rng = rng or random.Random(0)
    homfly_result = IdentityResult('reidemeister_homfly_invariance', mode='sampled')
    w_result = IdentityResult('reidemeister_w_law', mode='sampled')
    planar_result = IdentityResult('reidemeister_planarity', mode='sampled')
    alpha_inv = params.alpha ** -1
    factors: Dict[str, LaurentUni] = {'R1+': params.alpha, 'R1-': alpha_inv}
    if not diagrams:
        return [homfly_result, w_result, planar_result]

    current = [d for d in diagrams]
    applied = 0
    attempts = 0
    while applied < moves and attempts < moves * 20:
        attempts += 1
        slot = rng.randrange(len(current))
        d = current[slot]
        move = rng.choice(MOVES)
        sites = find_sites(d, move)
        growth = {'R1+': 1, 'R1-': 1, 'R2': 2, 'R3': 0}[move]
        if d.crossing_count + growth > max_crossings:
            sites = [s for s in sites if isinstance(s, CrossingSite)
                     or (move == 'R2' and not isinstance(s, CornerSite))]
        if not sites:
            continue
        site = sites[rng.randrange(len(sites))]
        moved = reidemeister(d, move, site)
        applied += 1
        tag = (move, str(site))
        planar_result.record(moved.is_planar(), tag, True, False)

        before, after = homfly(d, 'unit', engine), homfly(moved, 'unit', engine)
        homfly_result.record(before == after, tag, before, after)

        w_before, w_after = w_invariant(d, params, engine), w_invariant(moved, params, engine)
        expected = factors.get(move, 1) * w_before
        w_result.record(w_after == expected, tag, expected, w_after)
        current[slot] = moved
    logger.info(f"Reidemeister audit applied {applied} moves in {attempts} attempts")
    return [homfly_result, w_result, planar_result]
