import pytest
import random
import sys
from pathlib import Path

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.diagram.braid import closure_of
from src.diagram.link_diagram import unknot
from src.errors import InputError
from src.exact_arith.laurent import LaurentUni
from src.exact_arith.series import EpsSeries
from src.skein.engine import HomflyEngine
from src.skein.invariants import (
    homfly, homfly_q, jones, reidemeister_audit, verify_skein, w_invariant,
)
from src.skein.params import make_params

@pytest.fixture(scope='module')
def engine():
    """Shared memoized engine for the module."""
    return HomflyEngine()

@pytest.fixture
def su31():
    """q-exact parameters for su(3|1)."""
    return make_params(3, 1)

@pytest.fixture
def diagrams():
    """Small corpus of named diagrams."""
    return {
        'unknot': closure_of('', 1),
        'hopf_positive': closure_of('1 1'),
        'hopf_negative': closure_of('-1 -1'),
        'trefoil_right': closure_of('1 1 1'),
        'trefoil_left': closure_of('-1 -1 -1'),
        'figure_eight': closure_of('1 -2 1 -2', 3),
    }

@pytest.mark.parametrize('name, expected', [
    ('unknot', {0: 1}),
    ('hopf_positive', {-2: 1, -10: 1}),
    ('hopf_negative', {2: 1, 10: 1}),
    ('trefoil_right', {-4: 1, -12: 1, -16: -1}),
    ('trefoil_left', {4: 1, 12: 1, 16: -1}),
    ('figure_eight', {8: 1, 4: -1, 0: 1, -4: -1, -8: 1}),
])
def test_jones_values(engine, diagrams, name, expected):
    """Test Jones polynomials in u = q^(1/4)."""
    assert jones(diagrams[name], engine) == LaurentUni(expected)

@pytest.mark.parametrize('name, expected', [
    ('unknot', {2: 1, -2: 1}),
    ('hopf_positive', {6: 1, 2: 1, -2: 1, -6: 1}),
    ('hopf_negative', {6: 1, 2: 1, -2: 1, -6: 1}),
    ('trefoil_right', {7: 1, 3: 1, -1: 1, -9: -1}),
    ('trefoil_left', {-7: 1, -3: 1, 1: 1, 9: -1}),
    ('figure_eight', {10: 1, -10: 1}),
])
def test_w_values_su31(engine, diagrams, su31, name, expected):
    """Test the framed W invariant for su(3|1) in u = q^(1/4)."""
    assert w_invariant(diagrams[name], su31, engine) == LaurentUni(expected)

def test_w_depends_on_difference_only(engine, diagrams, su31):
    """Test W(su(3|1)) = W(su(4|2))."""
    su42 = make_params(4, 2)
    for d in diagrams.values():
        assert w_invariant(d, su42, engine) == w_invariant(d, su31, engine)

def test_w_framing_law(engine, su31):
    """Test that a positive curl multiplies W by alpha."""
    trefoil = closure_of('1 1 1')
    curled = closure_of('1 1 1 2', 3)
    assert curled.writhe() == trefoil.writhe() + 1
    assert w_invariant(curled, su31, engine) == su31.alpha * w_invariant(trefoil, su31, engine)
    assert homfly(curled, engine=engine) == homfly(trefoil, engine=engine)

def test_homfly_q_specialization(engine, diagrams):
    """Test the q-form HOMFLY in both normalizations."""
    unit = make_params(3, 1)
    paper = make_params(3, 1, normalization='paper')
    assert homfly_q(diagrams['unknot'], unit, engine) == 1
    assert homfly_q(diagrams['unknot'], paper, engine) == LaurentUni({2: 1, -2: 1})
    assert homfly_q(diagrams['trefoil_right'], unit, engine) == jones(diagrams['trefoil_right'], engine)

def test_negative_difference(engine, diagrams):
    """Test su(1|3), where M - N = -2."""
    params = make_params(1, 3)
    assert params.mn == -2
    value = w_invariant(diagrams['unknot'], params, engine)
    assert value == LaurentUni({2: -1, -2: -1})

def test_paper_literal_w_is_a_series(engine, diagrams):
    """Test the eps-series W and its unknot value M - N."""
    literal = make_params(3, 1, 'paper-literal', order=2)
    value = w_invariant(diagrams['unknot'], literal, engine)
    assert isinstance(value, EpsSeries)
    assert value == 2

@pytest.mark.parametrize('kind', ['homfly', 'jones', 'w'])
def test_skein_relation_at_every_crossing(engine, diagrams, su31, kind):
    """Test the skein relations by evaluating L+, L- and L0 separately."""
    for d in diagrams.values():
        for c in range(d.crossing_count):
            assert verify_skein(d, c, kind, su31, engine)

def test_paper_literal_skein_relation_to_first_order(engine, diagrams):
    """Test the series skein relation through eps^1."""
    literal = make_params(3, 1, 'paper-literal', order=2)
    for c in range(3):
        assert verify_skein(diagrams['trefoil_right'], c, 'w', literal, engine)

def test_verify_skein_errors(diagrams):
    """Test rejected engines, missing parameters and crossing indices."""
    trefoil = diagrams['trefoil_right']
    with pytest.raises(InputError):
        verify_skein(trefoil, 0, 'kauffman')
    with pytest.raises(InputError):
        verify_skein(trefoil, 0, 'w')
    with pytest.raises(InputError):
        verify_skein(trefoil, 3, 'homfly')

def test_reidemeister_audit(engine, diagrams, su31):
    """Test HOMFLY invariance, the W framing law and planarity along a random walk."""
    results = reidemeister_audit(list(diagrams.values()), 40, su31, random.Random(3),
                                 engine=engine)
    names = [r.identity for r in results]
    assert names == ['reidemeister_homfly_invariance', 'reidemeister_w_law',
                     'reidemeister_planarity']
    assert 0 < results[0].checked <= 40
    for r in results:
        assert r.failed == 0, r.counterexample
        assert r.checked == results[0].checked

def test_reidemeister_audit_guards(su31):
    """Test the parameter mode check and the empty corpus."""
    with pytest.raises(InputError):
        reidemeister_audit([unknot()], 5, make_params(3, 1, 'paper-literal'))
    assert all(r.checked == 0 for r in reidemeister_audit([], 5, su31))
