import pytest
import sys
from pathlib import Path

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.cli.corpus import load_corpus
from src.cli.settings import DEFAULT_CORPUS_FILE
from src.diagram.braid import closure_of
from src.diagram.link_diagram import LinkDiagram, unknot
from src.errors import CrossingCeilingError, InputError
from src.exact_arith.laurent import LaurentBi, unknot_factor
from src.skein.engine import (
    HomflyEngine, NaiveHomflyEngine, PerturbativeEngine, _DescendingWalk, evaluate_tree,
    skein_tree,
)
from src.skein.params import make_params

EXTENDED_CORPUS = Path(__file__).parent.parent / 'data' / 'extended_corpus.jsonl'

HOPF_POSITIVE = LaurentBi({(-1, -1): 1, (-3, -1): -1, (-1, 1): 1})
HOPF_NEGATIVE = LaurentBi({(1, -1): -1, (3, -1): 1, (1, 1): -1})
TREFOIL_RIGHT = LaurentBi({(-2, 0): 2, (-4, 0): -1, (-2, 2): 1})
FIGURE_EIGHT = LaurentBi({(2, 0): 1, (0, 0): -1, (-2, 0): 1, (0, 2): -1})

@pytest.fixture
def engine():
    """Fresh memoized engine."""
    return HomflyEngine()

@pytest.fixture
def naive():
    """Unmemoized oracle engine."""
    return NaiveHomflyEngine()

@pytest.mark.parametrize('braid, strands, expected', [
    ('', 1, LaurentBi.constant(1)),
    ('1 1', None, HOPF_POSITIVE),
    ('-1 -1', None, HOPF_NEGATIVE),
    ('1 1 1', None, TREFOIL_RIGHT),
    ('1 -2 1 -2', 3, FIGURE_EIGHT),
])
def test_homfly_values(engine, naive, braid, strands, expected):
    """Test unit-normalized HOMFLY of the standard links under both engines."""
    d = closure_of(braid, strands)
    assert engine.homfly(d) == expected
    assert naive.homfly(d) == expected

def test_unlinks(engine):
    """Test P = delta^(k-1) on split unlinks, with and without crossings."""
    delta = unknot_factor()
    assert engine.homfly(unknot(2)) == delta
    assert engine.homfly(unknot(3)) == delta * delta
    assert engine.homfly(closure_of('1 -1')) == delta
    assert engine.homfly(closure_of('1')) == 1

def test_paper_normalization(engine):
    """Test that the 'paper' normalization puts delta on the unknot."""
    assert engine.homfly(unknot(), 'paper') == unknot_factor()
    assert engine.homfly(closure_of('1 1'), 'paper') == HOPF_POSITIVE * unknot_factor()
    with pytest.raises(InputError):
        engine.homfly(unknot(), 'bogus')

def test_split_union_multiplies_by_delta(engine):
    """Test P(D1 u D2) = delta P(D1) P(D2)."""
    union = closure_of('1 1 1').disjoint_union(closure_of('1 1'))
    assert engine.homfly(union) == TREFOIL_RIGHT * HOPF_POSITIVE * unknot_factor()

def test_mirror_law(engine):
    """Test P(mirror D)(t, z) = P(D)(1/t, -z)."""
    for braid in ('1 1 1', '1 1 1 1 1', '1 1 2 -1 -3 2 -3'):
        d = closure_of(braid)
        assert engine.homfly(d.mirror()) == engine.homfly(d).mirror()

@pytest.mark.parametrize('braid, strands', [
    ('1 1 1 1 1', None),
    ('1 1 1 2 -1 2', None),
    ('1 1 2 -1 -3 2 -3', 4),
    ('1 -2 1 -2 1 -2', 3),
    ('1 1 -2 1 -2', 3),
])
def test_memo_and_naive_engines_agree(engine, naive, braid, strands):
    """Test the memoized walk against the oracle walk."""
    d = closure_of(braid, strands)
    assert engine.homfly(d) == naive.homfly(d)

def test_memo_statistics(engine):
    """Test that repeated evaluations are answered from the memo."""
    d = closure_of('1 1 1 1 1')
    first = engine.homfly(d)
    stats = engine.stats()
    assert stats['misses'] > 0
    assert stats['misses'] == stats['memo_size']
    assert engine.homfly(d) == first
    assert engine.stats()['hits'] > stats['hits']
    assert engine.stats()['memo_size'] == stats['memo_size']
    assert engine.stats()['misses'] == stats['misses']

def test_crossing_ceiling():
    """Test the ceiling error and the empty-diagram error."""
    with pytest.raises(CrossingCeilingError) as exc_info:
        HomflyEngine(max_crossings=2).homfly(closure_of('1 1 1'))
    assert exc_info.value.crossings == 3
    assert exc_info.value.ceiling == 2
    with pytest.raises(CrossingCeilingError):
        NaiveHomflyEngine(max_crossings=2).homfly(closure_of('1 1 1'))
    with pytest.raises(InputError):
        HomflyEngine().homfly(LinkDiagram())

def test_skein_trees():
    """Test tree shape and the value read off the leaves."""
    hopf = skein_tree(closure_of('1 1'))
    assert (hopf.leaf_count(), hopf.depth()) == (2, 1)
    assert hopf.sign == 1
    assert hopf.switched.is_leaf and hopf.smoothed.is_leaf
    assert evaluate_tree(hopf) == HOPF_POSITIVE

    trefoil = skein_tree(closure_of('1 1 1'))
    assert trefoil.leaf_count() == 3
    assert trefoil.depth() == 2
    assert evaluate_tree(trefoil) == TREFOIL_RIGHT

    leaf = skein_tree(unknot())
    assert leaf.is_leaf
    assert leaf.to_json() == {
        'crossings': 0, 'components': 1, 'writhe': 0,
        'leaf': {'descending': True, 'component_writhes': [], 'free_loops': 1},
    }

@pytest.mark.parametrize('braid, strands', [
    ('1 -2 1 -2', 3),
    ('1 1 1 1 1', None),
    ('1 1 1 1 1 1 1', None),
    ('1 1 -2 1 -2', 3),
    ('1 1 1 2 -1 2', None),
    ('-1 -1 2 -1 2 2', None),
])
def test_tree_depth_is_bounded_by_crossings(braid, strands):
    """Test that no path is longer than the crossing count."""
    d = closure_of(braid, strands)
    tree = skein_tree(d)
    assert tree.depth() <= d.crossing_count
    assert evaluate_tree(tree) == HomflyEngine().homfly(d)

@pytest.mark.parametrize('path', [DEFAULT_CORPUS_FILE, str(EXTENDED_CORPUS)])
def test_tree_depth_over_corpora(path):
    """Test the depth bound and the tree value on every corpus diagram."""
    engine = HomflyEngine()
    for entry in load_corpus(path):
        d = entry.diagram()
        tree = skein_tree(d)
        assert tree.depth() <= d.crossing_count, entry.name
        assert evaluate_tree(tree) == engine.homfly(d), entry.name

def test_smoothed_walk_keeps_earlier_components():
    """Test that a smoothed child keeps the walk of its parent up to the smoothed crossing."""
    walk = _DescendingWalk()
    d = closure_of('1 1')
    starts = walk.base_points(d)
    assert starts == (6, 2)
    assert walk.bad_crossings(d, starts) == [0]
    # the start 2 sits on crossing 0 and moves along the smoothed strand to 6
    assert walk.smoothed_base_points(d, 0, starts) == (6, 6)
    assert walk.bad_crossings(d.smooth(0), (6, 6)) == []

def test_tree_json_branches():
    """Test the branch record of a tree."""
    data = skein_tree(closure_of('1 1')).to_json()
    assert data['crossings'] == 2
    branch = data['branch']
    assert (branch['crossing'], branch['sign']) == (0, 1)
    assert branch['switched']['leaf']['component_writhes'] == [0, 0]
    assert branch['smoothed']['writhe'] == 1
    with pytest.raises(CrossingCeilingError):
        skein_tree(closure_of('1 1 1'), max_crossings=2)

def test_perturbative_engine_needs_series_parameters():
    """Test the mode guard and the series unknot value."""
    with pytest.raises(ValueError):
        PerturbativeEngine(make_params(3, 1))
    engine = PerturbativeEngine(make_params(3, 1, 'paper-literal', order=2))
    assert engine.w_series(unknot()) == 2
    assert engine.w_series(unknot(2)) == 4
