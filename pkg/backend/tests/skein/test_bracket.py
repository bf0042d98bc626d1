import pytest
import sys
from pathlib import Path

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.diagram.braid import closure_of
from src.diagram.link_diagram import unknot
from src.errors import CrossingCeilingError
from src.exact_arith.laurent import LaurentUni
from src.skein.bracket import jones_via_bracket, kauffman_bracket
from src.skein.engine import HomflyEngine
from src.skein.invariants import jones

@pytest.fixture(scope='module')
def engine():
    """Shared memoized engine for the module."""
    return HomflyEngine()

def test_bracket_of_circles():
    """Test <O> = 1 and <O O> = -A^2 - A^-2."""
    assert kauffman_bracket(unknot()) == LaurentUni.constant(1, var='A')
    assert kauffman_bracket(unknot(2)) == LaurentUni({2: -1, -2: -1}, var='A')

def test_bracket_of_hopf():
    """Test the state sum on the Hopf diagram."""
    expected = LaurentUni({4: -1, -4: -1}, var='A')
    assert kauffman_bracket(closure_of('1 1')) == expected
    assert kauffman_bracket(closure_of('-1 -1')) == expected

def test_bracket_of_trefoil():
    """Test the right-handed trefoil bracket."""
    assert kauffman_bracket(closure_of('1 1 1')) == LaurentUni({-7: 1, -3: -1, 5: -1}, var='A')

def test_bracket_is_curl_sensitive():
    """Test <curl> = -A^3 <O> for a positive curl."""
    assert kauffman_bracket(closure_of('1')) == LaurentUni.monomial(3, -1, var='A')

@pytest.mark.parametrize('braid, strands', [
    ('', 1),
    ('1 1', None),
    ('-1 -1', None),
    ('1 1 1', None),
    ('-1 -1 -1', None),
    ('1 -2 1 -2', 3),
    ('1 1 1 2', 3),
    ('1 -2 1 -2 1 -2', 3),
    ('1 1 2 -1 -3 2 -3', 4),
])
def test_state_sum_matches_skein_jones(engine, braid, strands):
    """Test the bracket oracle against the HOMFLY specialization."""
    d = closure_of(braid, strands)
    assert jones_via_bracket(d) == jones(d, engine)

def test_bracket_ceiling():
    """Test that oversized state sums are refused."""
    with pytest.raises(CrossingCeilingError):
        kauffman_bracket(closure_of(' '.join(['1'] * 15)))
