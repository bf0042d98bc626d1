import json
import pytest
import sys
from pathlib import Path

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.cli.corpus import load_corpus
from src.cli.settings import DEFAULT_CORPUS_FILE
from src.exact_arith.laurent import LaurentBi, LaurentUni
from src.skein.engine import HomflyEngine
from src.skein.invariants import homfly, jones, w_invariant
from src.skein.params import make_params

GOLDEN_DIR = Path(__file__).parent.parent / 'golden'

@pytest.fixture(scope='module')
def corpus():
    """Shipped corpus as named diagrams."""
    return {entry.name: entry.diagram() for entry in load_corpus(DEFAULT_CORPUS_FILE)}

@pytest.fixture(scope='module')
def engine():
    """Shared memoized engine for the module."""
    return HomflyEngine()

def load_golden(filename):
    return json.loads((GOLDEN_DIR / filename).read_text(encoding='utf-8'))

def test_golden_files_cover_corpus(corpus):
    """Test that every golden file lists exactly the corpus names."""
    for filename in ('homfly_unit.json', 'jones.json', 'w_su3_1.json'):
        assert set(load_golden(filename)['entries']) == set(corpus)

def test_homfly_golden(corpus, engine):
    """Test unit-normalized HOMFLY against the frozen values."""
    golden = load_golden('homfly_unit.json')
    assert golden['normalization'] == 'unit'
    for name, data in golden['entries'].items():
        assert homfly(corpus[name], engine=engine) == LaurentBi.from_json(data), name

def test_jones_golden(corpus, engine):
    """Test Jones polynomials against the frozen values."""
    for name, data in load_golden('jones.json')['entries'].items():
        assert jones(corpus[name], engine) == LaurentUni.from_json(data), name

def test_w_golden(corpus, engine):
    """Test su(3|1) W against the frozen values."""
    golden = load_golden('w_su3_1.json')
    params = make_params(golden['M'], golden['N'], golden['mode'])
    for name, data in golden['entries'].items():
        assert w_invariant(corpus[name], params, engine) == LaurentUni.from_json(data), name
