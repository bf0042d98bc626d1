import pytest
import sys
from fractions import Fraction
from pathlib import Path

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.errors import InputError
from src.exact_arith.laurent import LaurentUni
from src.exact_arith.scalars import GaussianRational
from src.exact_arith.series import EpsSeries
from src.skein.params import make_params, normalize_normalization

def test_q_exact_su31():
    """Test the q-exact parameters of su(3|1) in u = q^(1/4)."""
    p = make_params(3, 1)
    assert (p.mode, p.normalization, p.mn) == ('q-exact', 'unit', 2)
    assert p.alpha == LaurentUni.monomial(3)
    assert p.beta == LaurentUni.monomial(1)
    assert p.z == LaurentUni({2: 1, -2: -1})
    assert p.t == LaurentUni.monomial(4)
    assert p.delta == LaurentUni({2: 1, -2: 1})

def test_t_is_alpha_beta():
    """Test t = alpha * beta and t - 1/t = z * delta for several groups."""
    for M, N in ((2, 1), (3, 1), (4, 1), (1, 3), (5, 2)):
        p = make_params(M, N)
        assert p.alpha * p.beta == p.t
        assert p.t - p.t.invert() == p.z * p.delta

def test_paper_literal_values():
    """Test the eps-series forms and the constant unknot value."""
    p = make_params(3, 1, 'paper-literal', order=3)
    assert all(isinstance(v, EpsSeries) for v in p.values().values())
    assert p.delta == 2
    assert p.alpha.coefficient(0) == 1
    assert p.alpha.coefficient(1) == GaussianRational(0, Fraction(-3, 4))
    assert p.beta.coefficient(1) == GaussianRational(0, Fraction(-1, 4))
    assert p.z.coefficient(1) == GaussianRational(0, -1)
    assert p.t.coefficient(1) == GaussianRational(0, -1)

def test_params_json():
    """Test the JSON record of the parameters."""
    data = make_params(3, 1).to_json()
    assert data['uniformizer'] == 'q^(1/4)'
    assert (data['M'], data['N'], data['mode']) == (3, 1, 'q-exact')
    assert set(data['params']) == {'alpha', 'beta', 'z', 't', 'delta'}

def test_normalization_aliases():
    """Test the long normalization names."""
    assert normalize_normalization('unit-unknot') == 'unit'
    assert make_params(3, 1, normalization='paper-unknot').normalization == 'paper'

@pytest.mark.parametrize('kwargs', [
    {'mode': 'classical'},
    {'normalization': 'framed'},
    {'order': 5},
    {'order': -1},
])
def test_bad_parameters(kwargs):
    """Test rejected modes, normalizations and series orders."""
    with pytest.raises(InputError):
        make_params(3, 1, **kwargs)

def test_equal_ranks_rejected():
    """Test that M = N has no skein parameters."""
    with pytest.raises(InputError):
        make_params(2, 2)
