import pytest
import sys
from fractions import Fraction
from pathlib import Path

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.errors import InexactDivisionError, InputError
from src.exact_arith.laurent import (
    LaurentBi, LaurentUni, laurent_arith, specialize, t_power, unknot_factor, z_power,
)
from src.exact_arith.scalars import GaussianRational, I, parse_rational

@pytest.fixture
def hopf_positive():
    """Unit-normalized HOMFLY of the positive Hopf link."""
    return LaurentBi({(-1, -1): 1, (-3, -1): -1, (-1, 1): 1})

def test_gaussian_arithmetic():
    """Test exact complex products, inverses and display."""
    a = GaussianRational(1, 2)
    b = GaussianRational(3, -1)
    assert a * b == GaussianRational(5, 5)
    assert I * I == -1
    assert I.inverse() == GaussianRational(0, -1)
    assert (a / a) == 1
    assert str(GaussianRational(Fraction(-3, 4), 0)) == '-3/4'
    assert str(GaussianRational(0, Fraction(1, 2))) == '1/2i'

def test_gaussian_division_by_zero():
    """Test that dividing by zero raises instead of returning junk."""
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1, 1) / 0

def test_parse_rational():
    """Test decimal-rational parsing and its error type."""
    assert parse_rational('-3/4') == Fraction(-3, 4)
    with pytest.raises(InputError):
        parse_rational('three quarters')

def test_zero_coefficients_are_dropped():
    """Test normalization of stored terms."""
    p = LaurentUni({1: 1, 2: 0})
    assert len(p) == 1
    assert (p - p).is_zero()
    assert LaurentUni({3: 1}) + LaurentUni({3: -1}) == 0

def test_shift_and_invert():
    """Test exponent shifts and the u -> 1/u substitution."""
    p = LaurentUni({1: 2, -3: 1})
    assert p.shift(3) == LaurentUni({4: 2, 0: 1})
    assert p.invert() == LaurentUni({-1: 2, 3: 1})
    assert p.min_degree() == -3
    assert p.max_degree() == 1

def test_negative_powers_need_a_monomial():
    """Test that only units of the Laurent ring have inverses."""
    u = LaurentUni.monomial(1)
    assert u ** -2 == LaurentUni.monomial(-2)
    with pytest.raises(InexactDivisionError):
        LaurentUni({1: 1, -1: -1}) ** -1

def test_exact_division():
    """Test polynomial long division in the uniformizer."""
    z = LaurentUni({2: 1, -2: -1})
    numerator = LaurentUni({4: 1, -4: -1})
    assert numerator.exact_div(z) == LaurentUni({2: 1, -2: 1})
    with pytest.raises(InexactDivisionError):
        LaurentUni({2: 1, 0: 1}).exact_div(LaurentUni({1: 1, 0: -1}))
    with pytest.raises(ZeroDivisionError):
        numerator.exact_div(LaurentUni())

def test_variables_do_not_mix():
    """Test that values in different variables refuse to combine."""
    with pytest.raises(ValueError):
        LaurentUni.monomial(1, var='u') + LaurentUni.monomial(1, var='A')
    with pytest.raises(TypeError):
        laurent_arith(LaurentUni.monomial(1), LaurentBi.monomial(1, 0), 'add')

def test_laurent_arith_dispatch():
    """Test the named ring operations."""
    a, b = LaurentUni.monomial(1), LaurentUni.monomial(-1)
    assert laurent_arith(a, b, 'mul') == 1
    assert laurent_arith(a, b, 'sub') == LaurentUni({1: 1, -1: -1})
    assert laurent_arith(a, None, 'neg') == LaurentUni.monomial(1, -1)
    with pytest.raises(ValueError):
        laurent_arith(a, b, 'pow')
    with pytest.raises(ValueError):
        laurent_arith(a, None, 'add')

def test_mirror_substitution(hopf_positive):
    """Test t -> 1/t, z -> -z on the positive Hopf value."""
    mirrored = hopf_positive.mirror()
    assert mirrored == LaurentBi({(1, -1): -1, (3, -1): 1, (1, 1): -1})
    assert mirrored.mirror() == hopf_positive

def test_unknot_factor_specializes_to_quantum_dimension():
    """Test (t - 1/t)/z at M-N = 2 and M-N = 1."""
    assert specialize(unknot_factor(), 2) == LaurentUni({2: 1, -2: 1})
    assert specialize(unknot_factor(), 1) == 1

def test_specialize_monomials():
    """Test t^a z^b -> u^(a mn^2) (u^mn - u^-mn)^b."""
    assert specialize(t_power(1), 3) == LaurentUni.monomial(9)
    assert specialize(z_power(1), 3) == LaurentUni({3: 1, -3: -1})
    assert specialize(LaurentBi(), 3) == LaurentUni()
    with pytest.raises(ValueError):
        specialize(t_power(1), 0)
    with pytest.raises(TypeError):
        specialize(LaurentUni.monomial(1), 2)

def test_specialize_positive_hopf(hopf_positive):
    """Test the Jones value of the positive Hopf link in u = q^(1/4)."""
    assert specialize(hopf_positive, 2) == LaurentUni({-2: 1, -10: 1})

def test_json_records(hopf_positive):
    """Test the exact coefficient records used in result files."""
    data = hopf_positive.to_json()
    assert data['var'] == 'tz'
    assert {'et': -1, 'ez': 1, 're': '1', 'im': '0'} in data['terms']
    assert LaurentBi.from_json(data) == hopf_positive

    uni = LaurentUni({-1: GaussianRational(Fraction(1, 2), -1)}, var='A')
    assert uni.to_json() == {'var': 'A', 'terms': [{'e': -1, 're': '1/2', 'im': '-1'}]}
    with pytest.raises(InputError):
        LaurentUni.from_json({'var': 'u'})
