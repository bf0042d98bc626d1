import pytest
import sys
from fractions import Fraction
from pathlib import Path

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.errors import InputError
from src.exact_arith.display import render
from src.exact_arith.laurent import LaurentBi, LaurentUni
from src.exact_arith.scalars import GaussianRational
from src.exact_arith.series import (
    EpsSeries, expand_laurent_to_series, one_series, q_power_series,
)

@pytest.fixture
def q_series():
    """q = exp(-i eps) through eps^2."""
    return q_power_series(1, 2)

def test_q_power_coefficients(q_series):
    """Test the exponential expansion of q."""
    assert q_series.coeffs == (
        GaussianRational(1), GaussianRational(0, -1), GaussianRational(Fraction(-1, 2)),
    )
    half = q_power_series(Fraction(1, 2), 1)
    assert half.coefficient(1) == GaussianRational(0, Fraction(-1, 2))
    assert half.coefficient(5) == 0

def test_reciprocal_is_inverse_power(q_series):
    """Test that 1/q is q^-1 as series."""
    assert q_series.reciprocal() == q_power_series(-1, 2)
    assert q_series * q_series.reciprocal() == one_series(2)
    assert q_series ** -2 == q_power_series(-2, 2)

def test_reciprocal_needs_unit():
    """Test that series without constant term have no inverse."""
    with pytest.raises(ZeroDivisionError):
        EpsSeries([0, 1], 2).reciprocal()

def test_order_checks():
    """Test order limits and mismatched orders."""
    with pytest.raises(ValueError):
        q_power_series(1, 5)
    with pytest.raises(ValueError):
        EpsSeries([1], -1)
    with pytest.raises(ValueError):
        q_power_series(1, 1) + q_power_series(1, 2)

def test_agreement_through_an_order():
    """Test comparison of the leading coefficients only."""
    a = EpsSeries([2, 1, 7], 2)
    b = EpsSeries([2, 1, -7], 2)
    assert a.agrees_with(b, 1)
    assert not a.agrees_with(b, 2)
    assert a.truncate(1) == b.truncate(1)

def test_expand_laurent_in_uniformizer():
    """Test u^n -> q^(n/denom) for u = q^(1/4)."""
    p = LaurentUni({2: 1, -2: 1})
    expanded = expand_laurent_to_series(p, 4, 2)
    assert expanded.coefficient(0) == 2
    assert expanded.coefficient(1) == 0
    assert expanded.coefficient(2) == Fraction(-1, 4)
    with pytest.raises(ValueError):
        expand_laurent_to_series(p, 0, 1)

def test_series_json():
    """Test the series record and malformed input."""
    s = EpsSeries([1, GaussianRational(0, -1)], 1)
    data = s.to_json()
    assert data['var'] == 'eps'
    assert data['order'] == 1
    assert EpsSeries.from_json(data) == s
    with pytest.raises(InputError):
        EpsSeries.from_json({'order': 1})

def test_render_values():
    """Test the sympy display strings for each value kind."""
    assert render(LaurentUni({2: 1}), 4) == 'sqrt(q)'
    assert render(LaurentUni({3: 1}), 4) == 'q**(3/4)'
    assert render(LaurentUni({1: 1}, var='A')) == 'A'
    assert 't' in render(LaurentBi.monomial(1, 0))
    assert render(EpsSeries([1], 1)).endswith('O(eps^2)')
    assert render(Fraction(3, 4)) == '3/4'
    with pytest.raises(ValueError):
        render('not a value')
