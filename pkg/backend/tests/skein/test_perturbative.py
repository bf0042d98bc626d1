import pytest
import sys
from fractions import Fraction
from pathlib import Path

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.diagram.braid import closure_of
from src.exact_arith.scalars import GaussianRational
from src.skein.perturbative import expected_first_order, perturbative_check, perturbative_w_agrees

@pytest.mark.parametrize('M, N, name, expected', [
    (3, 1, 'alpha', '-3/4i'),
    (3, 1, 'beta', '-1/4i'),
    (3, 1, 'z', '-1i'),
    (4, 1, 't', '-3/2i'),
    (4, 1, 'alpha', '-4/3i'),
    (2, 1, 'alpha', '0'),
])
def test_first_order_coefficients(M, N, name, expected):
    """Test the eps^1 coefficients of the expanded q-exact parameters."""
    report = perturbative_check(M, N)
    assert report['first_order'][name] == expected
    assert report['passed']

def test_expected_first_order():
    """Test the closed forms -i C2, -i/(2(M-N)), -i and -i(M-N)/2."""
    expected = expected_first_order(3, 1)
    assert expected['alpha'] == GaussianRational(0, Fraction(-3, 4))
    assert expected['beta'] == GaussianRational(0, Fraction(-1, 4))
    assert expected['z'] == GaussianRational(0, -1)
    assert expected['t'] == GaussianRational(0, -1)

def test_report_shape():
    """Test identity names and the Casimir value in the report."""
    report = perturbative_check(4, 2, order=2)
    assert report['casimir_value'] == '3/4'
    assert report['order'] == 2
    names = [r['identity'] for r in report['identities']]
    assert names == ['first_order_coefficients', 'series_forms_match', 'first_order_consistency',
                     'unknot_value_first_order', 'exact_q_identities']
    assert all(r['failed'] == 0 for r in report['identities'])

def test_w_agreement_over_diagrams():
    """Test the eps-series W against the expanded exact W on named diagrams."""
    diagrams = [('hopf', closure_of('1 1')), ('trefoil', closure_of('1 1 1')),
                ('figure_eight', closure_of('1 -2 1 -2', 3))]
    report = perturbative_check(3, 1, diagrams=diagrams)
    agreement = report['identities'][-1]
    assert agreement['identity'] == 'perturbative_w_agreement'
    assert (agreement['checked'], agreement['failed']) == (3, 0)
    assert report['passed']

@pytest.mark.parametrize('braid, strands', [
    ('', 1),
    ('-1 -1 -1', None),
    ('1 1 1 2', 3),
])
def test_perturbative_w_agrees(braid, strands):
    """Test first-order agreement for su(5|2), including a framed curl."""
    assert perturbative_w_agrees(closure_of(braid, strands), 5, 2)
