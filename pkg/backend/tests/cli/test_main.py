import json
import pytest
import sys
from pathlib import Path
from unittest.mock import patch

# Add the project root directory to Python path
project_root = str(Path(__file__).parent.parent.parent)
sys.path.append(project_root)

from src.cli.corpus import CorpusEntry
from src.cli.main import (
    EXIT_CEILING, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, algebra_groups, cmd_invariant, main, run_corpus,
)
from src.cli.settings import RunConfig
from src.diagram.braid import closure_of
from src.exact_arith.laurent import LaurentBi, LaurentUni
from src.skein.engine import HomflyEngine

def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err

def test_invariant_homfly(capsys):
    """Test the default invariant on a braid."""
    code, out, _ = run(capsys, 'invariant', '--braid', '1 1 1')
    assert code == EXIT_OK
    data = json.loads(out)
    assert (data['invariant'], data['writhe'], data['components'], data['crossings']) == ('homfly', 3, 1, 3)
    assert 'M' not in data and 'N' not in data and 'mode' not in data
    assert LaurentBi.from_json(data['poly']) == LaurentBi({(-2, 0): 2, (-4, 0): -1, (-2, 2): 1})

def test_invariant_w(capsys):
    """Test W for su(3|1) with its uniformizer."""
    code, out, _ = run(capsys, 'invariant', '--braid', '1 1 1', '--kind', 'w', '--M', '3', '--N', '1')
    assert code == EXIT_OK
    data = json.loads(out)
    assert LaurentUni.from_json(data['poly']) == LaurentUni({7: 1, 3: 1, -1: 1, -9: -1})
    assert (data['M'], data['N'], data['mode']) == (3, 1, 'q-exact')

def test_invariant_sl_lists_parameters(capsys):
    """Test that the sl kind carries the skein parameters."""
    code, out, _ = run(capsys, 'invariant', '--braid', '1 1', '--kind', 'sl', '--M', '3', '--N', '1')
    assert code == EXIT_OK
    assert set(json.loads(out)['params']) == {'alpha', 'beta', 'z', 't', 'delta'}

def test_invariant_jones_ignores_group(capsys):
    """Test that Jones reports its fixed conventions."""
    code, out, _ = run(capsys, 'invariant', '--braid', '1 1', '--kind', 'jones')
    data = json.loads(out)
    assert code == EXIT_OK
    assert data['uniformizer'] == 'q^(1/4)'
    assert 'M' not in data and 'N' not in data
    assert LaurentUni.from_json(data['poly']) == LaurentUni({-2: 1, -10: 1})

def test_invariant_from_pd_file(capsys, tmp_path):
    """Test reading a diagram JSON file."""
    pd_file = tmp_path / 'hopf.json'
    pd_file.write_text(json.dumps(closure_of('1 1').to_json()), encoding='utf-8')
    code, out, _ = run(capsys, 'invariant', '--pd-file', str(pd_file))
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['name'] == 'hopf'
    assert data['components'] == 2

def test_crossing_ceiling_exit_code(capsys):
    """Test exit code 3 when the diagram exceeds the ceiling."""
    code, out, err = run(capsys, 'invariant', '--braid', '1 1 1', '--max-crossings', '2')
    assert code == EXIT_CEILING
    assert out == ''
    assert err.startswith('error:')

@pytest.mark.parametrize('argv', [
    ['invariant', '--braid', '1 x'],
    ['invariant'],
    ['invariant', '--braid', '1', '--pd-file', 'x.json'],
    ['invariant', '--pd-file', 'missing.json'],
    ['invariant', '--braid', '1 1', '--kind', 'w'],
    ['invariant', '--braid', '1 1', '--kind', 'w', '--M', '2', '--N', '2'],
    ['invariant', '--braid', '1 1', '--kind', 'homfly-q', '--M', '3', '--N', '1',
     '--mode', 'paper-literal'],
    ['invariant', '--braid', '1 1', '--kind', 'bogus'],
    ['expand'],
    ['verify', '--M', '1', '--N', '1'],
])
def test_input_errors_exit_code(capsys, argv):
    """Test exit code 2 for rejected input."""
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert out == ''

def test_verify_algebra(capsys):
    """Test the algebra suite on one group."""
    code, out, _ = run(capsys, 'verify', '--suite', 'algebra', '--M', '2', '--N', '1',
                       '--samples', '5', '--field-samples', '2')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['passed']
    assert [g['M'] for g in report['groups']] == [2]

def test_verify_perturbative(capsys):
    """Test the first-order suite on one group."""
    code, out, _ = run(capsys, 'verify', '--suite', 'perturbative', '--M', '3', '--N', '1')
    assert code == EXIT_OK
    assert json.loads(out)['groups'][0]['first_order']['alpha'] == '-3/4i'

def test_verify_failure_exit_code(capsys):
    """Test exit code 4 when a suite reports a failure."""
    failing = {'groups': [], 'passed': False}
    with patch('src.cli.main.verify_algebra_suite', return_value=failing):
        code, out, _ = run(capsys, 'verify', '--suite', 'algebra')
    assert code == EXIT_VERIFY
    assert json.loads(out) == failing

def test_algebra_sweep_groups():
    """Test the default group sweep."""
    groups = algebra_groups(RunConfig())
    assert (2, 1) in groups and (1, 4) in groups
    assert all(M != N and M + N <= 5 for M, N in groups)

def test_corpus_command(capsys):
    """Test one row per shipped corpus entry."""
    code, out, _ = run(capsys, 'corpus', '--kind', 'jones')
    assert code == EXIT_OK
    rows = json.loads(out)['rows']
    assert [r['name'] for r in rows][:2] == ['unknot', 'hopf_positive']
    assert len(rows) == 6

def test_corpus_command_reports_bad_rows(capsys, tmp_path):
    """Test that malformed rows become error rows without stopping the run."""
    corpus_file = tmp_path / 'mixed.jsonl'
    corpus_file.write_text('\n'.join([
        '{"name": "hopf", "braid": "1 1"}',
        '{not json',
        '{"name": "nameless_diagram"}',
        '{"name": "trefoil", "braid": "1 1 1"}',
    ]), encoding='utf-8')
    code, out, _ = run(capsys, 'corpus', '--kind', 'jones', '--corpus-file', str(corpus_file))
    assert code == EXIT_OK
    rows = json.loads(out)['rows']
    assert [r['name'] for r in rows] == ['hopf', 'line 2', 'nameless_diagram', 'trefoil']
    assert 'line 2' in rows[1]['error']
    assert 'line 3' in rows[2]['error']
    assert 'error' not in rows[0] and 'error' not in rows[3]
    assert LaurentUni.from_json(rows[3]['poly']) == LaurentUni({-4: 1, -12: 1, -16: -1})

def test_expand_command(capsys):
    """Test the parameter expansion table."""
    code, out, _ = run(capsys, 'expand', '--M', '3', '--N', '1', '--order', '2')
    assert code == EXIT_OK
    data = json.loads(out)
    assert [r['param'] for r in data['rows']] == ['alpha', 'beta', 'z', 't', 'delta']
    assert data['q_exact']['uniformizer'] == 'q^(1/4)'

def test_tree_command(capsys):
    """Test the skein tree of the Hopf link."""
    code, out, _ = run(capsys, 'tree', '--braid', '1 1')
    assert code == EXIT_OK
    data = json.loads(out)
    assert (data['leaves'], data['depth']) == (2, 1)

def test_table_output(capsys):
    """Test the table format on a tree."""
    code, out, _ = run(capsys, 'tree', '--braid', '1 1 1', '--output', 'table')
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 6

@pytest.mark.asyncio
async def test_run_corpus_keeps_order_and_records_errors():
    """Test that a failing row becomes an error record in place."""
    entries = [
        CorpusEntry(name='hopf', braid='1 1'),
        CorpusEntry(name='broken', braid='1 x'),
        CorpusEntry(name='trefoil', braid='1 1 1'),
    ]
    rows = await run_corpus(RunConfig(workers=2), entries, 'jones')
    assert [r['name'] for r in rows] == ['hopf', 'broken', 'trefoil']
    assert 'error' in rows[1]
    assert 'error' not in rows[0] and 'error' not in rows[2]

@pytest.mark.asyncio
async def test_run_corpus_ceiling_rows():
    """Test that rows over the ceiling fail individually."""
    entries = [CorpusEntry(name='unknot', braid='', strands=1),
               CorpusEntry(name='trefoil', braid='1 1 1')]
    rows = await run_corpus(RunConfig(max_crossings=2), entries, 'homfly')
    assert 'poly' in rows[0]
    assert rows[1]['error']

def test_cmd_invariant_is_deterministic():
    """Test that repeated calls give identical records."""
    config = RunConfig(M=3, N=1)
    d = closure_of('1 -2 1 -2', 3)
    assert cmd_invariant(config, 'f8', d, 'w') == cmd_invariant(config, 'f8', d, 'w')

@pytest.mark.asyncio
async def test_parallel_and_sequential_runs_are_identical():
    """Test byte-identical output for one worker and many workers."""
    entries = [CorpusEntry(name=f"row{i}", braid=braid, strands=strands)
               for i, (braid, strands) in enumerate([('1 1 1', None), ('1 -2 1 -2', 3),
                                                      ('1 1', None), ('-1 -1 -1', None)])]
    sequential = await run_corpus(RunConfig(M=3, N=1, workers=1), entries, 'w')
    parallel = await run_corpus(RunConfig(M=3, N=1, workers=4), entries, 'w',
                                engine=HomflyEngine())
    assert json.dumps(sequential, sort_keys=True) == json.dumps(parallel, sort_keys=True)
