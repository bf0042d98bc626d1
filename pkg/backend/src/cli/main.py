"""Command-line front end.

Run from backend/ as ``python -m src.cli <command>``. Exit codes: 0 success,
2 input error, 3 crossing ceiling exceeded, 4 verification failure.
"""
import argparse
import asyncio
import json
import logging
import os
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from src.cli.corpus import CorpusEntry, load_corpus
from src.cli.formatter import ResultFormatter
from src.cli.settings import OUTPUT_FORMATS, RunConfig
from src.diagram.link_diagram import LinkDiagram
from src.errors import CrossingCeilingError, InputError
from src.exact_arith.display import render
from src.exact_arith.series import expand_laurent_to_series
from src.skein.engine import TREE_MAX_CROSSINGS, HomflyEngine, skein_tree
from src.skein.invariants import JONES_MN, homfly, homfly_q, jones, w_invariant
from src.skein.params import MODES, NORMALIZATIONS, make_params
from src.skein.perturbative import perturbative_check
from src.skein.suite import SkeinSuite, SkeinSuiteSettings
from src.superalgebra.context import AlgebraContext
from src.superalgebra.verifier import VerifierSettings, verify_algebra

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CEILING = 3
EXIT_VERIFY = 4

KINDS = ('homfly', 'w', 'jones', 'sl', 'homfly-q')
SUITES = ('algebra', 'skein', 'perturbative', 'all')
ALGEBRA_MAX_DIM = 5
PERTURBATIVE_GROUPS = ((2, 1), (3, 1), (4, 1), (4, 2), (5, 2))

logger = logging.getLogger('KnotCli')


def setup_logging():
    """Configure process logging once; never writes to stdout."""
    level = os.getenv('LOG_LEVEL', 'WARNING').upper()
    log_file = os.getenv('LOG_FILE')
    handler_args = {'filename': log_file} if log_file else {'stream': sys.stderr}
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        **handler_args,
    )


# invariants

def cmd_invariant(config: RunConfig, name: str, d: LinkDiagram, kind: str,
                  engine: Optional[HomflyEngine] = None) -> Dict:
    """Result record for one diagram; deterministic for fixed inputs."""
    if kind not in KINDS:
        raise InputError(f"Unsupported kind: {kind}")
    result = {
        'name': name,
        'invariant': kind,
        'normalization': config.normalization,
        'writhe': d.writhe(),
        'components': d.component_count(),
        'crossings': d.crossing_count,
    }
    if kind == 'homfly':
        value = homfly(d, config.normalization, engine)
        result['poly'], result['display'] = value.to_json(), render(value)
        return result
    if kind == 'jones':
        value = jones(d, engine)
        result.update({'mode': 'q-exact', 'normalization': 'unit',
                       'uniformizer': f"q^(1/{2 * JONES_MN})"})
        result['poly'], result['display'] = value.to_json(), render(value, 2 * JONES_MN)
        return result

    config.require_group(f"Invariant {kind}")
    params = make_params(config.M, config.N, config.mode, config.series_order, config.normalization)
    result.update({'M': params.M, 'N': params.N, 'mode': params.mode})
    if kind == 'homfly-q':
        if params.mode != 'q-exact':
            raise InputError("homfly-q is defined for q-exact parameters only")
        value = homfly_q(d, params, engine)
    else:
        value = w_invariant(d, params, engine)
    result['poly'] = value.to_json()
    result['display'] = render(value, params.uniformizer_denominator)
    if kind == 'sl':
        result['params'] = params.to_json()['params']
    return result


def read_diagram(args) -> Tuple[str, LinkDiagram]:
    if args.pd_file:
        if args.braid is not None:
            raise InputError("Give either --braid or --pd-file, not both")
        try:
            data = json.loads(Path(args.pd_file).read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as e:
            raise InputError(f"Cannot read diagram file {args.pd_file}: {str(e)}")
        entry = CorpusEntry(name=args.name or Path(args.pd_file).stem, pd=data)
    else:
        if args.braid is None:
            raise InputError("Give --braid or --pd-file")
        entry = CorpusEntry(name=args.name or args.braid, braid=args.braid, strands=args.strands)
    return entry.name, entry.diagram()


async def run_corpus(config: RunConfig, entries: List[CorpusEntry], kind: str,
                     engine: Optional[HomflyEngine] = None) -> List[Dict]:
    """One row per entry in input order; a failing row records its error."""
    engine = engine or HomflyEngine(config.max_crossings)
    semaphore = asyncio.Semaphore(config.workers)

    def one(entry: CorpusEntry) -> Dict:
        try:
            return cmd_invariant(config, entry.name, entry.diagram(), kind, engine)
        except (InputError, CrossingCeilingError, ArithmeticError) as e:
            logger.warning(f"Corpus row {entry.name} failed: {str(e)}")
            return {'name': entry.name, 'invariant': kind, 'error': str(e)}

    async def guarded(entry: CorpusEntry) -> Dict:
        async with semaphore:
            return await asyncio.to_thread(one, entry)

    return await asyncio.gather(*(guarded(entry) for entry in entries))


# verification

def algebra_groups(config: RunConfig) -> List[Tuple[int, int]]:
    if config.has_group:
        return [(config.M, config.N)]
    return [(M, N) for M in range(1, ALGEBRA_MAX_DIM) for N in range(1, ALGEBRA_MAX_DIM)
            if M != N and M + N <= ALGEBRA_MAX_DIM]


def verify_algebra_suite(config: RunConfig) -> Dict:
    settings = VerifierSettings(action_samples=config.action_samples,
                                field_samples=config.field_samples, seed=config.seed)
    reports = [verify_algebra(AlgebraContext(M, N), settings) for M, N in algebra_groups(config)]
    return {'groups': reports, 'passed': all(r['passed'] for r in reports)}


def verify_perturbative_suite(config: RunConfig, diagrams: List[Tuple[str, LinkDiagram]]) -> Dict:
    groups = [(config.M, config.N)] if config.has_group else list(PERTURBATIVE_GROUPS)
    reports = [perturbative_check(M, N, config.series_order, diagrams) for M, N in groups]
    return {'groups': reports, 'passed': all(r['passed'] for r in reports)}


def verify_skein_suite(config: RunConfig, diagrams: List[Tuple[str, LinkDiagram]]) -> Dict:
    settings = SkeinSuiteSettings(seed=config.seed, max_crossings=config.max_crossings)
    if config.has_group:
        settings.w_groups = ((config.M, config.N),)
    return SkeinSuite(diagrams, settings).run()


def corpus_diagrams(config: RunConfig) -> List[Tuple[str, LinkDiagram]]:
    return [(entry.name, entry.diagram()) for entry in load_corpus(config.corpus_file)]


def cmd_verify(config: RunConfig, suite: str) -> Dict:
    if suite not in SUITES:
        raise InputError(f"Unsupported suite: {suite}")
    if config.has_group:
        AlgebraContext(config.M, config.N)
    suite_methods = {
        'algebra': lambda: verify_algebra_suite(config),
        'skein': lambda: verify_skein_suite(config, corpus_diagrams(config)),
        'perturbative': lambda: verify_perturbative_suite(config, corpus_diagrams(config)),
    }
    if suite != 'all':
        return suite_methods[suite]()
    reports = {name: method() for name, method in suite_methods.items()}
    return {'suites': reports, 'passed': all(r['passed'] for r in reports.values())}


# other commands

def cmd_expand(config: RunConfig) -> Dict:
    config.require_group('expand')
    exact = make_params(config.M, config.N, 'q-exact', config.series_order, config.normalization)
    literal = make_params(config.M, config.N, 'paper-literal', config.series_order,
                          config.normalization)
    denom = exact.uniformizer_denominator
    rows = []
    for name, value in exact.values().items():
        series = expand_laurent_to_series(value, denom, config.series_order)
        rows.append({
            'param': name,
            'q_exact': render(value, denom),
            'series': render(series),
            'paper_literal': render(literal.values()[name]),
            'series_json': series.to_json(),
        })
    return {
        'M': config.M,
        'N': config.N,
        'order': config.series_order,
        'q_exact': exact.to_json(),
        'paper_literal': literal.to_json(),
        'rows': rows,
    }


def cmd_tree(config: RunConfig, name: str, d: LinkDiagram) -> Dict:
    tree = skein_tree(d, min(config.max_crossings, TREE_MAX_CROSSINGS))
    return {'name': name, 'leaves': tree.leaf_count(), 'depth': tree.depth(), 'tree': tree.to_json()}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--M', type=int)
    common.add_argument('--N', type=int)
    common.add_argument('--mode', choices=MODES, default='q-exact')
    common.add_argument('--normalization', default='unit',
                        help=f"one of {', '.join(NORMALIZATIONS)} (or unit-unknot, paper-unknot)")
    common.add_argument('--order', type=int, help='eps-series order (KNOT_SERIES_ORDER)')
    common.add_argument('--max-crossings', type=int, help='crossing ceiling (KNOT_MAX_CROSSINGS)')
    common.add_argument('--output', choices=OUTPUT_FORMATS, help='output format (KNOT_OUTPUT)')
    common.add_argument('--seed', type=int, help='sampling seed (KNOT_SEED)')
    common.add_argument('--workers', type=int, help='parallel corpus rows (KNOT_WORKERS)')

    diagram = argparse.ArgumentParser(add_help=False)
    diagram.add_argument('--braid')
    diagram.add_argument('--strands', type=int)
    diagram.add_argument('--pd-file')
    diagram.add_argument('--name')

    parser = argparse.ArgumentParser(prog='knot-skein',
                                     description='su(M|N) identities and skein link invariants')
    sub = parser.add_subparsers(dest='command', required=True)

    invariant = sub.add_parser('invariant', parents=[common, diagram])
    invariant.add_argument('--kind', choices=KINDS, default='homfly')

    verify = sub.add_parser('verify', parents=[common])
    verify.add_argument('--suite', choices=SUITES, default='all')
    verify.add_argument('--samples', type=int, help='action density samples (KNOT_ACTION_SAMPLES)')
    verify.add_argument('--field-samples', type=int, help='field equation samples (KNOT_FIELD_SAMPLES)')
    verify.add_argument('--corpus-file')

    corpus = sub.add_parser('corpus', parents=[common])
    corpus.add_argument('--kind', choices=KINDS, default='homfly')
    corpus.add_argument('--corpus-file')

    sub.add_parser('expand', parents=[common])
    sub.add_parser('tree', parents=[common, diagram])
    return parser


def config_from_args(args) -> RunConfig:
    overrides = {
        'max_crossings': args.max_crossings,
        'series_order': args.order,
        'output': args.output,
        'seed': args.seed,
        'workers': args.workers,
        'corpus_file': getattr(args, 'corpus_file', None),
        'action_samples': getattr(args, 'samples', None),
        'field_samples': getattr(args, 'field_samples', None),
    }
    return RunConfig(M=args.M, N=args.N, mode=args.mode, normalization=args.normalization,
                     **{key: value for key, value in overrides.items() if value is not None})


def cmd_corpus(config: RunConfig, kind: str) -> Dict:
    rows = asyncio.run(run_corpus(config, load_corpus(config.corpus_file), kind))
    return {'invariant': kind, 'rows': rows}


def run_command(args, config: RunConfig) -> Tuple[Dict, int]:
    if args.command == 'invariant':
        name, d = read_diagram(args)
        engine = HomflyEngine(config.max_crossings)
        return cmd_invariant(config, name, d, args.kind, engine), EXIT_OK
    if args.command == 'verify':
        report = cmd_verify(config, args.suite)
        return report, EXIT_OK if report['passed'] else EXIT_VERIFY
    if args.command == 'corpus':
        return cmd_corpus(config, args.kind), EXIT_OK
    if args.command == 'expand':
        return cmd_expand(config), EXIT_OK
    name, d = read_diagram(args)
    return cmd_tree(config, name, d), EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        config = config_from_args(args)
        data, code = run_command(args, config)
        print(ResultFormatter().format_result(data, config.output))
        return code
    except CrossingCeilingError as e:
        print(f"error: {str(e)}", file=sys.stderr)
        return EXIT_CEILING
    except (InputError, ValueError) as e:
        print(f"error: {str(e)}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        logger.error(f"Command {args.command} failed: {str(e)}")
        raise
