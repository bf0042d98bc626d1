import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.diagram.link_diagram import LinkDiagram
from src.exact_arith.laurent import specialize
from src.report import IdentityResult, all_passed
from src.skein.bracket import jones_via_bracket
from src.skein.engine import (
    HomflyEngine, NaiveHomflyEngine, TREE_MAX_CROSSINGS, evaluate_tree, skein_tree,
)
from src.skein.invariants import reidemeister_audit, verify_skein, w_invariant
from src.skein.params import SkeinParams, make_params

ORACLE_MAX_CROSSINGS = 8
SKEIN_AUDIT_MAX_CROSSINGS = 9

Named = Tuple[str, LinkDiagram]


@dataclass
class SkeinSuiteSettings:
    w_groups: Sequence[Tuple[int, int]] = ((3, 1), (4, 1))
    reidemeister_moves: int = 100
    seed: int = 2024
    max_crossings: int = 14


class SkeinSuite:
    """Skein relation, oracle, mirror, writhe and Reidemeister checks over a corpus."""

    def __init__(self, diagrams: List[Named], settings: Optional[SkeinSuiteSettings] = None,
                 engine: Optional[HomflyEngine] = None):
        self.diagrams = diagrams
        self.settings = settings or SkeinSuiteSettings()
        self.engine = engine or HomflyEngine(self.settings.max_crossings)
        self.naive = NaiveHomflyEngine(self.settings.max_crossings)
        self.params: List[SkeinParams] = [make_params(M, N) for M, N in self.settings.w_groups]
        self.logger = logging.getLogger('SkeinSuite')

    def _audited(self, limit: int) -> List[Named]:
        return [(name, d) for name, d in self.diagrams if d.crossing_count <= limit]

    def check_skein_relations(self) -> List[IdentityResult]:
        results = [IdentityResult('skein_relation_homfly'), IdentityResult('skein_relation_jones')]
        results.extend(IdentityResult(f"skein_relation_w_su({p.M}|{p.N})") for p in self.params)
        for name, d in self._audited(SKEIN_AUDIT_MAX_CROSSINGS):
            for c in range(d.crossing_count):
                results[0].record(verify_skein(d, c, 'homfly', homfly_engine=self.engine), (name, c))
                results[1].record(verify_skein(d, c, 'jones', homfly_engine=self.engine), (name, c))
                for result, p in zip(results[2:], self.params):
                    result.record(verify_skein(d, c, 'w', p, self.engine), (name, c))
        return results

    def check_oracles(self) -> List[IdentityResult]:
        naive = IdentityResult('oracle_naive_homfly')
        bracket = IdentityResult('oracle_kauffman_bracket')
        tree = IdentityResult('oracle_skein_tree')
        for name, d in self._audited(ORACLE_MAX_CROSSINGS):
            memo_value = self.engine.homfly(d)
            naive_value = self.naive.homfly(d)
            naive.record(memo_value == naive_value, (name,), naive_value, memo_value)
            jones_value = specialize(memo_value, 2)
            state_sum = jones_via_bracket(d)
            bracket.record(jones_value == state_sum, (name,), state_sum, jones_value)
            if d.crossing_count <= TREE_MAX_CROSSINGS:
                node = skein_tree(d)
                tree_value = evaluate_tree(node)
                bounded = node.depth() <= d.crossing_count
                tree.record(bounded and tree_value == memo_value, (name,), memo_value, tree_value)
        return [naive, bracket, tree]

    def check_mirror_law(self) -> IdentityResult:
        result = IdentityResult('mirror_law')
        for name, d in self.diagrams:
            expected = self.engine.homfly(d).mirror()
            actual = self.engine.homfly(d.mirror())
            result.record(actual == expected, (name,), expected, actual)
        return result

    def check_writhe_normalization(self) -> IdentityResult:
        """W against alpha^writhe times the naive engine's specialized HOMFLY."""
        result = IdentityResult('writhe_normalization')
        for name, d in self._audited(ORACLE_MAX_CROSSINGS):
            for p in self.params:
                expected = p.alpha ** d.writhe() * specialize(self.naive.homfly(d, 'paper'), p.mn)
                actual = w_invariant(d, p, self.engine)
                result.record(actual == expected, (name, p.M, p.N), expected, actual)
        return result

    def check_difference_family(self) -> IdentityResult:
        """W depends on M and N only through M - N."""
        result = IdentityResult('difference_family')
        for name, d in self.diagrams:
            for p in self.params:
                shifted = make_params(p.M + 1, p.N + 1)
                expected = w_invariant(d, p, self.engine)
                actual = w_invariant(d, shifted, self.engine)
                result.record(actual == expected, (name, shifted.M, shifted.N), expected, actual)
        return result

    def check_reidemeister(self) -> List[IdentityResult]:
        rng = random.Random(self.settings.seed)
        return reidemeister_audit(
            [d for _, d in self._audited(SKEIN_AUDIT_MAX_CROSSINGS)],
            self.settings.reidemeister_moves, self.params[0] if self.params else make_params(3, 1),
            rng, engine=self.engine,
        )

    def run(self) -> Dict:
        self.logger.info(f"Running skein suite over {len(self.diagrams)} diagrams")
        try:
            results = [
                *self.check_skein_relations(),
                *self.check_oracles(),
                self.check_mirror_law(),
                self.check_writhe_normalization(),
                self.check_difference_family(),
                *self.check_reidemeister(),
            ]
        except Exception as e:
            self.logger.error(f"Skein suite aborted: {str(e)}")
            raise
        for r in results:
            if r.failed:
                self.logger.warning(f"{r.identity}: {r.failed} of {r.checked} checks failed")
        self.logger.info(f"Memo statistics: {self.engine.stats()}")
        return {
            'diagrams': [name for name, _ in self.diagrams],
            'identities': [r.to_json() for r in results],
            'passed': all_passed(results),
        }
