from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional


@dataclass
class IdentityResult:
    """Pass/fail counts of one checked identity, keeping the first counterexample."""

    identity: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    counterexample: Optional[Dict] = None
    mode: str = 'exhaustive'

    def record(self, ok: bool, indices: Iterable = (), expected=None, actual=None):
        self.checked += 1
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.counterexample is None:
            self.counterexample = {
                'indices': list(indices),
                'expected': str(expected),
                'actual': str(actual),
            }

    def to_json(self) -> Dict:
        return {
            'identity': self.identity,
            'mode': self.mode,
            'checked': self.checked,
            'passed': self.passed,
            'failed': self.failed,
            'counterexample': self.counterexample,
        }


def all_passed(results: List[IdentityResult]) -> bool:
    return all(not r.failed for r in results)
