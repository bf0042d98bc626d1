import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from src.errors import InputError
from src.skein.params import normalize_mode, normalize_normalization

load_dotenv()

BACKEND_ROOT = Path(__file__).resolve().parent.parent.parent
DEFAULT_CORPUS_FILE = str(BACKEND_ROOT / 'data' / 'corpus.jsonl')
OUTPUT_FORMATS = ('json', 'table')


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}")


@dataclass
class RunConfig:
    """Run settings; environment values are defaults that CLI flags override."""

    M: Optional[int] = None
    N: Optional[int] = None
    mode: str = 'q-exact'
    normalization: str = 'unit'
    max_crossings: int = field(default_factory=lambda: _env_int('KNOT_MAX_CROSSINGS', 14))
    series_order: int = field(default_factory=lambda: _env_int('KNOT_SERIES_ORDER', 2))
    output: str = field(default_factory=lambda: os.getenv('KNOT_OUTPUT', 'json'))
    corpus_file: str = field(default_factory=lambda: os.getenv('KNOT_CORPUS_FILE', DEFAULT_CORPUS_FILE))
    workers: int = field(default_factory=lambda: _env_int('KNOT_WORKERS', 4))
    action_samples: int = field(default_factory=lambda: _env_int('KNOT_ACTION_SAMPLES', 100))
    field_samples: int = field(default_factory=lambda: _env_int('KNOT_FIELD_SAMPLES', 20))
    seed: int = field(default_factory=lambda: _env_int('KNOT_SEED', 2024))

    def __post_init__(self):
        self.mode = normalize_mode(self.mode)
        self.normalization = normalize_normalization(self.normalization)
        if self.output not in OUTPUT_FORMATS:
            raise InputError(f"Unsupported output: {self.output}")
        if self.max_crossings < 0:
            raise InputError(f"Crossing ceiling must be non-negative, got {self.max_crossings}")
        if self.workers < 1:
            raise InputError(f"Worker count must be positive, got {self.workers}")
        if (self.M is None) != (self.N is None):
            raise InputError("M and N must be given together")

    @property
    def has_group(self) -> bool:
        return self.M is not None

    def require_group(self, purpose: str):
        if not self.has_group:
            raise InputError(f"{purpose} needs --M and --N")
        if self.M == self.N:
            raise InputError(f"{purpose} needs M != N, got M = N = {self.M}")
