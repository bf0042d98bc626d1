import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

from src.diagram.braid import closure_of
from src.diagram.link_diagram import LinkDiagram
from src.errors import InputError

logger = logging.getLogger('Corpus')


@dataclass(frozen=True)
class CorpusEntry:
    """A named diagram given either as a braid word or as diagram JSON.

    A row that failed to parse keeps its message in ``error`` and raises it
    when its diagram is asked for.
    """

    name: str
    braid: Optional[str] = None
    pd: Optional[Dict] = None
    strands: Optional[int] = None
    error: Optional[str] = None

    def __post_init__(self):
        if self.error is not None:
            return
        if (self.braid is None) == (self.pd is None):
            raise InputError(f"Corpus entry {self.name!r} needs exactly one of braid or pd")
        if self.pd is not None and self.strands is not None:
            raise InputError(f"Corpus entry {self.name!r}: strands only apply to braids")

    def diagram(self) -> LinkDiagram:
        if self.error is not None:
            raise InputError(self.error)
        if self.braid is not None:
            return closure_of(self.braid, self.strands)
        return LinkDiagram.from_json(self.pd)

    @classmethod
    def from_json(cls, data: Dict) -> 'CorpusEntry':
        if not isinstance(data, dict):
            raise InputError(f"Corpus row must be an object, got {type(data).__name__}")
        unknown = set(data) - {'name', 'braid', 'pd', 'strands'}
        if unknown:
            raise InputError(f"Unsupported corpus fields: {sorted(unknown)}")
        strands = data.get('strands')
        if strands is not None and (isinstance(strands, bool) or not isinstance(strands, int)):
            raise InputError(f"strands must be an integer, got {strands!r}")
        return cls(name=str(data.get('name', '')), braid=data.get('braid'),
                   pd=data.get('pd'), strands=strands)

    def to_json(self) -> Dict:
        row = {'name': self.name}
        if self.error is not None:
            row['error'] = self.error
            return row
        if self.braid is not None:
            row['braid'] = self.braid
            if self.strands is not None:
                row['strands'] = self.strands
        else:
            row['pd'] = self.pd
        return row


def parse_corpus(text: str) -> List[CorpusEntry]:
    """One entry per row; a malformed row becomes an entry carrying its error."""
    entries = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        data = None
        try:
            data = json.loads(line)
            entries.append(CorpusEntry.from_json(data))
        except (json.JSONDecodeError, InputError) as e:
            name = data.get('name') if isinstance(data, dict) else None
            message = f"Corpus line {number}: {str(e)}"
            logger.warning(message)
            entries.append(CorpusEntry(name=str(name or f"line {number}"), error=message))
    return entries


def load_corpus(path: str) -> List[CorpusEntry]:
    """JSON-lines corpus; blank lines and # comments are skipped."""
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise InputError(f"Cannot read corpus file {path}: {str(e)}")
    entries = parse_corpus(text)
    logger.info(f"Loaded {len(entries)} corpus entries from {path}")
    return entries
