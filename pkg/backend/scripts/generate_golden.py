 ### Regenerate the golden invariant files from the shipped corpus


import asyncio
import json
from pathlib import Path
import sys

# Add project root to Python path
project_root = str(Path(__file__).parent.parent)  # go up 1 parent from scripts to backend
sys.path.append(project_root)


from src.cli.corpus import load_corpus
from src.cli.settings import DEFAULT_CORPUS_FILE
from src.skein.engine import HomflyEngine, NaiveHomflyEngine
from src.skein.invariants import jones, w_invariant
from src.skein.params import make_params

GOLDEN_DIR = Path(project_root) / 'tests' / 'golden'


def write_golden(filename: str, header: dict, entries: dict):
    path = GOLDEN_DIR / filename
    path.write_text(json.dumps({**header, 'entries': entries}, indent=2, sort_keys=True) + '\n',
                    encoding='utf-8')
    print(f"Wrote {path}")


async def main():
    try:
        print("Loading corpus...")
        diagrams = [(entry.name, entry.diagram()) for entry in load_corpus(DEFAULT_CORPUS_FILE)]
        engine, naive = HomflyEngine(), NaiveHomflyEngine()

        # values are frozen only once the naive oracle agrees
        homfly_entries = {}
        for name, d in diagrams:
            value = await asyncio.to_thread(engine.homfly, d)
            if value != naive.homfly(d):
                raise RuntimeError(f"Memoized and naive engines disagree on {name}")
            homfly_entries[name] = value.to_json()
        write_golden('homfly_unit.json', {'invariant': 'homfly', 'normalization': 'unit'},
                     homfly_entries)

        write_golden('jones.json', {'invariant': 'jones', 'uniformizer': 'q^(1/4)'},
                     {name: jones(d, engine).to_json() for name, d in diagrams})

        params = make_params(3, 1)
        write_golden('w_su3_1.json',
                     {'invariant': 'w', 'M': 3, 'N': 1, 'mode': 'q-exact', 'uniformizer': 'q^(1/4)'},
                     {name: w_invariant(d, params, engine).to_json() for name, d in diagrams})
        print(f"\nGolden files regenerated. Memo: {engine.stats()}")

    except Exception as e:
        print(f"Error generating golden files: {e}")
        raise

if __name__ == "__main__":
    asyncio.run(main())
