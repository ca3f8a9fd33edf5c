"""Rebuild the shipped degree-6 witnesses by seeded search.

    python3 demos/regenerate_bases.py [--seed 0] [--out path]

With the default seed the output matches the packaged file byte for byte.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from moduli_orders.search import build_degree6_bases

PACKAGED = Path(__file__).resolve().parents[1] / "src" / "moduli_orders" / "bases" / "degree6_sigma322.json"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", type=Path)
    args = parser.parse_args()

    text = json.dumps(build_degree6_bases(args.seed), indent=2, sort_keys=True) + "\n"
    if args.out:
        args.out.write_text(text)
    else:
        print(text, end="")
    if PACKAGED.is_file():
        print("matches packaged bases:", text == PACKAGED.read_text(), flush=True)


if __name__ == "__main__":
    main()
