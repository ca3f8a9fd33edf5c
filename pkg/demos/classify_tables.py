"""Print the classification tables of three small families as markdown.

    python3 demos/classify_tables.py
"""

from __future__ import annotations

from moduli_orders import SignPattern, classify_family
from moduli_orders.classifier import export_table, summary


def main() -> None:
    for blocks in [(3, 2, 2), (4, 2, 2), (2, 4, 2)]:
        entries = classify_family(SignPattern.from_blocks(*blocks))
        print(f"## Σ_{{{','.join(map(str, blocks))}}}  ({summary(entries)})")
        print(export_table(entries, "markdown"))


if __name__ == "__main__":
    main()
