"""Inspect a polynomial, then realize and transport a couple.

    python3 demos/walkthrough.py
"""

from __future__ import annotations

from moduli_orders import Polynomial, orbit, parse_couple, theorem_rule_engine
from moduli_orders.classifier import classify_couple
from moduli_orders.exact import is_hyperbolic, moduli_order, sign_pattern


def main() -> None:
    poly = Polynomial.parse("x^3+1/2x^2-11/2x-5")
    print("polynomial   ", poly)
    print("hyperbolic   ", is_hyperbolic(poly))
    print("sign pattern ", sign_pattern(poly).text())
    print("moduli order ", moduli_order(poly).word)

    couple = parse_couple("S2,2,4 (1,2,2)")
    decision = theorem_rule_engine(couple)
    print()
    print(couple.text(), "->", "realizable" if decision.realizable else "not realizable")
    print("  by", decision.citation())

    # every image of a realizable couple carries its own exact witness
    print()
    for image in sorted(orbit(parse_couple("S2,4,2 (2,2,1)")), key=lambda c: c.text()):
        entry = classify_couple(image)
        print(f"{image.text():<28} {entry.status.value:<12} {entry.rule.value:<12} verified={entry.witness.verified}")


if __name__ == "__main__":
    main()
