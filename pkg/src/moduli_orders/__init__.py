"""Realizability of couples (sign pattern, order of moduli) by hyperbolic polynomials."""

from .classifier import ClassificationEntry, ClassifyOptions, RuleId, Status, classify_family, theorem_rule_engine
from .combinatorics import Couple, ModuliOrder, SignPattern, orbit, parse_couple, parse_pattern
from .constructor import Witness
from .exact import Polynomial, RootConfiguration, moduli_order, sign_pattern

__version__ = "0.1.0"

__all__ = [
    "ClassificationEntry",
    "ClassifyOptions",
    "Couple",
    "ModuliOrder",
    "Polynomial",
    "RootConfiguration",
    "RuleId",
    "SignPattern",
    "Status",
    "Witness",
    "classify_family",
    "moduli_order",
    "orbit",
    "parse_couple",
    "parse_pattern",
    "sign_pattern",
    "theorem_rule_engine",
]
