"""Realizability tables for families of sign patterns with two sign changes.

The rule engine decides couples of the supported families directly and
decides their ``i_r``/``i_m`` images by transporting them back along the
orbit. Realizable verdicts are backed by exactly verified witnesses: explicit
constructions first, numerical search as a fallback. A witness for a couple
that a rule declares impossible aborts with :class:`SoundnessViolation`.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Optional

from .combinatorics import (
    Couple,
    SignPattern,
    apply_im,
    apply_ir,
    canonical_order,
    enumerate_couples,
)
from .constructor import (
    Witness,
    all_negative_witness,
    canonical_witness,
    realize_sigma_2n2,
    realize_sigma_m22,
    transform_im,
    transform_ir,
)
from .errors import SoundnessViolation
from .search import SearchSpec, search_realization

__all__ = [
    "RuleId",
    "Status",
    "Decision",
    "ClassificationEntry",
    "ClassifyOptions",
    "theorem_rule_engine",
    "build_witness",
    "classify_couple",
    "classify_family",
    "export_table",
    "load_table",
    "supported_patterns",
    "is_supported",
    "soundness_sweep",
    "summary",
    "write_witnesses",
]

MAX_DEGREE = 12


class RuleId(str, enum.Enum):
    T1P1 = "T1P1"
    T1P2 = "T1P2"
    T1P3 = "T1P3"
    T2P1 = "T2P1"
    T2P2 = "T2P2"
    CANONICAL_ONLY = "CANONICAL_ONLY"
    IR_TRANSFER = "IR_TRANSFER"
    IM_TRANSFER = "IM_TRANSFER"

    @property
    def citation(self) -> str:
        return _CITATIONS[self]


_CITATIONS = {
    RuleId.T1P1: "Σ_{m,2,2}, d >= 7: only couples with w >= m-3 can be realizable",
    RuleId.T1P2: "Σ_{m,2,2}, d >= 6: triples with u+v <= 3 and (0,4,m-3) are realizable",
    RuleId.T1P3: "Σ_{m,2,2}, d >= 6: (4,0,m-3), (3,1,m-3), (2,2,m-3), (1,3,m-3) are not realizable",
    RuleId.T2P1: "Σ_{2,n,2}, n >= 4: couples with u <= 2 and w <= 2 are realizable",
    RuleId.T2P2: "Σ_{2,n,2}, n >= 4: couples with u >= 3 or w >= 3 are not realizable",
    RuleId.CANONICAL_ONLY: "Σ_{1,n,1} (n != 2) and Σ_{m,1,q} are realizable only with their canonical order",
    RuleId.IR_TRANSFER: "couples related by i_r are simultaneously (non)-realizable",
    RuleId.IM_TRANSFER: "couples related by i_m are simultaneously (non)-realizable",
}


class Status(str, enum.Enum):
    REALIZABLE = "Realizable"
    NON_REALIZABLE = "NonRealizable"
    SEARCH_FAILED = "SearchFailed"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Decision:
    """A rule verdict. For transfers, ``base`` is the couple the direct rule decided."""

    realizable: bool
    rule: RuleId
    base: Optional[Couple] = None
    base_rule: Optional[RuleId] = None
    path: tuple[str, ...] = ()  # involutions taking ``base`` to the couple, e.g. ("ir",)

    def citation(self) -> str:
        if self.base is None:
            return f"{self.rule.value}: {self.rule.citation}"
        return f"{self.rule.value} from {self.base.text()} [{self.base_rule.value}: {self.base_rule.citation}]"


# ---------------------------------------------------------------------------
# Rule engine


def _direct(c: Couple) -> Optional[Decision]:
    pattern = c.pattern
    if pattern.changes != 2 or c.order.word.count("P") != 2 or len(pattern.blocks) != 3:
        return None
    m, n, q = pattern.blocks
    u, v, w = c.order.code
    # Σ_{1,2,1} = + - - + is excluded: (x-1)(x-2)(x+5/2) realizes it with the
    # non-canonical order PPN
    if n == 1 or (m == 1 and q == 1 and n != 2):
        return Decision(c.order == canonical_order(pattern), RuleId.CANONICAL_ONLY)
    if n == 2 and q == 2 and m >= 3:
        if m >= 4 and w <= m - 4:
            return Decision(False, RuleId.T1P1)
        if w == m - 3 and (u, v) in ((4, 0), (3, 1), (2, 2), (1, 3)):
            return Decision(False, RuleId.T1P3)
        if u + v <= 3 or (u, v, w) == (0, 4, m - 3):
            return Decision(True, RuleId.T1P2)
        raise AssertionError(f"Σ_{{m,2,2}} rules are exhaustive but missed {c.text()}")
    if m == 2 and q == 2 and n >= 4:
        if u <= 2 and w <= 2:
            return Decision(True, RuleId.T2P1)
        return Decision(False, RuleId.T2P2)
    return None


def theorem_rule_engine(c: Couple) -> Optional[Decision]:
    """Decide ``c`` by a theorem rule, directly or through its orbit.

    Orbit images are tried in the order ``i_r``, ``i_m``, ``i_r i_m``; the
    first image a direct rule decides supplies the verdict.
    """
    direct = _direct(c)
    if direct is not None:
        return direct
    ir = apply_ir(c)
    im = apply_im(c)
    candidates = [
        (ir, RuleId.IR_TRANSFER, ("ir",)),
        (im, RuleId.IM_TRANSFER, ("im",)),
        (apply_ir(im), RuleId.IM_TRANSFER, ("ir", "im")),
    ]
    for image, rule, path in candidates:
        d = _direct(image)
        if d is not None:
            return Decision(d.realizable, rule, image, d.rule, path)
    return None


def is_supported(pattern: SignPattern) -> bool:
    """Whether every compatible couple of ``pattern`` is decided by the rule engine."""
    return all(theorem_rule_engine(c) is not None for c in enumerate_couples(pattern))


def supported_patterns(max_degree: int, images: bool = True) -> list[SignPattern]:
    """Supported patterns of degree ``<= max_degree``, optionally with their i_m images."""
    found: set[SignPattern] = set()
    for d in range(2, max_degree + 1):
        for m in range(1, d):
            for n in range(1, d - m + 1):
                q = d + 1 - m - n
                if q < 1:
                    continue
                pattern = SignPattern.from_blocks(m, n, q)
                if _direct(Couple(pattern, canonical_order(pattern))) is not None or (
                    _direct(apply_ir(Couple(pattern, canonical_order(pattern)))) is not None
                ):
                    found.add(pattern)
    if images:
        found |= {apply_im(Couple(p, canonical_order(p))).pattern for p in found}
    return sorted(found, key=lambda p: (p.degree, p.blocks, p.signs))


# ---------------------------------------------------------------------------
# Witnesses


def _constructive(c: Couple) -> Optional[Witness]:
    pattern = c.pattern
    if c.order == canonical_order(pattern):
        return canonical_witness(pattern)
    if pattern.changes == 0:
        return all_negative_witness(pattern.degree)
    if len(pattern.blocks) != 3 or c.order.word.count("P") != 2:
        return None
    m, n, q = pattern.blocks
    code = c.order.code
    if n == 2 and q == 2 and m >= 3:
        return realize_sigma_m22(m, code)
    if m == 2 and q == 2 and n >= 4 and code[0] <= 2 and code[2] <= 2:
        return realize_sigma_2n2(n, code)
    return None


def build_witness(c: Couple, decision: Optional[Decision] = None) -> Optional[Witness]:
    """Explicit construction for ``c``, transporting along the orbit if needed."""
    wit = _constructive(c)
    if wit is not None:
        return wit
    if decision is None:
        decision = theorem_rule_engine(c)
    if decision is None or decision.base is None:
        return None
    base = _constructive(decision.base)
    if base is None:
        return None
    for step in decision.path:
        base = transform_ir(base) if step == "ir" else transform_im(base)
    if base.couple != c:
        raise AssertionError(f"orbit transport reached {base.couple.text()}, expected {c.text()}")
    return base


# ---------------------------------------------------------------------------
# Entries


@dataclass(frozen=True)
class ClassificationEntry:
    couple: Couple
    status: Status
    rule: Optional[RuleId] = None
    provenance: str = ""
    witness: Optional[Witness] = field(default=None, compare=False)
    witness_file: Optional[str] = None

    def __post_init__(self) -> None:
        if self.status is Status.REALIZABLE and (self.witness is None or not self.witness.verified):
            raise ValueError(f"realizable entry {self.couple.text()} lacks a verified witness")
        if self.status is Status.NON_REALIZABLE and self.rule is None:
            raise ValueError(f"non-realizable entry {self.couple.text()} must cite a rule")

    @property
    def code(self) -> tuple[int, ...]:
        return self.couple.code

    def row(self) -> dict:
        code = list(self.code) + [""] * (3 - len(self.code))
        return {
            "pattern": self.couple.pattern.label(),
            "order": self.couple.order.word,
            "u": code[0],
            "v": code[1],
            "w": code[2],
            "status": self.status.value,
            "rule": "" if self.rule is None else self.rule.value,
            "witness_file": self.witness_file or "",
        }

    def to_dict(self) -> dict:
        return {
            "couple": self.couple.to_dict(),
            "status": self.status.value,
            "rule": None if self.rule is None else self.rule.value,
            "provenance": self.provenance,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "witness_file": self.witness_file,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClassificationEntry":
        wit = data.get("witness")
        return cls(
            Couple.from_dict(data["couple"]),
            Status(data["status"]),
            None if data.get("rule") is None else RuleId(data["rule"]),
            data.get("provenance", ""),
            None if wit is None else Witness.from_dict(wit, recheck=True),
            data.get("witness_file"),
        )


@dataclass(frozen=True)
class ClassifyOptions:
    seed: int = 0
    restarts: int = 200
    iterations: int = 2000
    denominator_bound: int = 10**6
    search: bool = True  # search couples no rule or construction settles
    cross_check: bool = False  # also search rule-impossible couples, expecting failure
    workers: int = 1
    max_degree: int = MAX_DEGREE

    def search_spec(self, c: Couple) -> SearchSpec:
        return SearchSpec(c, self.restarts, self.iterations, self.seed, self.denominator_bound)


def _searched(c: Couple, options: ClassifyOptions) -> Optional[Witness]:
    return search_realization(options.search_spec(c)).witness


def classify_couple(c: Couple, options: ClassifyOptions = ClassifyOptions()) -> ClassificationEntry:
    """Decide one couple; rules win, witnesses must agree with them."""
    decision = theorem_rule_engine(c)
    if decision is not None and not decision.realizable:
        if options.cross_check:
            wit = _searched(c, options)
            if wit is not None:
                raise SoundnessViolation(
                    f"search produced a verified witness for {c.text()}, ruled out by {decision.citation()}"
                )
        return ClassificationEntry(c, Status.NON_REALIZABLE, decision.rule, decision.citation())

    wit = build_witness(c, decision)
    how = "construction"
    if wit is None and options.search:
        wit = _searched(c, options)
        how = "search"
    if wit is not None:
        if not wit.verified or wit.couple != c:
            raise AssertionError(f"witness for {c.text()} does not realize it")
        rule = None if decision is None else decision.rule
        prov = how if decision is None else f"{how}; {decision.citation()}"
        return ClassificationEntry(c, Status.REALIZABLE, rule, prov, wit)
    if decision is not None:
        # a proved-realizable couple we failed to witness: report it, do not guess
        return ClassificationEntry(c, Status.SEARCH_FAILED, decision.rule, f"no witness within budget; {decision.citation()}")
    status = Status.SEARCH_FAILED if options.search else Status.UNKNOWN
    return ClassificationEntry(c, status, None, "no rule applies" + ("; search exhausted" if options.search else ""))


def classify_family(pattern: SignPattern, options: ClassifyOptions = ClassifyOptions()) -> list[ClassificationEntry]:
    """Classify every compatible couple of ``pattern``, sorted by code."""
    if pattern.degree > options.max_degree:
        raise ValueError(f"degree {pattern.degree} exceeds the enumeration cap {options.max_degree}")
    couples = enumerate_couples(pattern)
    if options.workers > 1:
        with ProcessPoolExecutor(max_workers=options.workers) as pool:
            entries = list(pool.map(classify_couple, couples, [options] * len(couples)))
    else:
        entries = [classify_couple(c, options) for c in couples]
    _check_orbits(entries, options)
    return sorted(entries, key=lambda e: e.code)


def _check_orbits(entries: list[ClassificationEntry], options: ClassifyOptions) -> None:
    """Every decided status must match the rule verdict of every orbit image."""
    for e in entries:
        if e.status not in (Status.REALIZABLE, Status.NON_REALIZABLE):
            continue
        for image in (apply_ir(e.couple), apply_im(e.couple), apply_ir(apply_im(e.couple))):
            d = theorem_rule_engine(image)
            if d is not None and d.realizable != (e.status is Status.REALIZABLE):
                raise SoundnessViolation(f"{e.couple.text()} is {e.status.value} but its image {image.text()} is not")


def soundness_sweep(
    patterns: Iterable[SignPattern],
    options: ClassifyOptions,
    progress: Optional[Callable[[Couple], None]] = None,
) -> int:
    """Search every rule-impossible couple of ``patterns``; return how many were checked.

    Raises :class:`SoundnessViolation` on the first verified witness.
    """
    checked = 0
    for pattern in patterns:
        for c in enumerate_couples(pattern):
            d = theorem_rule_engine(c)
            if d is None or d.realizable:
                continue
            if progress is not None:
                progress(c)
            if _searched(c, options) is not None:
                raise SoundnessViolation(f"search realized {c.text()}, ruled out by {d.citation()}")
            checked += 1
    return checked


# ---------------------------------------------------------------------------
# Export

COLUMNS = ["pattern", "order", "u", "v", "w", "status", "rule", "witness_file"]


def _witness_name(e: ClassificationEntry) -> str:
    code = "-".join(str(k) for k in e.code)
    blocks = "-".join(str(b) for b in e.couple.pattern.blocks)
    return f"S{blocks}_{code}.json"


def write_witnesses(entries: list[ClassificationEntry], directory: Path) -> list[ClassificationEntry]:
    """Write each witness to ``directory`` and return entries pointing at the files."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for e in entries:
        if e.witness is None:
            out.append(e)
            continue
        path = directory / _witness_name(e)
        path.write_text(e.witness.dumps() + "\n", encoding="utf-8")
        out.append(replace(e, witness_file=str(path)))
    return out


def export_table(entries: Iterable[ClassificationEntry], fmt: str = "csv", path: Optional[Path] = None) -> str:
    """Render entries as ``json``, ``csv`` or ``markdown``, sorted by code; write to ``path`` if given."""
    entries = sorted(entries, key=lambda e: (e.couple.pattern.blocks, e.code))
    if fmt == "json":
        text = json.dumps([e.to_dict() for e in entries], indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        for e in entries:
            writer.writerow(e.row())
        text = buf.getvalue()
    elif fmt == "markdown":
        lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
        for e in entries:
            row = e.row()
            lines.append("| " + " | ".join(str(row[k]) for k in COLUMNS) + " |")
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}; expected json, csv or markdown")
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def load_table(text: str) -> list[ClassificationEntry]:
    """Inverse of ``export_table(..., "json")``; witnesses are re-verified."""
    return [ClassificationEntry.from_dict(item) for item in json.loads(text)]


def summary(entries: Iterable[ClassificationEntry]) -> dict[str, int]:
    counts = {s.value: 0 for s in Status}
    for e in entries:
        counts[e.status.value] += 1
    return counts

