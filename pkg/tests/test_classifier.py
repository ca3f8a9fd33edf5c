from __future__ import annotations

import csv
import io
from collections import Counter
from fractions import Fraction

import pytest

from moduli_orders import classifier
from moduli_orders.classifier import (
    ClassificationEntry,
    ClassifyOptions,
    RuleId,
    Status,
    classify_couple,
    classify_family,
    export_table,
    load_table,
    supported_patterns,
    theorem_rule_engine,
    write_witnesses,
)
from moduli_orders.combinatorics import (
    Couple,
    ModuliOrder,
    SignPattern,
    apply_ir,
    canonical_couple,
    enumerate_couples,
    orbit,
    parse_couple,
)
from moduli_orders.constructor import Witness
from moduli_orders.errors import SoundnessViolation
from moduli_orders.exact import RootConfiguration

NO_SEARCH = ClassifyOptions(search=False)


def test_rule_engine_examples():
    d = theorem_rule_engine(parse_couple("S4,2,2 (2,2,1)"))
    assert not d.realizable and d.rule is RuleId.T1P3
    d = theorem_rule_engine(parse_couple("S2,4,2 (0,2,3)"))
    assert not d.realizable and d.rule is RuleId.T2P2
    d = theorem_rule_engine(parse_couple("S2,2,4 (1,2,2)"))
    assert not d.realizable and d.rule is RuleId.IR_TRANSFER
    assert d.base == parse_couple("S4,2,2 (2,2,1)") and d.base_rule is RuleId.T1P3


def test_rule_engine_w_bound():
    d = theorem_rule_engine(parse_couple("S5,2,2 (3,3,0)"))
    assert not d.realizable and d.rule is RuleId.T1P1
    assert theorem_rule_engine(parse_couple("S5,2,2 (0,4,2)")).realizable


def test_rule_engine_leaves_open_cases_open():
    assert theorem_rule_engine(parse_couple("S2,2,2 (1,1,1)")) is None
    assert theorem_rule_engine(parse_couple("S3,3,3 (1,1,4)")) is None


def test_sigma121_is_not_canonical_only():
    # (x-1)(x-2)(x+5/2) = x^3 - 1/2 x^2 - 11/2 x + 5 realizes + - - + with order PPN
    couple = Couple(SignPattern.from_blocks(1, 2, 1), ModuliOrder("PPN"))
    wit = Witness.build(couple, RootConfiguration.from_values([1, 2, Fraction(-5, 2)]))
    assert wit.verified
    assert theorem_rule_engine(couple) is None


def counts(entries):
    return Counter(e.status for e in entries)


def test_sigma322_table():
    entries = classify_family(SignPattern.from_blocks(3, 2, 2), NO_SEARCH)
    assert len(entries) == 15
    assert counts(entries) == {Status.REALIZABLE: 11, Status.NON_REALIZABLE: 4}
    non = sorted(e.code for e in entries if e.status is Status.NON_REALIZABLE)
    assert non == [(1, 3, 0), (2, 2, 0), (3, 1, 0), (4, 0, 0)]
    assert all(e.rule is RuleId.T1P3 for e in entries if e.status is Status.NON_REALIZABLE)


def test_sigma242_table():
    entries = classify_family(SignPattern.from_blocks(2, 4, 2), NO_SEARCH)
    assert counts(entries) == {Status.REALIZABLE: 9, Status.NON_REALIZABLE: 12}
    for e in entries:
        u, _, w = e.code
        assert (e.status is Status.REALIZABLE) == (u <= 2 and w <= 2)


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8, 9])
def test_sigma_m22_rules_are_complete(m):
    pattern = SignPattern.from_blocks(m, 2, 2)
    decisions = [theorem_rule_engine(c) for c in enumerate_couples(pattern)]
    assert all(d is not None for d in decisions)
    realizable = [c.code for c, d in zip(enumerate_couples(pattern), decisions) if d.realizable]
    assert len(realizable) == 11
    # couples with w >= m-3: exactly 15 for every degree
    assert sum(1 for c in enumerate_couples(pattern) if c.code[2] >= m - 3) == 15


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_sigma_2n2_and_images_complete(n):
    for pattern in (SignPattern.from_blocks(2, n, 2), SignPattern.from_blocks(n, 2, 2)):
        ir_pattern = apply_ir(canonical_couple(pattern)).pattern
        for p in (pattern, ir_pattern):
            assert all(theorem_rule_engine(c) is not None for c in enumerate_couples(p))


def test_sigma_m22_degree8_table():
    entries = classify_family(SignPattern.from_blocks(5, 2, 2), NO_SEARCH)
    assert counts(entries) == {Status.REALIZABLE: 11, Status.NON_REALIZABLE: 17}
    assert all(e.witness.verified for e in entries if e.status is Status.REALIZABLE)


def test_canonical_only_families():
    for blocks in [(1, 3, 1), (1, 4, 1), (3, 1, 2), (2, 1, 4)]:
        entries = classify_family(SignPattern.from_blocks(*blocks), NO_SEARCH)
        real = [e for e in entries if e.status is Status.REALIZABLE]
        assert len(real) == 1 and real[0].couple == canonical_couple(real[0].couple.pattern)
        assert all(e.rule is RuleId.CANONICAL_ONLY for e in entries)


def test_every_supported_pattern_realizes_its_canonical_couple():
    for pattern in supported_patterns(8, images=False):
        entry = classify_couple(canonical_couple(pattern), NO_SEARCH)
        assert entry.status is Status.REALIZABLE and entry.witness.verified


def test_orbit_coherence_up_to_degree7():
    status = {}
    for pattern in supported_patterns(7):
        for e in classify_family(pattern, NO_SEARCH):
            status[e.couple] = e.status
    assert Status.UNKNOWN not in status.values()
    for c, s in status.items():
        assert all(status[o] is s for o in orbit(c))


def test_unsupported_pattern_without_search_is_unknown():
    entries = classify_family(SignPattern.from_blocks(2, 2, 2), NO_SEARCH)
    undecided = [e for e in entries if e.status is Status.UNKNOWN]
    assert undecided and all(e.rule is None for e in undecided)
    # the canonical couple is still constructed
    assert any(e.status is Status.REALIZABLE for e in entries)


def test_unsupported_pattern_with_search():
    entries = classify_family(SignPattern.from_blocks(1, 2, 1), ClassifyOptions(restarts=50, iterations=500))
    assert all(e.status is Status.REALIZABLE for e in entries)


def test_search_witness_against_rule_is_fatal(monkeypatch):
    realizable = classify_couple(parse_couple("S3,2,2 (0,4,0)"), NO_SEARCH).witness
    impossible = parse_couple("S3,2,2 (4,0,0)")
    forged = Witness(impossible, realizable.config, realizable.poly, True)
    monkeypatch.setattr(classifier, "_searched", lambda c, options: forged)
    with pytest.raises(SoundnessViolation):
        classify_couple(impossible, ClassifyOptions(cross_check=True))
    with pytest.raises(SoundnessViolation):
        classifier.soundness_sweep([impossible.pattern], NO_SEARCH)


def test_cross_check_passes_for_true_rules():
    entry = classify_couple(parse_couple("S3,2,2 (4,0,0)"), ClassifyOptions(cross_check=True, restarts=10, iterations=200))
    assert entry.status is Status.NON_REALIZABLE


def test_entry_invariants():
    c = parse_couple("S3,2,2 (4,0,0)")
    with pytest.raises(ValueError):
        ClassificationEntry(c, Status.NON_REALIZABLE)
    with pytest.raises(ValueError):
        ClassificationEntry(c, Status.REALIZABLE, RuleId.T1P2)


def test_export_csv():
    entries = classify_family(SignPattern.from_blocks(3, 2, 2), NO_SEARCH)
    text = export_table(entries, "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 15
    assert list(rows[0]) == ["pattern", "order", "u", "v", "w", "status", "rule", "witness_file"]
    assert [(int(r["u"]), int(r["v"]), int(r["w"])) for r in rows] == sorted(e.code for e in entries)


def test_export_empty_is_header_only():
    assert export_table([], "csv") == "pattern,order,u,v,w,status,rule,witness_file\n"
    assert export_table([], "markdown").count("\n") == 2
    assert load_table(export_table([], "json")) == []


def test_json_round_trip(tmp_path):
    entries = classify_family(SignPattern.from_blocks(2, 4, 2), NO_SEARCH)
    entries = write_witnesses(entries, tmp_path)
    again = load_table(export_table(entries, "json"))
    assert again == entries
    assert [e.witness.poly for e in again if e.witness] == [e.witness.poly for e in entries if e.witness]
    assert all((tmp_path / e.witness_file.split("/")[-1]).is_file() for e in entries if e.witness)


def test_export_rejects_unknown_format():
    with pytest.raises(ValueError):
        export_table([], "xml")


def test_parallel_matches_serial():
    pattern = SignPattern.from_blocks(2, 4, 2)
    serial = classify_family(pattern, NO_SEARCH)
    parallel = classify_family(pattern, ClassifyOptions(search=False, workers=2))
    assert export_table(serial, "json") == export_table(parallel, "json")


def test_degree_cap():
    with pytest.raises(ValueError):
        classify_family(SignPattern.from_blocks(11, 2, 2), NO_SEARCH)
