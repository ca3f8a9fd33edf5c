"""Acceptance checks, one test per criterion.

Run alone with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

from __future__ import annotations

import time
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from moduli_orders.certificates import (
    IDENTITY_CATALOG,
    SAMPLED_CATALOG,
    CertificateSpec,
    CubicTriple,
    b12_a_prime,
    b12_a_second,
    check_identity,
    cubic_discriminant,
    run_certificate,
)
from moduli_orders.classifier import (
    ClassifyOptions,
    RuleId,
    Status,
    classify_family,
    soundness_sweep,
    supported_patterns,
    theorem_rule_engine,
)
from moduli_orders.combinatorics import Couple, ModuliOrder, SignPattern, enumerate_couples, order_from_code, orbit
from moduli_orders.constructor import Witness, canonical_witness, concatenate, realize_sigma_2n2, verify
from moduli_orders.exact import RootConfiguration, expand, moduli_order, sign_pattern
from moduli_orders.search import SearchSpec, search_realization

criterion = pytest.mark.criterion


def _statuses(entries):
    return Counter(e.status for e in entries)


def _assert_witnessed(entries):
    for e in entries:
        if e.status is Status.REALIZABLE:
            # independent re-check of the stored polynomial against the couple
            assert e.witness.poly == expand(e.witness.config)
            assert verify(e.witness.poly, e.couple)


@criterion(1, "classify S3,2,2: 15 entries, 11 witnessed, 4 by T1P3, < 2 min")
def test_criterion_1_sigma322():
    start = time.perf_counter()
    entries = classify_family(SignPattern.from_blocks(3, 2, 2))
    elapsed = time.perf_counter() - start
    assert len(entries) == 15
    assert _statuses(entries) == {Status.REALIZABLE: 11, Status.NON_REALIZABLE: 4}
    _assert_witnessed(entries)
    non = [e for e in entries if e.status is Status.NON_REALIZABLE]
    assert all(e.rule is RuleId.T1P3 and "are not realizable" in e.provenance for e in non)
    assert sorted(e.code for e in non) == [(1, 3, 0), (2, 2, 0), (3, 1, 0), (4, 0, 0)]
    assert elapsed < 120


@criterion(2, "classify S4,2,2: 21 entries, 11/10 split (6 T1P1, 4 T1P3), 15 triples with w >= m-3")
def test_criterion_2_sigma422():
    start = time.perf_counter()
    entries = classify_family(SignPattern.from_blocks(4, 2, 2))
    elapsed = time.perf_counter() - start
    assert len(entries) == 21
    assert _statuses(entries) == {Status.REALIZABLE: 11, Status.NON_REALIZABLE: 10}
    _assert_witnessed(entries)
    rules = Counter(e.rule for e in entries if e.status is Status.NON_REALIZABLE)
    assert rules == {RuleId.T1P1: 6, RuleId.T1P3: 4}
    assert all(e.code[2] == 0 for e in entries if e.rule is RuleId.T1P1)
    candidates = [e for e in entries if e.code[2] >= 4 - 3]
    assert len(candidates) == 15
    assert all(e.code[0] + e.code[1] <= 4 for e in candidates)
    assert elapsed < 120


@criterion(3, "classify S2,4,2: 9 triple concatenations verified, 12 by T2P2")
def test_criterion_3_sigma242():
    start = time.perf_counter()
    entries = classify_family(SignPattern.from_blocks(2, 4, 2))
    elapsed = time.perf_counter() - start
    assert len(entries) == 21
    assert _statuses(entries) == {Status.REALIZABLE: 9, Status.NON_REALIZABLE: 12}
    _assert_witnessed(entries)
    for e in entries:
        if e.status is Status.REALIZABLE:
            assert e.code[0] <= 2 and e.code[2] <= 2
            # the canonical couple (1,3,1) comes from the block-wise canonical concatenation
            built = canonical_witness(e.couple.pattern) if e.code == (1, 3, 1) else realize_sigma_2n2(4, e.code)
            assert e.witness.poly == built.poly
        else:
            assert e.rule is RuleId.T2P2
    assert elapsed < 120


@criterion(4, "i_r transfer: S2,2,4 mirrors S4,2,2 under (w,v,u); orbits coherent for d <= 7")
def test_criterion_4_ir_transfer():
    options = ClassifyOptions(search=False)
    forward = {e.code: e.status for e in classify_family(SignPattern.from_blocks(4, 2, 2), options)}
    mirrored = classify_family(SignPattern.from_blocks(2, 2, 4), options)
    assert len(mirrored) == len(forward) == 21
    for e in mirrored:
        u, v, w = e.code
        assert e.status is forward[(w, v, u)]
        assert e.rule is RuleId.IR_TRANSFER
    _assert_witnessed(mirrored)

    status = {}
    for pattern in supported_patterns(7):
        for e in classify_family(pattern, options):
            status[e.couple] = e.status
    assert Status.UNKNOWN not in status.values()
    for c, s in status.items():
        for image in orbit(c):
            assert status[image] is s


@criterion(5, "sampled certificates: 10^4 seeded trials each, 0 violations, min_margin > 0, < 5 min")
def test_criterion_5_sampled_certificates():
    start = time.perf_counter()
    expected = {
        "QD2_W5", "QD2_W4V1", "QD2_0N23", "NO_Q2Q5_104", "NO_Q2Q5_203", "NO_Q2Q5_113",
        "SIGMA_M22_WBOUND", "NEWTON", "NEWTON_PRODUCT", "MONOTONE_EXT", "RHO_DOMAIN_D",
    }
    assert set(SAMPLED_CATALOG) == expected
    failures = []
    for entry_id in sorted(expected):
        report = run_certificate(CertificateSpec(entry_id, trials=10_000, seed=0))
        print(report.line())
        if not (report.trials_run == 10_000 and report.violations == 0 and report.min_margin > 0):
            failures.append(report.line())
    elapsed = time.perf_counter() - start
    assert not failures, failures
    assert elapsed < 300


@criterion(6, "cubic_discriminant(1,1,1) = 16; vanishes at (3t, 3t^2, t^3)")
def test_criterion_6_exact_values():
    assert cubic_discriminant(CubicTriple(1, 1, 1)) == 16
    for t in (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5)):
        assert cubic_discriminant(CubicTriple(3 * t, 3 * t**2, t**3)) == 0


@criterion(7, "identity certificates hold exactly; B12_GAP at c=1/2 equals 7/12")
def test_criterion_7_identities():
    ids = ["B22", "B23", "B12_Q2Q5", "B12_GAP", "LEM2_BORDER1", "LEM2_BORDER2", "P6_A", "P6_B", "P6_C"]
    assert set(ids) == set(IDENTITY_CATALOG)
    for identity_id in ids:
        assert check_identity(identity_id), identity_id
    half = Fraction(1, 2)
    assert b12_a_second(half) - b12_a_prime(half) == Fraction(7, 12)


def _random_witness(rng: np.random.Generator) -> Witness:
    d = int(rng.integers(1, 6))
    nums = rng.choice(np.arange(1, 2000), size=d, replace=False)
    den = int(rng.integers(1, 50))
    moduli = sorted(Fraction(int(k), den) for k in nums)
    word = "".join(rng.choice(["P", "N"], size=d))
    config = RootConfiguration.from_moduli(moduli, ModuliOrder(word))
    poly = expand(config)
    wit = Witness.build(Couple(sign_pattern(poly), moduli_order(poly)), config)
    assert wit.verified
    return wit


@criterion(8, "concatenation: 100 random witness pairs, <= 64 halvings, couple as predicted")
def test_criterion_8_concatenation():
    for pair in range(100):
        rng = np.random.default_rng([8, pair])
        top, bottom = _random_witness(rng), _random_witness(rng)
        last = top.couple.pattern.signs[-1]
        predicted = Couple(
            SignPattern(top.couple.pattern.signs + tuple(last * s for s in bottom.couple.pattern.signs[1:])),
            ModuliOrder(bottom.couple.order.word + top.couple.order.word),
        )
        wit = concatenate(top, bottom)  # raises EpsilonExhausted past 64 halvings
        assert wit.couple == predicted
        assert verify(wit.poly, predicted)


@criterion(9, "search soundness over all rule-impossible couples with d <= 7; 11 degree-6 witnesses found")
def test_criterion_9_search_soundness():
    pattern = SignPattern.from_blocks(3, 2, 2)
    found = []
    for code in [(u, v, 4 - u - v) for u in range(4) for v in range(4 - u)] + [(0, 4, 0)]:
        couple = Couple(pattern, order_from_code(code))
        result = search_realization(SearchSpec(couple))  # default budget
        assert result.found and verify(result.witness.poly, couple), code
        found.append(code)
    assert len(found) == 11

    # every rule-impossible couple at a reduced budget, SoundnessViolation on any witness
    patterns = supported_patterns(7)
    checked = soundness_sweep(patterns, ClassifyOptions(restarts=25, iterations=300))
    expected = sum(
        1 for p in patterns for c in enumerate_couples(p) if not theorem_rule_engine(c).realizable
    )
    assert checked == expected > 600

    # and the four impossible degree-6 couples at the full default budget
    assert soundness_sweep([pattern], ClassifyOptions()) == 4


@criterion(10, "Descartes exactness: 10^3 random configurations, d <= 10")
def test_criterion_10_descartes():
    for trial in range(1000):
        rng = np.random.default_rng([10, trial])
        d = int(rng.integers(1, 11))
        nums = rng.choice(np.arange(1, 10**6), size=d, replace=False)
        moduli = sorted(Fraction(int(k), int(rng.integers(1, 1000))) for k in nums)
        if len(set(moduli)) < d:
            continue
        signs = rng.choice([1, -1], size=d)
        config = RootConfiguration.from_values(int(s) * m for s, m in zip(signs, moduli))
        pattern = sign_pattern(expand(config))
        assert pattern.changes == int((signs > 0).sum())
        assert pattern.preservations == int((signs < 0).sum())
