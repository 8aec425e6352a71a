"""Acceptance criteria 1-8.  Each test prints one PASS/FAIL line; the terminal
summary repeats them under "acceptance criteria"."""

import time

import pytest

from oqmat.qmatrix import minor_keys
from oqmat.strata import UNKNOWN, beta_kernel_evidence, enumerate_rc, hspec_count
from oqmat.verify import run_suite


def _line(number, ok, detail):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")


def _run(sid, n, options=None):
    report = run_suite(sid, n, options)
    return report


@pytest.mark.criterion(1, "confluence, 1000 seeded words at n=3, length <= 6")
def test_criterion_1_confluence():
    report = _run("S1", 3, {"seed": 0, "words": 1000, "max_len": 6})
    ok = report.passed and report.cases == 2000 and report.elapsed < 10
    _line(1, ok, report.summary())
    assert report.passed, report.failures[:3]
    assert report.cases == 2000
    assert report.elapsed < 10


@pytest.mark.criterion(2, "Laplace recursion equals the permutation sum for every key, n <= 4")
def test_criterion_2_minor_equivalence():
    report = _run("S2", 4)
    expected = sum(len(minor_keys(m)) for m in range(1, 5))
    ok = report.passed and report.cases == expected and report.elapsed < 60
    _line(2, ok, f"{report.summary()} (70 keys at n=4)")
    assert report.passed, report.failures[:3]
    assert report.cases == expected
    assert report.elapsed < 60


@pytest.mark.criterion(3, "minor identities S4, S5, S6, S8 at n=4 and S7 at n=3")
def test_criterion_3_minor_identities():
    reports = [_run(s, 4) for s in ("S4", "S5", "S6", "S8")] + [_run("S7", 3)]
    s7 = reports[-1]
    zero = int(s7.notes[0].split("zero cases: ")[1].split(",")[0])
    nonzero = int(s7.notes[0].split("nonzero cases: ")[1])
    ok = all(r.passed and r.elapsed < 300 for r in reports) and zero > 0 and nonzero > 0
    _line(3, ok, "; ".join(r.summary() for r in reports) + f"; S7 zero/nonzero = {zero}/{nonzero}")
    for r in reports:
        assert r.passed, (r.suite_id, r.failures[:3])
        assert r.elapsed < 300
    assert zero > 0 and nonzero > 0


@pytest.mark.criterion(4, "comultiplication of minors, all keys at n=3")
def test_criterion_4_comultiplication():
    report = _run("S3", 3)
    ok = report.passed and report.cases == len(minor_keys(3)) and report.elapsed < 120
    _line(4, ok, report.summary())
    assert report.passed, report.failures[:3]
    assert report.cases == 20
    assert report.elapsed < 120


@pytest.mark.criterion(5, "nested-minor congruences S9 (exact and certified membership) and S10 at n=3")
def test_criterion_5_congruences():
    exact = _run("S9a", 3)
    member = _run("S9b", 3, {"certificates": True})
    congruence = _run("S10", 3)
    elapsed = exact.elapsed + member.elapsed + congruence.elapsed
    ok = all(r.passed for r in (exact, member, congruence)) and member.cases > 0 and elapsed < 600
    _line(5, ok, f"{exact.summary()}; {member.summary()}; {congruence.summary()}")
    for r in (exact, member, congruence):
        assert r.passed, (r.suite_id, r.failures[:3])
    assert exact.cases > 0 and member.cases > 0 and congruence.cases > 0
    assert elapsed < 600


@pytest.mark.criterion(6, "beta machinery S11 (n<=3), S12, S15 at n=3, S13 and S14 at n=4")
def test_criterion_6_beta():
    reports = [_run("S11", 3), _run("S12", 3), _run("S13", 4), _run("S14", 4), _run("S15", 3)]
    elapsed = sum(r.elapsed for r in reports)
    ok = all(r.passed for r in reports) and elapsed < 600
    _line(6, ok, "; ".join(r.summary() for r in reports))
    for r in reports:
        assert r.passed, (r.suite_id, r.failures[:3])
        assert r.cases > 0
    assert elapsed < 600


@pytest.mark.criterion(7, "H-prime counts 1/9/4, 49, Unknown and the 14-entry catalog")
def test_criterion_7_counts_and_catalog():
    start = time.perf_counter()
    counts = [hspec_count(2, t) for t in range(3)]
    c31, c32 = hspec_count(3, 1), hspec_count(3, 2)
    report = _run("S16", 2)
    elapsed = time.perf_counter() - start
    ok = counts == [1, 9, 4] and sum(counts) == 14 and c31 == 49 and c32 is UNKNOWN and report.passed and elapsed < 60
    _line(7, ok, f"n=2 counts {counts}, n=3 t=1 {c31}, n=3 t=2 {c32}; {report.summary()}")
    assert counts == [1, 9, 4]
    assert c31 == 49
    assert c32 is UNKNOWN
    assert report.passed, report.failures[:3]
    assert elapsed < 60


@pytest.mark.criterion(8, "ker beta = K reported as bounded-degree evidence at n=2, never asserted")
def test_criterion_8_evidence_only():
    rows = {}
    for t in range(3):
        for pair in enumerate_rc(2, t):
            rows[str(pair)] = beta_kernel_evidence(2, pair, max_degree=4)
    degrees = {len(v) for v in rows.values()}
    agree = sum(r["equal"] for v in rows.values() for r in v)
    total = sum(len(v) for v in rows.values())
    notes = run_suite("S16").notes
    labelled = any(n.startswith("evidence only") for n in notes)
    # the equality itself is reported, not required
    ok = degrees == {55} and labelled
    _line(8, ok, f"evidence: dims agree in {agree} of {total} (pair, degree) slots, total degree <= 4")
    assert degrees == {55}
    assert labelled
