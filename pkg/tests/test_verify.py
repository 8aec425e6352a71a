import json

import pytest

from oqmat.errors import UnknownSuite
from oqmat.gradedideal import GradedIdeal
from oqmat.qcoeff import Q
from oqmat.qmatrix import X, minor, oqm_presentation
from oqmat.textio import parse_element
from oqmat.verify import SUITES, run_all, run_suite
from oqmat.verify.identities import s8_tuples, srt
from oqmat.verify.report import SuiteReport, check, eq, mem, run_cases
from oqmat.verify.strata_suites import s9_tuples


@pytest.mark.parametrize("sid", [s for s in SUITES if s != "S16"])
def test_every_suite_passes_at_n2(sid):
    report = run_suite(sid, 2)
    assert report.passed, report.failures[:3]
    # at n = 2 there is at most one y_ij per pair, so S14 has nothing to compare
    assert report.cases > 0 or sid in ("S9b", "S14")


def test_s16_is_pinned_to_n2():
    assert run_suite("S16").passed
    with pytest.raises(ValueError):
        run_suite("S16", 3)


def test_s8_case_count_by_enumeration():
    # |I| = 1 gives 9 tuples at n = 3, |I| = 2 gives one more
    tuples = list(s8_tuples(3))
    assert sum(1 for t in tuples if len(t[0]) == 1) == 9
    assert len(tuples) == 10
    assert run_suite("S8", 3).cases == 10


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("S17")


def test_suite_names_resolve():
    assert run_suite("corner-extension", 2).suite_id == "S8"


def test_report_json_shape():
    report = run_suite("S3", 2)
    data = report.to_json()
    assert set(data) == {"suiteId", "parameters", "cases", "failures", "elapsed", "notes", "pass"}
    assert data["pass"] is True and data["parameters"]["n"] == 2
    assert json.loads(report.dumps()) == json.loads(json.dumps(data, sort_keys=True))


def test_failures_are_recorded_and_replayable():
    A = oqm_presentation(2)
    report = SuiteReport("demo", {"n": 2})
    wrong = X(2, 2, 2) * X(2, 1, 1)
    run_cases(report, [eq("X22 X11 = X11 X22", wrong, X(2, 1, 1) * X(2, 2, 2)), check("fine", True)])
    assert not report.passed and report.cases == 2
    f = report.failures[0]
    assert parse_element(f.lhs, A) == wrong
    assert parse_element(f.rhs, A) == X(2, 1, 1) * X(2, 2, 2)


def test_inhomogeneous_membership_case_is_a_failure():
    A = oqm_presentation(2)
    L = GradedIdeal(A, [X(2, 1, 2)])
    report = run_cases(SuiteReport("demo", {"n": 2}), [mem("bad", X(2, 1, 1) + X(2, 1, 2), L)])
    assert report.failures[0].rhs == "inhomogeneous difference"


def test_membership_case_detects_non_members():
    A = oqm_presentation(2)
    L = GradedIdeal(A, [X(2, 1, 2)], name="<X12>")
    report = run_cases(SuiteReport("demo", {"n": 2}), [mem("X11 in <X12>", X(2, 1, 1), L, True)])
    assert "not in <X12>" in report.failures[0].rhs


def test_corner_extension_would_catch_a_wrong_power():
    # with q in place of q^2 every instance breaks, so the suite is not vacuous
    for I, J, r, c in s8_tuples(3):
        M, x = minor(3, I, J), X(3, r, c)
        bad = M * x - (x * M).scale(Q)
        good = M * x - (x * M).scale(Q * Q)
        assert bad != good


def test_nested_minors_exact_corrections_are_nonzero_somewhere():
    live = 0
    for I, J, Ip, Jp, a, b in s9_tuples(3):
        if a < b and not any(a < i < b for i in Ip):
            live += bool(minor(3, srt(I, [b]), J) * minor(3, tuple(sorted(set(Ip) - {b} | {a})), Jp))
    assert live > 0


def test_s1_is_seeded():
    a = run_suite("S1", 2, {"seed": 7, "words": 50})
    b = run_suite("S1", 2, {"seed": 7, "words": 50})
    assert a.cases == b.cases == 100 and a.passed and b.passed


def test_s7_reports_both_kinds_of_case():
    report = run_suite("S7", 2)
    assert report.passed
    note = report.notes[0]
    zero = int(note.split("zero cases: ")[1].split(",")[0])
    nonzero = int(note.split("nonzero cases: ")[1])
    assert zero > 0 and nonzero > 0


def test_s16_notes_are_evidence_only():
    report = run_suite("S16")
    assert any(n.startswith("evidence only") for n in report.notes)


def test_run_all_small():
    reports = run_all(2)
    assert [r.suite_id for r in reports] == [s for s in SUITES if s not in ("S9a", "S9b")]
    assert all(r.passed for r in reports)
