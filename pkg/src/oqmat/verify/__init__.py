"""Exhaustive verification suites.

``run_suite("S8", 3)`` enumerates every valid index tuple at the given size
and returns a :class:`SuiteReport`; a report passes iff it has no failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..errors import UnknownSuite
from . import identities, strata_suites
from .report import Failure, SuiteReport, run_cases

__all__ = ["run_suite", "run_all", "SUITES", "SuiteReport", "Failure", "suite_ids"]


@dataclass(frozen=True)
class Suite:
    sid: str
    name: str
    build: Callable  # (n, options, notes) -> iterable of cases
    default_n: int
    max_n: int | None = None
    min_n: int = 1


def _s1(n, opts, notes):
    return identities.suite_s1(n, seed=opts.get("seed", 0), words=opts.get("words", 1000), max_len=opts.get("max_len", 6))


def _s7(n, opts, notes):
    counts: dict = {}

    def cases():
        yield from identities.suite_s7(n, counts)
        notes.append(f"zero cases: {counts.get('zero', 0)}, nonzero cases: {counts.get('nonzero', 0)}")

    return cases()


def _s9(mode):
    def build(n, opts, notes):
        return strata_suites.suite_s9(n, mode=mode, certificates=opts.get("certificates", True), notes=notes)

    return build


def _s16(n, opts, notes):
    return strata_suites.suite_s16(
        n, degree_bound=opts.get("degree_bound", 2), evidence_degree=opts.get("evidence_degree", 4), notes=notes
    )


def _plain(fn):
    return lambda n, opts, notes: fn(n)


SUITES = {
    s.sid: s
    for s in [
        Suite("S1", "pbw-confluence", _s1, 3),
        Suite("S2", "minors-cross", _plain(identities.suite_s2), 4, max_n=6),
        Suite("S3", "comult-minors", _plain(identities.suite_s3), 3),
        Suite("S4", "minor-generator", _plain(identities.suite_s4), 4),
        Suite("S5", "minor-pairs", _plain(identities.suite_s5), 4),
        Suite("S6", "laplace", _plain(identities.suite_s6), 4),
        Suite("S7", "complementary-products", _s7, 3),
        Suite("S8", "corner-extension", _plain(identities.suite_s8), 4),
        Suite("S9", "nested-minors", _s9("both"), 3),
        Suite("S9a", "nested-minors-exact", _s9("exact"), 4),
        Suite("S9b", "nested-minors-member", _s9("member"), 3),
        Suite("S10", "minor-congruence", _plain(strata_suites.suite_s10), 3),
        Suite("S11", "beta-kernel", _plain(strata_suites.suite_s11), 3),
        Suite("S12", "beta-products", _plain(strata_suites.suite_s12), 3),
        Suite("S13", "skew-laurent", _plain(strata_suites.suite_s13), 4),
        Suite("S14", "y-relations", _plain(strata_suites.suite_s14), 4),
        Suite("S15", "witness-relations", _plain(strata_suites.suite_s15), 3),
        Suite("S16", "m2-catalog", _s16, 2, max_n=2, min_n=2),
    ]
}
_BY_NAME = {s.name: s for s in SUITES.values()}


def suite_ids() -> list[str]:
    return list(SUITES)


def _lookup(suite_id: str) -> Suite:
    s = SUITES.get(suite_id) or SUITES.get(suite_id.upper()) or _BY_NAME.get(suite_id.lower())
    if s is None:
        raise UnknownSuite(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    return s


def run_suite(suite_id: str, n: int | None = None, options: dict | None = None) -> SuiteReport:
    suite = _lookup(suite_id)
    n = suite.default_n if n is None else n
    if n < suite.min_n or (suite.max_n is not None and n > suite.max_n):
        bound = f"{suite.min_n}..{suite.max_n}" if suite.max_n else f">= {suite.min_n}"
        raise ValueError(f"{suite.sid} runs for n in {bound}, got {n}")
    opts = dict(options or {})
    report = SuiteReport(suite.sid, {"n": n, "name": suite.name, **opts})
    return run_cases(report, suite.build(n, opts, report.notes))


def run_all(n: int | None = None, options: dict | None = None) -> list[SuiteReport]:
    """Every suite except the sub-suites S9a/S9b (covered by S9), each at its default bound unless ``n`` is given."""
    out = []
    for sid, suite in SUITES.items():
        if sid in ("S9a", "S9b"):
            continue
        m = suite.default_n if n is None else n
        if m < suite.min_n or (suite.max_n is not None and m > suite.max_n):
            m = suite.default_n
        out.append(run_suite(sid, m, options))
    return out
