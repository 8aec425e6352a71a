"""Suite reports and the case runner shared by every suite."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Iterable

from ..gradedideal import GradedIdeal, ideal_membership
from ..pbwcore import Element, multidegree


@dataclass
class Failure:
    case: str
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"case": self.case, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class SuiteReport:
    suite_id: str
    parameters: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suiteId": self.suite_id,
            "parameters": self.parameters,
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
            "elapsed": round(self.elapsed, 3),
            "notes": self.notes,
            "pass": self.passed,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.suite_id} n={self.parameters.get('n')}: {status}, {self.cases} cases, {self.elapsed:.2f}s"


# A case is one of
#   ("eq", description, lhs, rhs)                       exact equality of Elements
#   ("mem", description, element, ideal, certificate)   membership of element in a GradedIdeal
#   ("check", description, ok, detail)                  a precomputed boolean


def eq(desc: str, lhs: Element, rhs: Element):
    return ("eq", desc, lhs, rhs)


def mem(desc: str, x: Element, ideal: GradedIdeal, certificate: bool = False):
    return ("mem", desc, x, ideal, certificate)


def check(desc: str, ok: bool, detail: str = ""):
    return ("check", desc, ok, detail)


def run_cases(report: SuiteReport, cases: Iterable) -> SuiteReport:
    start = time.perf_counter()
    for case in cases:
        report.cases += 1
        kind, desc = case[0], case[1]
        if kind == "eq":
            lhs, rhs = case[2], case[3]
            if lhs != rhs:
                report.failures.append(Failure(desc, str(lhs), str(rhs)))
        elif kind == "mem":
            x, ideal, want_cert = case[2], case[3], case[4]
            if x and multidegree(ideal.ambient, x) is None:
                # the identities are degree balanced; imbalance is itself a bug
                report.failures.append(Failure(desc, str(x), "inhomogeneous difference"))
                continue
            if want_cert:
                ok, cert = ideal_membership(ideal, x, certificate=True)
                if ok and cert is not None and cert.replay(ideal) != x.scale(cert.denominator):
                    ok = False
            else:
                ok = ideal_membership(ideal, x)
            if not ok:
                report.failures.append(Failure(desc, str(x), f"not in {ideal.name or 'ideal'}"))
        elif kind == "check":
            if not case[2]:
                report.failures.append(Failure(desc, case[3], "expected true"))
        else:  # pragma: no cover
            raise ValueError(f"unknown case kind {kind}")
    report.elapsed += time.perf_counter() - start
    return report
