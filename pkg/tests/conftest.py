import random

import pytest
from hypothesis import strategies as st

from oqmat.qcoeff import LaurentInt
from oqmat.qmatrix import oqm_presentation


def laurents(max_terms=4, exp_range=4, coeff_range=5):
    terms = st.dictionaries(
        st.integers(-exp_range, exp_range),
        st.integers(-coeff_range, coeff_range),
        max_size=max_terms,
    )
    return terms.map(LaurentInt)


def oqm_words(n, max_len=5):
    """Random words in O_q(M_n) as [(position, 1), ...]."""
    return st.lists(st.integers(0, n * n - 1), min_size=0, max_size=max_len).map(
        lambda idx: [(i, 1) for i in idx]
    )


def oqm_elements(n, max_terms=3, max_len=3):
    A = oqm_presentation(n)
    term = st.tuples(laurents(max_terms=2, exp_range=2, coeff_range=3), oqm_words(n, max_len))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: sum((A.word(w).scale(c) for c, w in ts), A.zero())
    )


@pytest.fixture
def rng():
    return random.Random(1234)


# -- acceptance criteria bookkeeping ------------------------------------------------

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    _criteria[number] = (title, rep.passed, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, secs = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.2f}s)")
