from fractions import Fraction

import pytest
from hypothesis import strategies as st

from goldenrect.exactnum import PHI, GoldenNumber

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
goldens = st.builds(GoldenNumber, rationals, rationals)
nonzero_goldens = goldens.filter(bool)

rational_ratios = st.fractions(min_value=1, max_value=2, max_denominator=400).filter(lambda q: q > 1)
golden_ratios = st.builds(
    GoldenNumber,
    st.fractions(min_value=-3, max_value=3, max_denominator=60),
    st.fractions(min_value=-3, max_value=3, max_denominator=60),
).filter(lambda g: g > 1 and g <= 2 and g != PHI)
ratios = st.one_of(rational_ratios.map(GoldenNumber), golden_ratios)


def naive_fib(n: int) -> int:
    """Plain recurrence, walked backwards for negative n."""
    a, b = 0, 1  # F_0, F_1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a  # (F_{k-1}, F_k) from (F_k, F_{k+1})
    return a


@pytest.fixture
def half3():
    return GoldenNumber(Fraction(3, 2))


# -- acceptance summary ------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid] = report.outcome
    elif "test_acceptance.py::test_criterion_" in report.nodeid and report.failed:
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_ACCEPTANCE, key=lambda s: int(s.split("test_criterion_")[1].split("_")[0])):
        name = nodeid.split("::")[-1]
        number = name.split("_")[2]
        verdict = "PASS" if _ACCEPTANCE[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  ({name})")
