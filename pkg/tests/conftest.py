from fractions import Fraction

import mpmath
import pytest

from madhava.series import certified_pi

mpmath.mp.dps = 80
PI_80 = mpmath.pi


def pi_digits_fraction(digits: int = 70) -> tuple[Fraction, Fraction]:
    """Independent bracket of pi from mpmath, used only by tests."""
    s = mpmath.nstr(PI_80, digits + 5, strip_zeros=False)
    whole, frac = s.split(".")
    approx = Fraction(int(whole + frac[:digits]), 10**digits)
    return approx - Fraction(1, 10**digits), approx + Fraction(1, 10**digits)


@pytest.fixture(scope="session")
def pi_ref():
    return certified_pi(Fraction(1, 10**30))


@pytest.fixture(scope="session")
def quarter_pi(pi_ref):
    return pi_ref / 4


ACCEPTANCE_STATUS: dict[str, str] = {}
ACCEPTANCE_DETAIL: dict[str, list[str]] = {}


@pytest.fixture
def criterion(request):
    """Collects detail strings printed next to the criterion's PASS/FAIL line."""
    return ACCEPTANCE_DETAIL.setdefault(request.node.nodeid, [])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if "criterion" in getattr(item, "fixturenames", ()) and (report.when == "call" or report.failed):
        ACCEPTANCE_STATUS[item.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_STATUS:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, status in ACCEPTANCE_STATUS.items():
        detail = "; ".join(ACCEPTANCE_DETAIL.get(nodeid, []))
        terminalreporter.write_line(f"{status} {nodeid.split('::')[-1]}" + (f"  [{detail}]" if detail else ""))
