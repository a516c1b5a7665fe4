import mpmath
import pytest

_ACCEPTANCE_LINES = []


def bessel_j_direct(v, z, dps=40):
    """Classical J_v(z) by direct summation of its power series in mpmath."""
    with mpmath.workdps(dps):
        v, z = mpmath.mpf(v), mpmath.mpf(z)
        return float(mpmath.nsum(
            lambda n: (-1) ** n * (z / 2) ** (2 * n + v) / (mpmath.factorial(n) * mpmath.gamma(n + v + 1)),
            [0, mpmath.inf]))


def bessel_i_direct(v, z, dps=40):
    with mpmath.workdps(dps):
        v, z = mpmath.mpf(v), mpmath.mpf(z)
        return float(mpmath.nsum(
            lambda n: (z / 2) ** (2 * n + v) / (mpmath.factorial(n) * mpmath.gamma(n + v + 1)),
            [0, mpmath.inf]))


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(criterion, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  [{criterion}] {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
