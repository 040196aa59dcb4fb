from fractions import Fraction
from itertools import product
from math import prod

import pytest


def weyl_dim(d, n):
    """Weyl dimension formula for Sp(2n); independent of the character recursion."""
    lam = list(d) + [0] * (n - len(d))
    rho = list(range(n, 0, -1))
    l = [a + b for a, b in zip(lam, rho)]
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(l[i], rho[i])
        for j in range(i + 1, n):
            out *= Fraction((l[i] - l[j]) * (l[i] + l[j]), (rho[i] - rho[j]) * (rho[i] + rho[j]))
    assert out.denominator == 1
    return int(out)


def brute_kostant(v):
    """Enumerate every coefficient vector for the generators v_i +- v_{n+1}."""
    n = len(v) - 1
    # c_w <= v_i for both generators touching coordinate i, since all c_w >= 0.
    ranges = [range(max(v[i], 0) + 1) for i in range(n) for _ in (0, 1)]
    count = 0
    for cs in product(*ranges):
        total = [0] * (n + 1)
        for i in range(n):
            plus, minus = cs[2 * i], cs[2 * i + 1]
            total[i] += plus + minus
            total[n] += plus - minus
        count += total == list(v)
    return count


@pytest.fixture
def weyl():
    return weyl_dim


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
