from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest


def akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n, independent of the library's recurrence (B_1 = +1/2 here)."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


def _elementary(values, k):
    e = [Fraction(1)] + [Fraction(0)] * len(values)
    for v in values:
        for i in range(len(values), 0, -1):
            e[i] += e[i - 1] * v
    return e[k]


def localization_integral(a: tuple[int, ...], weights: tuple[int, ...]) -> Fraction:
    """Integral of x^a over LG_g by Atiyah-Bott at the 2^g torus-fixed Lagrangians.

    At the fixed point indexed by signs s, the subbundle S has weights s_i t_i
    and the tangent space Sym^2 S^dual has weights -(s_i t_i + s_j t_j), i <= j.
    """
    g = len(a)
    total = Fraction(0)
    for signs in product((1, -1), repeat=g):
        w = [s * t for s, t in zip(signs, weights)]
        num = Fraction(1)
        for k, ak in enumerate(a, start=1):
            num *= _elementary(w, k) ** ak
        den = Fraction(1)
        for i in range(g):
            for j in range(i, g):
                den *= -(w[i] + w[j])
        total += num / den
    return total


@pytest.fixture(scope="session")
def generic_weights():
    return (3, 7, 19, 41, 101, 211)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
