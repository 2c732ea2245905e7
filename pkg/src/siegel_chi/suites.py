"""Invariant suites behind ``siegel-chi verify``.

Each suite returns a list of :class:`Check` records; a suite passes when
every check does.  Default genus bounds follow the cost of each check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactnum import bernoulli, render_rational
from .eulerhodge import (
    chi_gaussbonnet,
    chi_product,
    chi_recursive,
    lambda_product_nonvanishing,
    tau,
)
from .hodgering import (
    build_quotient,
    direct_sum_cg2_vanishing,
    mumford_square_vanishing,
    normal_form,
    strict_partition_counts,
    top_degree,
    verify_ctop_identity,
)
from .lagrangian import lg_betti, lg_euler_char, lg_integrate, lg_normalize
from .level import chi_level, degree_ratio
from .strata import (
    XiGraph,
    extract_partition,
    in_Z,
    partitions_of,
    verify_closure_lemma,
    xi_domain_dimension,
)
from .symlambda import LambdaPoly, ctop_sym2, giambelli_det

__all__ = ["Check", "SUITES", "DEFAULT_GMAX", "run_suite", "figure_one_graphs"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _r(x: Fraction) -> str:
    return render_rational(x)


def mumford_suite(gmax: int) -> list[Check]:
    checks = []
    for g in range(1, gmax + 1):
        t0 = time.perf_counter()
        ring = build_quotient(g)
        dims = ring.dims()
        expected = strict_partition_counts(g)
        checks.append(Check(f"dims g={g}", dims == expected, f"{dims} vs strict partitions {expected}"))
        checks.append(Check(f"total dim g={g}", sum(dims) == 2 ** g, f"{sum(dims)} = 2^{g}"))
        checks.append(Check(f"top piece g={g}", dims[-1] == 1, f"dim {dims[-1]}"))
        for k in range(g):
            checks.append(Check(f"square vanishing g={g} k={k}", mumford_square_vanishing(ring, k)))
        checks[-1].detail = f"{time.perf_counter() - t0:.2f}s for g={g}"
        for mu in partitions_of(g - 1):
            if len(mu) >= 2:
                checks.append(Check(f"c_(g-2) direct sum vanishing g={g} mu={mu}", direct_sum_cg2_vanishing(mu)))
    return checks


def giambelli_suite(gmax: int) -> list[Check]:
    checks = []
    for g in range(1, gmax + 1):
        ring = build_quotient(g)
        n = top_degree(g)
        gd, ct = giambelli_det(g), ctop_sym2(g)
        checks.append(Check(f"ctop identity g={g}", verify_ctop_identity(ring),
                            f"normal form {normal_form(ring, ct)}"))
        checks.append(Check(f"homogeneous degree {n} g={g}", gd.degrees() == {n} and ct.degrees() == {n}))
        sign = (-1) ** n
        checks.append(Check(f"dual sign g={g}", ctop_sym2(g, dualize=True) == ct * sign))
    exact = {
        1: LambdaPoly.monomial([1], 2),
        2: LambdaPoly.monomial([1, 1], 4),
        3: LambdaPoly.monomial([1, 1, 1], 8) - LambdaPoly.monomial([0, 0, 2], 8),
    }
    for g, value in exact.items():
        if g <= gmax:
            checks.append(Check(f"unreduced giambelli g={g}", giambelli_det(g) == value, str(value)))
            checks.append(Check(f"unreduced ctop g={g}", ctop_sym2(g) == value, str(value)))
    return checks


def lg_suite(gmax: int) -> list[Check]:
    checks = []
    for g in range(1, gmax + 1):
        betti = lg_betti(g)
        chi = lg_euler_char(g)
        checks.append(Check(f"chi(LG) g={g}", chi == 2 ** g, f"{chi}"))
        checks.append(Check(f"poincare duality g={g}", betti == betti[::-1], f"{betti}"))
        if g <= 5:
            val = lg_integrate(lg_normalize(g), (1,) * g)
            want = (-1) ** top_degree(g)
            checks.append(Check(f"int x1..xg g={g}", val == want, f"{_r(val)} vs {want}"))
            gb, cp = chi_gaussbonnet(g), chi_product(g)
            checks.append(Check(f"gauss-bonnet route g={g}", gb == cp, f"{_r(gb)} vs {_r(cp)}"))
    return checks


def recursion_suite(gmax: int) -> list[Check]:
    checks = []
    for g in range(1, gmax + 1):
        cp, cr = chi_product(g), chi_recursive(g)
        checks.append(Check(f"product = recursive g={g}", cp == cr, _r(cp)))
        sign = 1 if cp > 0 else -1
        checks.append(Check(f"sign g={g}", sign == (-1) ** top_degree(g)))
        checks.append(Check(f"lambda product nonzero g={g}", lambda_product_nonvanishing(g)))
        if g >= 2:
            t = tau(g)
            want = abs(bernoulli(2 * g)) / (2 * g)
            checks.append(Check(f"tau g={g}", t == want, _r(t)))
    return checks


def level_suite(gmax: int) -> list[Check]:
    checks = [
        Check("ratio (1,2)", degree_ratio((1, 2)) == 5, _r(degree_ratio((1, 2)))),
        Check("chi (1,2)", chi_level((1, 2)) == Fraction(-1, 288), _r(chi_level((1, 2)))),
        Check("ratio (1,1,2)", degree_ratio((1, 1, 2)) == 21, _r(degree_ratio((1, 1, 2)))),
        Check("chi (1,1,2)", chi_level((1, 1, 2)) == Fraction(1, 17280), _r(chi_level((1, 1, 2)))),
    ]
    bad = [(d, g) for g in range(1, min(gmax, 8) + 1) for d in range(1, 51) if degree_ratio((d,) * g) != 1]
    checks.append(Check("ratio (d,...,d) = 1 for d <= 50", not bad, f"failures {bad[:5]}" if bad else ""))
    checks.append(Check("principal ratio = 1", all(degree_ratio((1,) * g) == 1 for g in range(1, 13))))
    return checks


def figure_one_graphs():
    """The two genus-11 dual graphs of the figure: partitions (1,2,3,4) and (10)."""
    left = XiGraph(3, ((0, (3, ())), (0, (4, ())), (1, (1, ())), (2, (1, ((1, ()),))))).to_graph()
    right = XiGraph(1, ((0, (10, ())),)).to_graph()
    return left, right


def strata_suite(gmax: int) -> list[Check]:
    checks = []
    bad = []
    for g in range(2, 21):
        for mu in partitions_of(g - 1):
            try:
                xi_domain_dimension(g, mu)
            except AssertionError:
                bad.append((g, mu))
    checks.append(Check("xi domain dimension, g <= 20", not bad, f"failures {bad[:5]}" if bad else ""))
    left, right = figure_one_graphs()
    for graph, mu in ((left, (1, 2, 3, 4)), (right, (10,))):
        ok = graph.total_genus == 11 and in_Z(graph) and extract_partition(graph) == mu
        checks.append(Check(f"figure graph {mu}", ok))
    for g in range(2, gmax + 1):
        report = verify_closure_lemma(g)
        checks.append(Check(f"closure lemma g={g}", report.ok, "\n" + report.format()))
    return checks


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "mumford": mumford_suite,
    "giambelli": giambelli_suite,
    "lg": lg_suite,
    "recursion": recursion_suite,
    "level": level_suite,
    "strata": strata_suite,
}

DEFAULT_GMAX = {"mumford": 6, "giambelli": 5, "lg": 6, "recursion": 12, "level": 8, "strata": 5}
RING_SUITES = {"mumford", "giambelli", "lg"}


def run_suite(name: str, gmax: int | None = None) -> list[Check]:
    return SUITES[name](DEFAULT_GMAX[name] if gmax is None else gmax)

