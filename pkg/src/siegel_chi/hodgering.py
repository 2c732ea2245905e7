"""The quotient of Q[v_1..v_g] by Mumford's relation c(E) c(E^dual) = 1.

Each graded piece is built independently: every weighted-degree-d monomial
is listed, the degree-d part of the ideal is spanned by monomial multiples
of the relation components, and exact Gauss-Jordan elimination picks a
monomial basis of the quotient together with a rewrite rule for every
other monomial.
"""

from __future__ import annotations

import threading
import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .symlambda import LambdaPoly, ctop_sym2, giambelli_det

__all__ = [
    "GradedQuotientRing",
    "TopDegreeWarning",
    "mumford_relations",
    "weighted_monomials",
    "strict_partition_counts",
    "build_quotient",
    "normal_form",
    "mumford_square_vanishing",
    "verify_ctop_identity",
    "direct_sum_cg2_vanishing",
    "direct_sum_chern_expansion",
]

Exponent = tuple[int, ...]

_BUILD_LOCK = threading.Lock()


class TopDegreeWarning(UserWarning):
    """A component above the top degree was discarded by normal_form."""


def top_degree(g: int) -> int:
    return g * (g + 1) // 2


def mumford_relations(g: int) -> list[LambdaPoly]:
    """Homogeneous components R_2, R_4, ..., R_2g of (sum v_i)(sum (-1)^j v_j) - 1."""
    gens = [LambdaPoly.gen(g, i) for i in range(g + 1)]
    rels = []
    for m in range(1, g + 1):
        r = LambdaPoly.zero(g)
        for i in range(max(0, 2 * m - g), min(g, 2 * m) + 1):
            j = 2 * m - i
            r = r + gens[i] * gens[j] * (-1) ** j
        rels.append(r)
    return rels


@lru_cache(maxsize=None)
def weighted_monomials(g: int, d: int) -> tuple[Exponent, ...]:
    """All exponent vectors of weighted degree d, in lexicographic order."""
    out: list[Exponent] = []

    def rec(i: int, remaining: int, acc: list[int]) -> None:
        # i runs from g down to 1; acc is filled back to front
        if i == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for a in range(remaining // i + 1):
            acc[i - 1] = a
            rec(i - 1, remaining - a * i, acc)
        acc[i - 1] = 0

    rec(g, d, [0] * g)
    return tuple(sorted(out))


def strict_partition_counts(g: int) -> list[int]:
    """Number of strict partitions of d with parts <= g, for d = 0..g(g+1)/2."""
    counts = [0] * (top_degree(g) + 1)
    counts[0] = 1
    for part in range(1, g + 1):
        for d in range(len(counts) - 1, part - 1, -1):
            counts[d] += counts[d - part]
    return counts


def _is_strict(e: Exponent) -> bool:
    return all(a <= 1 for a in e)


@dataclass
class GradedQuotientRing:
    genus: int
    generators: list[LambdaPoly]
    bases: dict[int, list[Exponent]] = field(default_factory=dict)
    reductions: dict[int, dict[Exponent, dict[Exponent, Fraction]]] = field(default_factory=dict)

    @property
    def top(self) -> int:
        return top_degree(self.genus)

    def dims(self) -> list[int]:
        return [len(self.bases[d]) for d in range(self.top + 1)]

    def reduce_monomial(self, e: Exponent) -> dict[Exponent, Fraction]:
        d = LambdaPoly.weight(e)
        if d not in self.reductions:
            raise KeyError(f"degree {d} not built")
        return self.reductions[d][e]

    def normal_form(self, p: LambdaPoly) -> LambdaPoly:
        return normal_form(self, p)

    def ensure_degree(self, d: int) -> None:
        """Build the degree-d piece if it is missing (used above the top degree)."""
        with _BUILD_LOCK:
            for k in range(d + 1):
                if k not in self.reductions:
                    self.bases[k], self.reductions[k] = _build_degree(self.genus, k, self.generators)


def _span_rows(g: int, d: int, relations: list[LambdaPoly]) -> list[dict[Exponent, Fraction]]:
    rows = []
    for m, rel in enumerate(relations, start=1):
        rd = d - 2 * m
        if rd < 0:
            break
        for e in weighted_monomials(g, rd):
            prod = LambdaPoly.monomial(e) * rel
            if prod.terms:
                rows.append(prod.terms)
    return rows


def _build_degree(g: int, d: int, relations: list[LambdaPoly]):
    monos = weighted_monomials(g, d)
    # non-strict monomials first so they become pivots; strict ones stay as basis
    order = sorted(monos, key=lambda e: (_is_strict(e), e))
    index = {e: i for i, e in enumerate(order)}

    pivots: dict[int, dict[int, Fraction]] = {}
    for terms in _span_rows(g, d, relations):
        row = {index[e]: Fraction(c) for e, c in terms.items()}
        for p in sorted(set(row) & set(pivots)):
            c = row.get(p)
            if c:
                for col, v in pivots[p].items():
                    _acc(row, col, -c * v)
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        row = {col: v * inv for col, v in row.items()}
        for other in pivots.values():
            c = other.get(lead)
            if c:
                for col, v in row.items():
                    _acc(other, col, -c * v)
        pivots[lead] = row

    basis_idx = [i for i in range(len(order)) if i not in pivots]
    basis = [order[i] for i in basis_idx]
    table: dict[Exponent, dict[Exponent, Fraction]] = {}
    for i, e in enumerate(order):
        if i in pivots:
            table[e] = {order[col]: -v for col, v in pivots[i].items() if col != i}
        else:
            table[e] = {e: Fraction(1)}
    return basis, table


def _acc(row: dict, key, value) -> None:
    v = row.get(key, 0) + value
    if v:
        row[key] = v
    else:
        row.pop(key, None)


@lru_cache(maxsize=None)
def build_quotient(g: int, max_degree: int | None = None) -> GradedQuotientRing:
    """Quotient ring by Mumford's relation, graded pieces 0..max_degree.

    ``max_degree`` defaults to the top degree g(g+1)/2; larger values are
    allowed so that tests can confirm the pieces above the top vanish.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    rels = mumford_relations(g)
    ring = GradedQuotientRing(g, rels)
    top = top_degree(g) if max_degree is None else max_degree
    for d in range(top + 1):
        ring.bases[d], ring.reductions[d] = _build_degree(g, d, rels)
    return ring


def normal_form(ring: GradedQuotientRing, p: LambdaPoly) -> LambdaPoly:
    """Reduce p to the chosen monomial basis, one graded piece at a time.

    Components of degree above the top of the ring are zero in the
    quotient; they are dropped with a :class:`TopDegreeWarning`.
    """
    if p.genus != ring.genus:
        raise ValueError(f"genus mismatch: ring {ring.genus}, polynomial {p.genus}")
    out: dict[Exponent, Fraction] = {}
    dropped = False
    for e, c in p.terms.items():
        d = LambdaPoly.weight(e)
        if d > ring.top:
            dropped = True
            continue
        for b, v in ring.reductions[d][e].items():
            _acc(out, b, c * v)
    if dropped:
        warnings.warn("discarded components above the top degree", TopDegreeWarning, stacklevel=2)
    return LambdaPoly(ring.genus, out)


def mumford_square_vanishing(ring: GradedQuotientRing, k: int) -> bool:
    """Whether v_g v_{g-1} ... v_{g-k+1} v_{g-k}^2 is zero in the quotient."""
    g = ring.genus
    if not 0 <= k <= g - 1:
        raise ValueError(f"k must lie in [0, {g - 1}], got {k}")
    e = [0] * g
    for i in range(g - k + 1, g + 1):
        e[i - 1] = 1
    e[g - k - 1] = 2
    e = tuple(e)
    d = LambdaPoly.weight(e)
    if d <= ring.top:
        return normal_form(ring, LambdaPoly.monomial(e)).is_zero()
    # above the top the piece is built explicitly rather than assumed zero
    ring.ensure_degree(d)
    return not ring.reductions[d][e]


def verify_ctop_identity(ring: GradedQuotientRing) -> bool:
    """c_top(Sym^2), 2^g v_1...v_g and the Giambelli determinant agree in the quotient."""
    g = ring.genus
    a = normal_form(ring, ctop_sym2(g))
    b = normal_form(ring, LambdaPoly.monomial([1] * g, 2 ** g))
    c = normal_form(ring, giambelli_det(g))
    return a == b and b == c and not a.is_zero()


# Formal Chern classes of a direct sum: variables are (summand, degree) pairs.



def _formal_chern_sum(ranks: list[int], degree: int) -> Counter:
    """Degree-``degree`` part of prod_i (1 + c_{i,1} + ... + c_{i,rank_i})."""
    out: Counter = Counter()

    def rec(i: int, remaining: int, acc: tuple) -> None:
        if i == len(ranks):
            if remaining == 0:
                out[frozenset(acc)] += 1
            return
        for k in range(min(ranks[i], remaining) + 1):
            rec(i + 1, remaining - k, acc + (((i, k),) if k else ()))

    rec(0, degree, ())
    return out


def direct_sum_chern_expansion(mu: tuple[int, ...]) -> Counter:
    """c_{g-2} of a direct sum of bundles of ranks mu (sum(mu) = g - 1), expanded."""
    return _formal_chern_sum(list(mu), sum(mu) - 1)


def direct_sum_cg2_vanishing(mu: tuple[int, ...]) -> bool:
    """Whether c_{g-2}(E_{g_1} + ... + E_{g_l}) dies once every top class c_{g_i}(E_{g_i}) is 0.

    The expansion is carried out formally and compared term by term with
    sum_i c_{g_i - 1}(E_{g_i}) prod_{j != i} c_{g_j}(E_{g_j}).
    """
    mu = tuple(mu)
    if len(mu) < 2:
        raise ValueError("need a partition with at least two parts")
    if any(part < 1 for part in mu):
        raise ValueError("parts must be positive")
    expansion = direct_sum_chern_expansion(mu)

    expected: Counter = Counter()
    for i in range(len(mu)):
        factors = [(j, mu[j]) for j in range(len(mu)) if j != i]
        if mu[i] - 1 > 0:
            factors.append((i, mu[i] - 1))
        expected[frozenset(factors)] += 1
    if expansion != expected:
        raise AssertionError("formal expansion disagrees with the summed product formula")

    survivors = {
        mono: c
        for mono, c in expansion.items()
        if c and not any(k == mu[i] for i, k in mono)
    }
    return not survivors
