"""Weighted-graded polynomials in v_1..v_g and the Chern-root bridge.

``LambdaPoly`` stores a polynomial as a map from exponent vectors
``(a_1, ..., a_g)`` to nonzero Fractions; ``v_i`` has weight ``i``.  The
same class serves for lambda classes and for the Chern classes ``x_i`` of
the tautological bundle on the Lagrangian Grassmannian.

``SymRootPoly`` is a polynomial in Chern roots ``r_1..r_g``; symmetric ones
are rewritten in elementary symmetric functions by leading-term subtraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

__all__ = [
    "LambdaPoly",
    "SymRootPoly",
    "poly_add",
    "poly_mul",
    "elementary_to_lambda",
    "ctop_sym2",
    "giambelli_det",
]

Exponent = tuple[int, ...]


def _clean(terms: Mapping[Exponent, Fraction]) -> dict[Exponent, Fraction]:
    return {k: Fraction(c) for k, c in terms.items() if c != 0}


def _add_into(acc: dict, key, coeff) -> None:
    c = acc.get(key, 0) + coeff
    if c:
        acc[key] = c
    else:
        acc.pop(key, None)


def _mul_terms(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            _add_into(out, tuple(x + y for x, y in zip(ka, kb)), ca * cb)
    return out


class _SparsePoly:
    """Shared arithmetic for the two sparse polynomial types."""

    genus: int
    terms: dict[Exponent, Fraction]

    def _new(self, terms):
        return type(self)(self.genus, terms)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            if other.genus != self.genus:
                raise ValueError(f"genus mismatch: {self.genus} vs {other.genus}")
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).constant(self.genus, other)
        return NotImplemented

    @classmethod
    def constant(cls, g: int, c=1):
        return cls(g, {(0,) * g: Fraction(c)})

    @classmethod
    def zero(cls, g: int):
        return cls(g, {})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._new({k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(_mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = type(self).constant(self.genus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.genus, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))


@dataclass(eq=False)
class LambdaPoly(_SparsePoly):
    genus: int
    terms: dict[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be positive")
        for k in self.terms:
            if len(k) != self.genus:
                raise ValueError(f"exponent {k} has wrong length for genus {self.genus}")
        self.terms = _clean(self.terms)

    @classmethod
    def gen(cls, g: int, i: int) -> "LambdaPoly":
        """v_i, with v_0 = 1 and v_i = 0 outside 0..g."""
        if i == 0:
            return cls.constant(g)
        if i < 0 or i > g:
            return cls.zero(g)
        e = [0] * g
        e[i - 1] = 1
        return cls(g, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff=1) -> "LambdaPoly":
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: Fraction(coeff)})

    @staticmethod
    def weight(exponent: Exponent) -> int:
        return sum((i + 1) * a for i, a in enumerate(exponent))

    def degrees(self) -> set[int]:
        return {self.weight(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Weighted degree of a homogeneous polynomial (None for zero)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("polynomial is not homogeneous")
        return next(iter(ds), None)

    def component(self, d: int) -> "LambdaPoly":
        return LambdaPoly(self.genus, {k: c for k, c in self.terms.items() if self.weight(k) == d})

    def to_string(self, symbol: str = "v") -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda e: (self.weight(e), e)):
            c = self.terms[k]
            mono = "*".join(
                f"{symbol}{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(k) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.to_string()


@dataclass(eq=False)
class SymRootPoly(_SparsePoly):
    genus: int
    terms: dict[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for k in self.terms:
            if len(k) != self.genus:
                raise ValueError(f"exponent {k} has wrong length for genus {self.genus}")
        self.terms = _clean(self.terms)

    @classmethod
    def root(cls, g: int, i: int) -> "SymRootPoly":
        """The root r_i, 1-indexed."""
        e = [0] * g
        e[i - 1] = 1
        return cls(g, {tuple(e): Fraction(1)})

    def is_symmetric(self) -> bool:
        g = self.genus
        for i in range(g - 1):
            swapped = {}
            for k, c in self.terms.items():
                k2 = list(k)
                k2[i], k2[i + 1] = k2[i + 1], k2[i]
                swapped[tuple(k2)] = c
            if swapped != self.terms:
                return False
        return True


def poly_add(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    return p + q


def poly_mul(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    return p * q


@lru_cache(maxsize=None)
def _elementary_roots(g: int, i: int) -> SymRootPoly:
    terms = {}
    for combo in set(permutations([1] * i + [0] * (g - i))):
        terms[combo] = Fraction(1)
    return SymRootPoly(g, terms)


@lru_cache(maxsize=None)
def _elementary_power_product(e_exp: Exponent) -> SymRootPoly:
    """prod_i e_i(r)^{e_exp[i-1]} expanded in the roots."""
    g = len(e_exp)
    if not any(e_exp):
        return SymRootPoly.constant(g)
    i = max(j for j, a in enumerate(e_exp) if a)
    lower = list(e_exp)
    lower[i] -= 1
    return _elementary_power_product(tuple(lower)) * _elementary_roots(g, i + 1)


def elementary_to_lambda(s: SymRootPoly) -> LambdaPoly:
    """Rewrite a symmetric root polynomial in e_1..e_g, then set e_i -> v_i."""
    if not s.is_symmetric():
        raise ValueError("polynomial is not symmetric in the roots")
    g = s.genus
    rest = dict(s.terms)
    out: dict[Exponent, Fraction] = {}
    while rest:
        lead = max(rest)
        c = rest[lead]
        # lead is weakly decreasing; e-exponents are its successive differences
        e_exp = tuple(lead[i] - (lead[i + 1] if i + 1 < g else 0) for i in range(g))
        out[e_exp] = out.get(e_exp, 0) + c
        for k, ck in _elementary_power_product(e_exp).terms.items():
            _add_into(rest, k, -c * ck)
    return LambdaPoly(g, out)


@lru_cache(maxsize=None)
def _ctop_sym2(g: int) -> LambdaPoly:
    roots = [SymRootPoly.root(g, i) for i in range(1, g + 1)]
    prod = SymRootPoly.constant(g)
    for i in range(g):
        for j in range(i, g):
            prod = prod * (roots[i] + roots[j])
    return elementary_to_lambda(prod)


def ctop_sym2(g: int, dualize: bool = False) -> LambdaPoly:
    """Top Chern class of Sym^2 of a rank-g bundle, in its Chern classes.

    With ``dualize`` the bundle is replaced by its dual, which multiplies the
    result by (-1)^{g(g+1)/2}.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    p = _ctop_sym2(g)
    if dualize and (g * (g + 1) // 2) % 2:
        return -p
    return p


def giambelli_matrix(g: int) -> list[list[LambdaPoly]]:
    return [
        [LambdaPoly.gen(g, g - 2 * i + j) for j in range(g)]
        for i in range(g)
    ]


def _det(matrix: list[list[LambdaPoly]]) -> LambdaPoly:
    # Laplace expansion along rows, memoized on the set of used columns
    n = len(matrix)
    g = matrix[0][0].genus
    memo: dict[int, LambdaPoly] = {}

    def minor(row: int, used: int) -> LambdaPoly:
        if row == n:
            return LambdaPoly.constant(g)
        if used in memo:
            return memo[used]
        total = LambdaPoly.zero(g)
        sign = 1
        for col in range(n):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if entry:
                sub = minor(row + 1, used | (1 << col))
                if sub:
                    total = total + entry * sub * sign
            sign = -sign
        memo[used] = total
        return total

    return minor(0, 0)


def giambelli_det(g: int) -> LambdaPoly:
    """2^g times the determinant with entries v_{g - 2i + j} (0-indexed i, j)."""
    if g < 1:
        raise ValueError("g must be >= 1")
    return _det(giambelli_matrix(g)) * (2 ** g)
