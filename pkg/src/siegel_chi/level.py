"""Euler characteristics of moduli of abelian varieties with polarization type delta.

chi(A_{g,delta}) = deg(phi_delta) / deg(pi_delta) * chi(A_g), with the degree
ratio given in closed form by a monomial in the d_i and a product over the
distinct primes dividing each quotient d_j / d_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .eulerhodge import chi_product

__all__ = [
    "PolarizationError",
    "PolarizationType",
    "validate_type",
    "prime_divisors",
    "degree_ratio",
    "chi_level",
]


class PolarizationError(ValueError):
    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class PolarizationType:
    degrees: tuple[int, ...]

    def __post_init__(self):
        _check(self.degrees)

    @property
    def g(self) -> int:
        return len(self.degrees)

    @property
    def is_principal(self) -> bool:
        return all(d == 1 for d in self.degrees)

    def kernel_order(self) -> int:
        """Order of (Z/d_1 x ... x Z/d_g)^2."""
        n = 1
        for d in self.degrees:
            n *= d * d
        return n


def _check(degrees: tuple[int, ...]) -> None:
    if not degrees:
        raise PolarizationError("polarization type must be non-empty")
    for d in degrees:
        if not isinstance(d, int) or d < 1:
            raise PolarizationError(f"entries must be positive integers, got {d!r}")
    for a, b in zip(degrees, degrees[1:]):
        if b % a:
            raise PolarizationError(f"divisibility fails at pair ({a}, {b}): {a} does not divide {b}", (a, b))


def validate_type(degrees: Iterable[int]) -> PolarizationType:
    return PolarizationType(tuple(degrees))


def prime_divisors(n: int) -> list[int]:
    """Distinct primes dividing n, by trial division with a 2-3-5 wheel."""
    if n < 1:
        raise ValueError("n must be positive")
    primes = []
    for p in (2, 3, 5):
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
    gaps = (4, 2, 4, 2, 4, 6, 2, 6)
    p, i = 7, 0
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += gaps[i]
        i = (i + 1) % len(gaps)
    if n > 1:
        primes.append(n)
    return primes


def degree_ratio(delta: PolarizationType | Iterable[int]) -> Fraction:
    """deg(phi_delta) / deg(pi_delta) for a polarization type delta.

    The monomial part gives d_i the exponent 4i - 2g - 2, so d_g carries
    2g - 2 and d_1 carries 2 - 2g.
    """
    if not isinstance(delta, PolarizationType):
        delta = validate_type(delta)
    d = delta.degrees
    g = len(d)
    ratio = Fraction(1)
    for i, di in enumerate(d, start=1):
        ratio *= Fraction(di) ** (4 * i - 2 * g - 2)
    for i in range(g):
        for j in range(i + 1, g):
            gap = j - i
            for p in prime_divisors(d[j] // d[i]):
                ratio *= (1 - Fraction(1, p ** (2 * (gap + 1)))) / (1 - Fraction(1, p ** (2 * gap)))
    return ratio


def chi_level(delta: PolarizationType | Iterable[int]) -> Fraction:
    if not isinstance(delta, PolarizationType):
        delta = validate_type(delta)
    return degree_ratio(delta) * chi_product(delta.g)
