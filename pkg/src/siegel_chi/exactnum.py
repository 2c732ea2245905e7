"""Exact scalars: Bernoulli numbers and zeta values at negative odd integers.

All scalars are :class:`fractions.Fraction`, which keeps values in lowest
terms with a positive denominator and arbitrary-precision integers.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

__all__ = ["Rational", "bernoulli", "zeta_neg", "parse_rational", "render_rational"]

Rational = Fraction

_BERNOULLI: list[Fraction] = [Fraction(1)]
_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Return B_n with the convention B_1 = -1/2.

    Values come from the recurrence ``sum_{k<=n} C(n+1, k) B_k = 0`` and are
    memoized, so asking for B_60 after B_58 costs a single step.
    """
    if n < 0:
        raise ValueError(f"bernoulli index must be >= 0, got {n}")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _LOCK:
        cache = _BERNOULLI
        for m in range(len(cache), n + 1):
            if m >= 3 and m % 2 == 1:
                cache.append(Fraction(0))
                continue
            s = sum((comb(m + 1, k) * cache[k] for k in range(m)), Fraction(0))
            cache.append(-s / (m + 1))
        return cache[n]


def zeta_neg(g: int) -> Fraction:
    """zeta(1 - 2g) = -B_{2g} / (2g); its sign is (-1)^g."""
    if g < 1:
        raise ValueError(f"zeta_neg needs g >= 1, got {g}")
    return -bernoulli(2 * g) / (2 * g)


def render_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
