"""Euler characteristics of A_g and the Hodge integrals that produce them.

Three routes to chi(A_g) are provided:

* ``chi_product``: the product of zeta(1 - 2k), k = 1..g;
* ``chi_recursive``: chi(A_1) = -2 * int psi on M_{1,1}, then
  chi(A_g) = (-1)^g tau(g) chi(A_{g-1}) where tau(g) is the ratio of two
  closed-form Hodge integrals;
* ``chi_gaussbonnet``: (-1)^{g(g+1)/2} 2^g int lambda_1...lambda_g, with the
  integral evaluated by proportionality against LG_g.  The proportionality
  constant is itself defined from ``chi_product``, so this route only checks
  that ring, signs and normalisation close up; it is not independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable

from .exactnum import bernoulli, zeta_neg
from .hodgering import top_degree
from .lagrangian import lg_euler_char, lg_integrate, lg_normalize, max_ring_genus

__all__ = [
    "HodgeConstants",
    "HODGE",
    "ChiReport",
    "hodge_triple_integral",
    "epsilon_bg_evaluation",
    "tau",
    "chi_product",
    "chi_recursive",
    "proportionality_K",
    "integrate_abar",
    "chi_gaussbonnet",
    "lambda_product_integral",
    "lambda_product_nonvanishing",
    "chi_report",
]


@dataclass(frozen=True)
class HodgeConstants:
    psi_m11: Fraction = Fraction(1, 24)  # int over M_{1,1}-bar of psi
    half: Fraction = Fraction(1, 2)  # int over the cycle locus in M_{1,1}


HODGE = HodgeConstants()


def _require_g2(g: int) -> None:
    if g < 2:
        raise ValueError(f"needs g >= 2, got {g}")


def _abs_bern_ratio(n: int) -> Fraction:
    """|B_n| / n."""
    return abs(bernoulli(n)) / n


def hodge_triple_integral(g: int) -> Fraction:
    """int over M_g-bar of lambda_g lambda_{g-1} lambda_{g-2}."""
    _require_g2(g)
    return _abs_bern_ratio(2 * g - 2) * _abs_bern_ratio(2 * g) / (2 * factorial(2 * g - 2))


def epsilon_bg_evaluation(g: int, constants: HodgeConstants = HODGE) -> Fraction:
    """lambda_{g-1}-evaluation of lambda_{g-2} [B_g] against the Torelli image.

    Equals (int of 1 over the cycle locus) times a Hodge integral on
    M_{g-1,1}-bar, the latter being |B_{2g-2}| / ((2g-2) (2g-2)!).
    """
    _require_g2(g)
    return constants.half * _abs_bern_ratio(2 * g - 2) / factorial(2 * g - 2)


def tau(g: int, constants: HodgeConstants = HODGE) -> Fraction:
    """The factor with lambda_g = tau(g) [B_g]; equals |B_{2g}| / (2g)."""
    return hodge_triple_integral(g) / epsilon_bg_evaluation(g, constants)


def chi_product(g: int) -> Fraction:
    if g < 1:
        raise ValueError("g must be >= 1")
    out = Fraction(1)
    for k in range(1, g + 1):
        out *= zeta_neg(k)
    return out


def chi_recursive(g: int, constants: HodgeConstants = HODGE) -> Fraction:
    if g < 1:
        raise ValueError("g must be >= 1")
    chi = -2 * constants.psi_m11
    for h in range(2, g + 1):
        chi = (-1) ** h * tau(h, constants) * chi
    return chi


def proportionality_K(g: int) -> Fraction:
    """K(g) with chi(A_g) = K(g) chi(LG_g)."""
    return chi_product(g) / lg_euler_char(g)


def integrate_abar(g: int, a: Iterable[int]) -> Fraction:
    """int over A_g-bar of lambda^a, via K(g) times the matching LG_g integral."""
    a = tuple(a)
    if len(a) != g:
        raise ValueError(f"exponent vector must have length {g}")
    if sum((i + 1) * x for i, x in enumerate(a)) != top_degree(g):
        return Fraction(0)
    return proportionality_K(g) * lg_integrate(lg_normalize(g), a)


def chi_gaussbonnet(g: int) -> Fraction:
    """Log Gauss-Bonnet route; a consistency check, see the module docstring."""
    sign = (-1) ** top_degree(g)
    return sign * 2 ** g * integrate_abar(g, (1,) * g)


def lambda_product_integral(g: int) -> Fraction:
    """int lambda_1...lambda_g = (-1)^{g(g+1)/2} 2^{-g} chi(A_g), closed form."""
    return (-1) ** top_degree(g) * chi_product(g) / 2 ** g


def lambda_product_nonvanishing(g: int) -> bool:
    """Whether int lambda_1 ... lambda_g is nonzero.

    Uses the quotient-ring route up to max_ring_genus() and the closed form
    above that, where the ring is too large to build.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    if g <= max_ring_genus():
        return integrate_abar(g, (1,) * g) != 0
    return lambda_product_integral(g) != 0


@dataclass
class ChiReport:
    g: int
    chi_product: Fraction
    chi_recursive: Fraction
    chi_gaussbonnet: Fraction | None
    K: Fraction
    tau: Fraction | None
    notes: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        values = {self.chi_product, self.chi_recursive}
        if self.chi_gaussbonnet is not None:
            values.add(self.chi_gaussbonnet)
        return len(values) == 1


def chi_report(g: int) -> ChiReport:
    notes = ["gaussbonnet is a consistency route: K(g) is defined from chi_product"]
    gb = None
    if g <= max_ring_genus():
        gb = chi_gaussbonnet(g)
    else:
        notes.append(f"gaussbonnet skipped: g > {max_ring_genus()} (SIEGEL_CHI_MAX_G)")
    return ChiReport(
        g=g,
        chi_product=chi_product(g),
        chi_recursive=chi_recursive(g),
        chi_gaussbonnet=gb,
        K=proportionality_K(g),
        tau=tau(g) if g >= 2 else None,
        notes=notes,
    )
