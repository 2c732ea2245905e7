"""Integration on the Lagrangian Grassmannian LG_g.

The cohomology ring is the Mumford quotient in the variables x_i = c_i(S),
S the tautological subbundle.  The integration functional is fixed by
Gauss-Bonnet: the tangent bundle is Sym^2 of the dual of S and its top
Chern class must integrate to chi(LG_g) = sum of Betti numbers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .hodgering import GradedQuotientRing, build_quotient, normal_form, strict_partition_counts, top_degree
from .symlambda import LambdaPoly, ctop_sym2

__all__ = [
    "LGIntegrator",
    "max_ring_genus",
    "lg_betti",
    "lg_betti_cells",
    "lg_euler_char",
    "lg_normalize",
    "lg_integrate",
]

DEFAULT_MAX_RING_GENUS = 6


def max_ring_genus() -> int:
    """Largest genus for which quotient rings are built (env SIEGEL_CHI_MAX_G)."""
    raw = os.environ.get("SIEGEL_CHI_MAX_G")
    if not raw:
        return DEFAULT_MAX_RING_GENUS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SIEGEL_CHI_MAX_G must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("SIEGEL_CHI_MAX_G must be >= 1")
    return value


@dataclass(frozen=True)
class LGIntegrator:
    genus: int
    ring: GradedQuotientRing
    top_basis_monomial: tuple[int, ...]
    top_scale: Fraction

    def integrate(self, a: Iterable[int]) -> Fraction:
        return lg_integrate(self, a)


def lg_betti(g: int) -> list[int]:
    """Graded dimensions of H^*(LG_g), read off the quotient ring."""
    return build_quotient(g).dims()


def lg_betti_cells(g: int) -> list[int]:
    """Betti numbers from the Schubert cell count (strict partitions, parts <= g)."""
    return strict_partition_counts(g)


def lg_euler_char(g: int) -> int:
    """chi(LG_g); from the ring up to max_ring_genus(), from the cell count beyond."""
    if g < 1:
        raise ValueError("g must be >= 1")
    if g <= max_ring_genus():
        return sum(lg_betti(g))
    return sum(lg_betti_cells(g))


@lru_cache(maxsize=None)
def lg_normalize(g: int) -> LGIntegrator:
    ring = build_quotient(g)
    top = ring.bases[ring.top]
    if len(top) != 1:
        raise RuntimeError(f"top graded piece has dimension {len(top)}, expected 1")
    (mono,) = top
    tangent_top = normal_form(ring, ctop_sym2(g, dualize=True))
    c = tangent_top.coefficient(mono)
    if c == 0:
        raise RuntimeError("top Chern class of the tangent bundle reduced to zero")
    scale = Fraction(sum(ring.dims())) / c
    return LGIntegrator(g, ring, mono, scale)


def lg_integrate(integrator: LGIntegrator, a: Iterable[int]) -> Fraction:
    """Integral of x_1^{a_1} ... x_g^{a_g}; zero unless the degree is the top one."""
    a = tuple(a)
    g = integrator.genus
    if len(a) != g:
        raise ValueError(f"exponent vector must have length {g}")
    if any(x < 0 for x in a):
        raise ValueError("exponents must be non-negative")
    if LambdaPoly.weight(a) != top_degree(g):
        return Fraction(0)
    nf = normal_form(integrator.ring, LambdaPoly.monomial(a))
    return nf.coefficient(integrator.top_basis_monomial) * integrator.top_scale
