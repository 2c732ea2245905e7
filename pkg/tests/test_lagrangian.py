from fractions import Fraction

import pytest

from conftest import localization_integral
from siegel_chi.hodgering import weighted_monomials
from siegel_chi.lagrangian import (
    lg_betti,
    lg_betti_cells,
    lg_euler_char,
    lg_integrate,
    lg_normalize,
    max_ring_genus,
)


@pytest.mark.parametrize("g, betti", [(1, [1, 1]), (2, [1, 1, 1, 1]), (3, [1, 1, 1, 2, 1, 1, 1])])
def test_betti_examples(g, betti):
    assert lg_betti(g) == betti


@pytest.mark.parametrize("g", range(1, 7))
def test_euler_char_and_duality(g):
    betti = lg_betti(g)
    assert lg_euler_char(g) == 2 ** g
    assert betti == betti[::-1]
    assert betti == lg_betti_cells(g)


def test_euler_char_examples():
    assert [lg_euler_char(g) for g in (1, 3, 5)] == [2, 8, 32]


@pytest.mark.parametrize("g, expected", [(1, -1), (2, -1), (3, 1), (4, 1), (5, -1)])
def test_top_monomial_normalization(g, expected):
    assert lg_integrate(lg_normalize(g), (1,) * g) == expected == (-1) ** (g * (g + 1) // 2)


def test_integrate_examples():
    assert lg_integrate(lg_normalize(2), (3, 0)) == -2
    assert lg_integrate(lg_normalize(2), (1, 1)) == -1
    assert lg_normalize(1).top_scale == -1


@pytest.mark.parametrize("g", range(1, 5))
def test_non_top_degree_is_zero(g):
    integ = lg_normalize(g)
    top = g * (g + 1) // 2
    for d in range(top):
        for e in weighted_monomials(g, d):
            assert lg_integrate(integ, e) == 0


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_all_top_monomials_match_localization(g, generic_weights):
    """Atiyah-Bott on the 2^g fixed points is an independent route to every integral."""
    integ = lg_normalize(g)
    w = generic_weights[:g]
    for e in weighted_monomials(g, g * (g + 1) // 2):
        assert lg_integrate(integ, e) == localization_integral(e, w), e


def test_localization_is_weight_independent():
    a = (0, 0, 2)
    assert localization_integral(a, (2, 5, 11)) == localization_integral(a, (3, 13, 17))


def test_bad_exponent_vector():
    with pytest.raises(ValueError):
        lg_integrate(lg_normalize(2), (1,))


def test_ring_cap_env(monkeypatch):
    monkeypatch.delenv("SIEGEL_CHI_MAX_G", raising=False)
    assert max_ring_genus() == 6
    monkeypatch.setenv("SIEGEL_CHI_MAX_G", "3")
    assert max_ring_genus() == 3
    # beyond the cap the cell count is used
    assert lg_euler_char(5) == 32
    monkeypatch.setenv("SIEGEL_CHI_MAX_G", "zero")
    with pytest.raises(ValueError):
        max_ring_genus()
