"""Tests for torsor strata, cylinders and their measures."""

from __future__ import annotations

import math

import pytest

from wild_mckay.config import BudgetExceeded
from wild_mckay.lring import ONE, mv_eq, mv_L, mv_poly, mv_specialize
from wild_mckay.moduli import (
    InvalidOrder,
    InvalidStratum,
    StratumH,
    TorsorClass,
    TorsorGroup,
    count_stratum_points,
    cylinder_measure_G,
    delta_G_level_dim,
    dim_delta_H_geq,
    level_stability_check,
    partition_check,
    raise_level,
    strata_up_to,
    stratum_class_H,
    stratum_cylinder_G,
    torsor_presentation,
    validate_order,
)
from wild_mckay.primes import InvalidPrime, WrongCharacteristic


class TestStrata:
    @pytest.mark.parametrize("p,j,dim", [(2, 1, 1), (2, 3, 2), (3, 4, 3), (3, 5, 4), (5, 7, 6)])
    def test_dim_delta_H(self, p, j, dim):
        assert dim_delta_H_geq(p, j) == dim

    def test_delta_G_level_dim_adds_fiber(self):
        assert delta_G_level_dim(3, 4, 2) == 3 + 2 * 2

    def test_stratum_class(self):
        assert mv_eq(stratum_class_H(StratumH(prime=3, j=4)), mv_poly({3: 1, 2: -1}))
        assert stratum_class_H(StratumH.zero(3)) == ONE

    @pytest.mark.parametrize("j", [0, 3, 6, -1])
    def test_invalid_index(self, j):
        with pytest.raises(InvalidStratum):
            StratumH(prime=3, j=j)

    def test_invalid_prime(self):
        with pytest.raises(InvalidPrime):
            StratumH(prime=4, j=1)

    def test_strata_up_to_skips_multiples_of_p(self):
        assert [s.j for s in strata_up_to(3, 7)] == [None, 1, 2, 4, 5, 7]

    def test_zero_stratum_order(self):
        assert StratumH.zero(2).order == math.inf
        assert StratumH(prime=2, j=5).order == -5

    @pytest.mark.parametrize("p,J", [(2, 9), (3, 10), (5, 12), (7, 20)])
    def test_partition(self, p, J):
        assert partition_check(p, J).passed


class TestCylinders:
    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("level", [0, 1, 3])
    def test_zero_stratum_has_measure_one(self, p, level):
        assert mv_eq(cylinder_measure_G(stratum_cylinder_G(StratumH.zero(p), level)), ONE)

    def test_measure_matches_H_class(self):
        s = StratumH(prime=5, j=7)
        assert mv_eq(cylinder_measure_G(stratum_cylinder_G(s, 2)), stratum_class_H(s))

    def test_raise_level_keeps_measure(self):
        c = stratum_cylinder_G(StratumH(prime=3, j=2), 1)
        lifted = raise_level(c, 4)
        assert lifted.level == 5
        assert mv_eq(cylinder_measure_G(lifted), cylinder_measure_G(c))
        assert level_stability_check(c).passed


def _point_count_grid() -> list[tuple[int, int, int]]:
    """Every p <= 5, j <= 10 with p not dividing j, and q in {2, 3, 4, 5} a power of p."""
    powers = {2: (2, 4), 3: (3,), 5: (5,)}
    return [(p, j, q) for p, qs in powers.items() for j in range(1, 11) if j % p for q in qs]


class TestPointCounts:
    @pytest.mark.parametrize("p,j,q", _point_count_grid())
    def test_count_matches_class(self, p, j, q):
        expected = mv_specialize(stratum_class_H(StratumH(prime=p, j=j)), q)
        assert count_stratum_points(p, j, q) == expected

    def test_grid_covers_every_stratum(self):
        grid = _point_count_grid()
        assert len(grid) == 2 * 5 + 7 + 8
        assert max(j - j // p for p, j, _ in grid) == 8

    def test_zero_stratum_is_a_point(self):
        assert count_stratum_points(3, None, 9) == 1

    def test_wrong_characteristic(self):
        with pytest.raises(WrongCharacteristic):
            count_stratum_points(3, 2, 4)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            count_stratum_points(2, 7, 4, budget=10)


class TestTorsors:
    def test_validate_order(self):
        assert validate_order(-4, 3, TorsorGroup.H) == -4
        assert validate_order(2, 3, TorsorGroup.G) == 2
        assert validate_order(math.inf, 3, TorsorGroup.H) == math.inf

    @pytest.mark.parametrize(
        "order,group",
        [(-3, TorsorGroup.H), (6, TorsorGroup.G), (1, TorsorGroup.H), (0, TorsorGroup.G), (1.5, TorsorGroup.G)],
    )
    def test_invalid_orders(self, order, group):
        with pytest.raises(InvalidOrder):
            validate_order(order, 3, group)

    def test_presentations(self):
        h = torsor_presentation(TorsorClass(group=TorsorGroup.H, order_of_f=-2, prime=3))
        assert "z^3 - z - f" in h and "z + 1" in h
        g0 = torsor_presentation(TorsorClass(group=TorsorGroup.G, order_of_f=math.inf, prime=3))
        assert "z^3" in g0 and "non-reduced" in g0
        g = torsor_presentation(TorsorClass(group=TorsorGroup.G, order_of_f=-4, prime=5))
        assert "z^5 - f" in g and "ε" in g

    def test_trivial_class(self):
        assert TorsorClass(group=TorsorGroup.G, order_of_f=math.inf, prime=2).is_trivial
        assert not TorsorClass(group=TorsorGroup.G, order_of_f=3, prime=2).is_trivial


def test_affine_space_normalization():
    # [Delta_H^{>=-J}] = L^{J - floor(J/p)}
    total = ONE
    for s in strata_up_to(5, 11)[1:]:
        total = total + stratum_class_H(s)
    assert mv_eq(total, mv_L(11 - 2))
