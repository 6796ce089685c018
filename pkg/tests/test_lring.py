"""Tests for the motivic value ring and truncated series.

Contract:
    - mv_add / mv_mul obey the commutative ring laws (checked with mv_eq)
    - infinity absorbs sums and products; inf - inf and inf * 0 raise
    - mv_reduce cancels exactly dividing factors without changing the value
    - geom_sum raises Divergent for ratio exponents >= 0
    - mv_expand agrees with direct multiplication of truncated series
    - every value agrees with the same rational function built in sympy
"""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from wild_mckay.errors import WildMcKayError
from wild_mckay.lring import (
    INFINITY,
    ONE,
    ZERO,
    Divergent,
    IndeterminateProduct,
    IndeterminateSum,
    InvalidMotivicValue,
    InvalidWindow,
    MotivicValue,
    PoleAtQ,
    TruncatedSeries,
    geom_sum,
    mv_add,
    mv_eq,
    mv_expand,
    mv_fraction,
    mv_from_dict,
    mv_L,
    mv_mul,
    mv_neg,
    mv_poly,
    mv_reduce,
    mv_render,
    mv_shift,
    mv_specialize,
    mv_sub,
    mv_tail_bound,
    mv_to_dict,
    series_agree,
    series_eval,
    series_render,
    series_tail_bound,
)

# ── strategies ──────────────────────────────────────────────────────

_numerators = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=4)
_factors = st.lists(st.integers(1, 4), max_size=2)


@st.composite
def motivic_values(draw) -> MotivicValue:
    return mv_fraction(draw(_numerators), draw(_factors))


# ── ring laws ───────────────────────────────────────────────────────


class TestRingLaws:
    @given(motivic_values(), motivic_values())
    def test_addition_commutes(self, a, b):
        assert mv_eq(mv_add(a, b), mv_add(b, a))

    @given(motivic_values(), motivic_values())
    def test_multiplication_commutes(self, a, b):
        assert mv_eq(mv_mul(a, b), mv_mul(b, a))

    @settings(max_examples=50)
    @given(motivic_values(), motivic_values(), motivic_values())
    def test_distributive(self, a, b, c):
        assert mv_eq(mv_mul(a, mv_add(b, c)), mv_add(mv_mul(a, b), mv_mul(a, c)))

    @settings(max_examples=50)
    @given(motivic_values(), motivic_values(), motivic_values())
    def test_addition_associates(self, a, b, c):
        assert mv_eq(mv_add(mv_add(a, b), c), mv_add(a, mv_add(b, c)))

    @given(motivic_values())
    def test_additive_inverse(self, a):
        assert mv_eq(mv_add(a, mv_neg(a)), ZERO)

    @given(motivic_values())
    def test_units(self, a):
        assert mv_eq(mv_add(a, ZERO), a)
        assert mv_eq(mv_mul(a, ONE), a)

    @given(motivic_values())
    def test_reduce_preserves_value(self, a):
        assert mv_eq(mv_reduce(a), a)

    @given(motivic_values(), motivic_values())
    def test_specialization_is_a_homomorphism(self, a, b):
        q = 2
        assert mv_specialize(mv_add(a, b), q) == mv_specialize(a, q) + mv_specialize(b, q)
        assert mv_specialize(mv_mul(a, b), q) == mv_specialize(a, q) * mv_specialize(b, q)

    def test_operator_sugar(self):
        assert mv_eq(mv_L() * mv_L() - 1, mv_poly({2: 1, 0: -1}))
        assert mv_eq(2 + mv_L(), mv_poly({1: 1, 0: 2}))


# ── sympy cross-check ───────────────────────────────────────────────

_L = sympy.Symbol("L")


def _as_sympy(v: MotivicValue) -> sympy.Expr:
    num = sympy.Add(*(c * _L**e for e, c in v.numerator))
    den = sympy.Mul(*(1 - _L**-a for a in v.denominator_factors))
    return num / den


def _same_function(x: sympy.Expr, y: sympy.Expr) -> bool:
    return sympy.cancel(sympy.together(x - y)) == 0


class TestAgainstSympy:
    @settings(max_examples=30, deadline=None)
    @given(motivic_values(), motivic_values())
    def test_sum_and_product(self, a, b):
        assert _same_function(_as_sympy(mv_add(a, b)), _as_sympy(a) + _as_sympy(b))
        assert _same_function(_as_sympy(mv_mul(a, b)), _as_sympy(a) * _as_sympy(b))

    @settings(max_examples=30, deadline=None)
    @given(motivic_values(), motivic_values())
    def test_equality_matches_rational_functions(self, a, b):
        assert mv_eq(a, b) == _same_function(_as_sympy(a), _as_sympy(b))

    @settings(max_examples=30, deadline=None)
    @given(motivic_values())
    def test_reduce(self, a):
        assert _same_function(_as_sympy(mv_reduce(a)), _as_sympy(a))

    @pytest.mark.parametrize("r", [-1, -2, -5])
    def test_geom_sum_closed_form(self, r):
        term = mv_poly({2: 1, 0: -1})
        assert _same_function(_as_sympy(geom_sum(term, r)), (_L**2 - 1) / (1 - _L**r))


# ── infinity ────────────────────────────────────────────────────────


class TestInfinity:
    def test_absorbs_sums_and_products(self):
        assert mv_add(INFINITY, mv_L(3)).infinite
        assert mv_mul(INFINITY, mv_L(-1)).infinite
        assert mv_neg(INFINITY).infinite

    def test_infinity_minus_infinity_raises(self):
        with pytest.raises(IndeterminateSum):
            mv_sub(INFINITY, INFINITY)

    def test_infinity_times_zero_raises(self):
        with pytest.raises(IndeterminateProduct):
            mv_mul(INFINITY, ZERO)

    def test_equal_only_to_itself(self):
        assert mv_eq(INFINITY, INFINITY)
        assert not mv_eq(INFINITY, ONE)

    def test_cannot_carry_terms(self):
        with pytest.raises(InvalidMotivicValue):
            MotivicValue(numerator=((0, 1),), infinite=True)


# ── reduction and rendering ─────────────────────────────────────────


class TestReduceAndRender:
    def test_reduce_cancels_exact_factor(self):
        # (1 - L^-1) / (1 - L^-1)
        reduced = mv_reduce(mv_fraction({0: 1, -1: -1}, [1]))
        assert reduced.denominator_factors == ()
        assert reduced == ONE

    def test_reduce_keeps_non_dividing_factor(self):
        value = mv_fraction({2: 1, 1: -1}, [3])
        assert mv_reduce(value).denominator_factors == (3,)

    def test_reduce_to_polynomial(self):
        # L^2 (1 - L^-1)(1 - L^-2) = L^2 - L - 1 + L^-1
        value = mv_fraction({2: 1, 1: -1, 0: -1, -1: 1}, [1, 2])
        assert mv_reduce(value) == mv_L(2)

    @pytest.mark.parametrize(
        "value,text",
        [
            (mv_poly({1: 2, 0: 1}), "2*L + 1"),
            (mv_poly({3: 1, 2: 2}), "L^3 + 2*L^2"),
            (mv_L(-2), "L^-2"),
            (mv_poly({1: -1, 0: 1}), "-L + 1"),
            (mv_fraction({2: 1, 1: -1}, [3]), "(L^2 - L)/(1 - L^-3)"),
            (mv_fraction({1: 1}, [1, 2]), "L/((1 - L^-1)*(1 - L^-2))"),
            (ZERO, "0"),
            (INFINITY, "infinity"),
        ],
    )
    def test_render(self, value, text):
        assert mv_render(value) == text

    def test_dict_form(self):
        value = mv_fraction({2: 1, 1: -1}, [3])
        assert mv_to_dict(value) == {"infinite": False, "num": [[2, 1], [1, -1]], "den": [3]}
        assert mv_from_dict(mv_to_dict(INFINITY)) == INFINITY

    @pytest.mark.parametrize(
        "payload",
        [
            [],
            {"infinite": True, "num": [[0, 1]], "den": []},
            {"num": [[0]], "den": []},
            {"num": [[0, 1]], "den": [0]},
            {"num": "L", "den": []},
        ],
    )
    def test_from_dict_rejects_malformed(self, payload):
        with pytest.raises(InvalidMotivicValue):
            mv_from_dict(payload)


# ── geometric sums and specialization ───────────────────────────────


class TestGeomSum:
    @pytest.mark.parametrize("r", [0, 1, 5])
    def test_nonnegative_ratio_diverges(self, r):
        with pytest.raises(Divergent):
            geom_sum(ONE, r)

    def test_closed_form(self):
        value = geom_sum(mv_L(2), -3)
        assert value.denominator_factors == (3,)
        assert mv_specialize(value, 2) == Fraction(4) / (1 - Fraction(1, 8))

    def test_specialize_pole(self):
        with pytest.raises(PoleAtQ):
            mv_specialize(geom_sum(ONE, -1), 1)
        with pytest.raises(PoleAtQ):
            mv_specialize(INFINITY, 3)

    def test_shift(self):
        assert mv_shift(mv_poly({1: 1, 0: -1}), 2) == mv_poly({3: 1, 2: -1})


# ── truncated series ────────────────────────────────────────────────


class TestSeries:
    def test_expand_geometric(self):
        s = mv_expand(geom_sum(ONE, -1), -3)
        assert (s.window_low, s.window_high) == (-3, 0)
        assert [s.coefficient(e) for e in range(0, -4, -1)] == [1, 1, 1, 1]

    def test_expand_product_of_factors(self):
        # 1 / ((1 - L^-1)(1 - L^-2)) counts partitions into parts 1 and 2
        s = mv_expand(mv_fraction({0: 1}, [1, 2]), -5)
        assert [s.coefficient(-k) for k in range(6)] == [1, 1, 2, 2, 3, 3]

    def test_expand_infinity_raises(self):
        with pytest.raises(PoleAtQ):
            mv_expand(INFINITY, 0)

    def test_window_validation(self):
        with pytest.raises(InvalidWindow):
            TruncatedSeries(window_low=1, window_high=0)
        with pytest.raises(InvalidWindow):
            TruncatedSeries(window_low=0, window_high=1, coefficients=((3, 1),))
        with pytest.raises(InvalidWindow):
            TruncatedSeries.build(0, 2, {1: 1}).restrict(-1)

    def test_agree_on_overlap(self):
        a = TruncatedSeries.build(-2, 1, {1: 1, -1: 2, -2: 5})
        b = TruncatedSeries.build(-1, 1, {1: 1, -1: 2})
        assert series_agree(a, b)
        assert not series_agree(a, TruncatedSeries.build(-1, 1, {1: 1}))

    def test_eval_and_tail_bound(self):
        s = mv_expand(geom_sum(ONE, -1), -4)
        exact = mv_specialize(geom_sum(ONE, -1), 2)
        assert abs(exact - series_eval(s, 2)) <= series_tail_bound(s, 2, 1)

    def test_repeated_factors_need_a_larger_bound(self):
        # coefficients of 1/(1 - L^-1)^3 are C(n + 2, 2), so a unit coefficient bound is too small
        value = mv_fraction({0: 1}, [1, 1, 1])
        s = mv_expand(value, -6)
        error = abs(mv_specialize(value, 2) - series_eval(s, 2))
        assert error > series_tail_bound(s, 2, 1)
        assert error == mv_tail_bound(value, -6, 2)

    @settings(max_examples=60)
    @given(motivic_values(), st.sampled_from([2, 3, 4, 5]), st.integers(-10, 3))
    def test_expansion_matches_specialization(self, value, q, lo):
        error = abs(mv_specialize(value, q) - series_eval(mv_expand(value, lo), q))
        assert error <= mv_tail_bound(value, lo, q)

    def test_tail_bound_shrinks_with_window(self):
        value = mv_fraction({2: 1, 1: -1}, [1, 3])
        bounds = [mv_tail_bound(value, lo, 3) for lo in (0, -5, -10, -20)]
        assert bounds == sorted(bounds, reverse=True)
        assert bounds[-1] < Fraction(1, 10**6)

    def test_tail_bound_needs_q_above_one(self):
        with pytest.raises(WildMcKayError):
            mv_tail_bound(ONE, 0, 1)
        with pytest.raises(PoleAtQ):
            mv_tail_bound(INFINITY, 0, 2)

    def test_render(self):
        assert series_render(TruncatedSeries.build(-1, 1, {1: 1, 0: -2})) == "L - 2 + O(L^-2)"
