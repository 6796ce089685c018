"""Tests for the built-in quotient presentations and F_q point counts."""

from __future__ import annotations

import dataclasses
import logging

import pytest

from wild_mckay.config import BudgetExceeded
from wild_mckay.errors import WildMcKayError
from wild_mckay.lring import mv_L, mv_poly
from wild_mckay.moduli import TorsorGroup
from wild_mckay.primes import InvalidPrime, WrongCharacteristic
from wild_mckay.quotients import (
    EXAMPLE_IDS,
    GaloisField,
    UnknownExample,
    UnsupportedPresentation,
    affine_class,
    builtin_examples,
    count_points,
    ex_d2_H,
    ex_d3,
    ex_d22_p2,
    generator_invariance,
    get_example,
    presentation_check,
    specialization_check,
    verify_presentation,
)


class TestGaloisField:
    @pytest.mark.parametrize("q,p", [(4, 2), (8, 2), (9, 3), (27, 3), (25, 5)])
    def test_multiplicative_group_is_cyclic(self, q, p):
        field = GaloisField.of_order(q, p)
        assert sorted(field.pow(field.exp_table[1], k) for k in range(q - 1)) == list(range(1, q))

    @pytest.mark.parametrize("q,p", [(4, 2), (9, 3), (8, 2)])
    def test_field_axioms(self, q, p):
        field = GaloisField.of_order(q, p)
        for a in field.elements():
            assert field.add(a, field.neg(a)) == 0
            if a:
                assert field.mul(a, field.inv(a)) == 1
            for b in field.elements():
                assert field.mul(a, b) == field.mul(b, a)
                assert field.sub(field.add(a, b), b) == a

    def test_frobenius_fixes_prime_field(self):
        field = GaloisField.of_order(9, 3)
        fixed = [a for a in field.elements() if field.pow(a, 3) == a]
        assert fixed == [0, 1, 2]

    def test_wrong_order(self):
        with pytest.raises(WrongCharacteristic):
            GaloisField.of_order(6, 2)

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            GaloisField(3).inv(0)


class TestPresentations:
    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_ex_d3_residual_vanishes(self, p):
        assert verify_presentation(ex_d3(p)).is_zero
        assert presentation_check(ex_d3(p)).passed

    def test_ex_d22_residual_vanishes(self):
        assert verify_presentation(ex_d22_p2()).is_zero
        assert presentation_check(ex_d22_p2()).passed

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_h_generators_invariant(self, p):
        e = ex_d2_H(p)
        assert e.group is TorsorGroup.H
        assert e.dimension == 2
        assert generator_invariance(e).passed

    def test_ex_d3_needs_odd_prime(self):
        with pytest.raises(WrongCharacteristic):
            ex_d3(2)

    def test_ex_d22_only_in_characteristic_two(self):
        with pytest.raises(WrongCharacteristic):
            ex_d22_p2(3)

    def test_generator_text(self):
        data = ex_d3(3).to_dict()
        assert data["generators"] == ["2*x", "y^3", "z^3", "x*z + y^2"]
        assert data["presentation"] == ["X", "Y", "Z", "W"]
        assert data["d"] == [3]

    def test_lookup(self):
        assert EXAMPLE_IDS == ("ex_d3", "ex_d22_p2", "ex_d2_H")
        assert get_example("ex_d3").prime == 3
        assert get_example("ex_d3", 5).prime == 5
        assert [e.identifier for e in builtin_examples()] == list(EXAMPLE_IDS)
        with pytest.raises(UnknownExample):
            get_example("ex_d4")
        with pytest.raises(InvalidPrime):
            get_example("ex_d3", 9)


class TestPointCounts:
    @pytest.mark.parametrize(
        "example,q,count",
        [
            (ex_d3(3), 3, 27),
            (ex_d3(3), 9, 729),
            (ex_d22_p2(), 2, 16),
            (ex_d22_p2(), 4, 256),
            (ex_d2_H(2), 2, 4),
            (ex_d2_H(2), 4, 16),
            (ex_d2_H(3), 9, 81),
        ],
    )
    def test_counts_are_affine_space_counts(self, example, q, count):
        assert count_points(example, q) == count

    def test_specialization_check(self):
        e = ex_d3(3)
        assert affine_class(e) == mv_L(3)
        assert specialization_check(affine_class(e), e, 3).passed
        report = specialization_check(mv_poly({3: 1, 0: 1}), e, 3)
        assert not report.passed
        assert report.detail["counted"] == 27

    def test_wrong_field(self):
        with pytest.raises(WrongCharacteristic):
            count_points(ex_d3(3), 4)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            count_points(ex_d22_p2(), 4, budget=100)

    def test_budget_from_environment(self, monkeypatch):
        monkeypatch.setenv("MOTIVIC_BUDGET", "10")
        with pytest.raises(BudgetExceeded):
            count_points(ex_d3(3), 3)

    def test_enumeration_is_logged(self, caplog):
        with caplog.at_level(logging.DEBUG, logger="wild_mckay.quotients.points"):
            count_points(ex_d3(3), 3)
        assert "counting ex_d3 over F_3" in caplog.text

    def test_more_than_one_relation_is_rejected(self):
        e = ex_d3(3)
        two = dataclasses.replace(e, relations=e.relations * 2)
        with pytest.raises(UnsupportedPresentation):
            count_points(two, 3)
        with pytest.raises(WildMcKayError):
            count_points(two, 3)
