#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for dehn module
"""
import sys
import os
import random
import pytest
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from collapsar.collapse import certify_branched
from collapsar.dehn import (
    AbelianLattice, AbelianVerdict, DehnOracle, DiagramSearchOracle,
    ExponentSumOracle, FreeGroupOracle, StepKind,
    abelianization, abelianization_test, choose_oracle, dehn_reduce,
    is_abelian_presentation, is_trivial, order_of_relator, relator_bank,
    relator_orders, solve_many
)
from collapsar.errors import EligibilityError, OracleError
from collapsar.words import Presentation, Word, branch, parse_presentation, parse_word


def create_test_branched(text="<a, b | [a, b]>", exponents=(2,)):
    """Certified branched presentation"""
    return certify_branched(branch(parse_presentation(text), list(exponents)))


class TestDehnReduce:
    """Test cases for Dehn's algorithm"""

    def setup_method(self):
        """Setup test fixtures"""
        self.torus2 = create_test_branched()
        self.cube = create_test_branched("<a | a>", (3,))

    def test_eligibility(self):
        assert self.torus2.dehn_eligible
        assert self.cube.dehn_eligible

    def test_derived_relator_is_trivial(self):
        w = parse_word("[a,b]^2", self.torus2.base)
        result, trace = dehn_reduce(w, self.torus2)
        assert result.is_empty()
        assert trace.rewrites == 1
        assert not trace.heuristic

    def test_generator_is_not_trivial(self):
        result, trace = dehn_reduce(Word((1,)), self.torus2)
        assert result == Word((1,))
        assert trace.steps == []

    def test_fifth_power_reduces_to_inverse(self):
        result, trace = dehn_reduce(Word((1,) * 5), self.cube)
        assert result == Word((-1,))
        assert trace.rewrites == 2
        assert trace.replay() == result

    def test_free_reduction_recorded(self):
        _, trace = dehn_reduce(Word((1, -1, 1)), self.cube)
        assert trace.steps[0].kind == StepKind.FREE

    def test_random_choice_reaches_same_answer(self):
        result, _ = dehn_reduce(Word((1,) * 5), self.cube, rng=random.Random(7))
        assert result == Word((-1,))

    def test_ineligible_presentation_rejected(self):
        b = branch(parse_presentation("<a, b | [a, b]>"), [2])
        with pytest.raises(EligibilityError):
            dehn_reduce(Word((1,)), b)

    def test_unsafe_run_is_heuristic(self):
        b = branch(parse_presentation("<a, b | [a, b]>"), [2])
        _, trace = dehn_reduce(Word((1,)), b, unsafe=True)
        assert trace.heuristic

    def test_solve_many_keeps_order(self):
        words = [Word((1,) * k) for k in range(6)]
        results = solve_many(words, self.cube, threads=2)
        assert [r.codes for r, _ in results] == [(), (1,), (-1,), (), (1,), (-1,)]

    def test_is_trivial(self):
        assert is_trivial(Word((1, 1, 1)), self.cube)
        assert not is_trivial(Word((1, 1)), self.cube)

    def test_bank_thresholds(self):
        bank = relator_bank(self.torus2)
        assert bank.thresholds == [4]
        assert len(bank) == 8

    def test_trace_to_dict(self):
        _, trace = dehn_reduce(Word((1,) * 4), self.cube)
        data = trace.to_dict()
        assert data['input'] == [1, 1, 1, 1]
        assert data['output'] == [1]
        assert data['steps'][0]['kind'] == 'rewrite'


class TestRelatorOrders:
    """Test cases for relator order checks"""

    def test_orders_match_exponents(self):
        assert order_of_relator(0, create_test_branched("<a | a>", (3,))) == 3
        orders = relator_orders(create_test_branched())
        assert [o.observed for o in orders] == [2]
        assert all(o.ok for o in orders)


class TestAbelian:
    """Test cases for abelianization"""

    def test_cyclic_group(self):
        inv = abelianization(parse_presentation("<a | a^3>"))
        assert inv.free_rank == 0
        assert inv.torsion == (3,)
        assert inv.describe() == "Z/3"

    def test_free_abelian(self):
        inv = abelianization(parse_presentation("<a, b | [a, b]>"))
        assert inv.describe() == "Z^2"
        assert not inv.is_trivial

    def test_invariant_factors(self):
        inv = abelianization(parse_presentation("<a, b | a^2, b^3, [a, b]>"))
        assert inv.to_dict() == {'free_rank': 0, 'torsion': [6], 'group': "Z/6"}

    def test_abelianization_test(self):
        p = parse_presentation("<a | a^3>")
        assert abelianization_test(Word((1,)), p) == AbelianVerdict.NONTRIVIAL
        assert abelianization_test(Word((1, 1, 1)), p) == AbelianVerdict.INCONCLUSIVE

    def test_commutator_power_abelianization_inconclusive(self):
        p = parse_presentation("<a, b | [a, b]^2>")
        assert abelianization_test(Word((1,)), p) == AbelianVerdict.NONTRIVIAL
        assert abelianization_test(parse_word("[a,b]", p), p) == AbelianVerdict.INCONCLUSIVE

    def test_lattice_residue(self):
        lattice = AbelianLattice(parse_presentation("<a | a^3>"))
        assert lattice.residue(Word((1,) * 4)) == (1,)
        assert lattice.is_zero(Word((-1,) * 3))


class TestOracles:
    """Test cases for equality oracles"""

    def test_abelian_detection(self):
        assert is_abelian_presentation(parse_presentation("<a, b | [a, b]>"))
        assert is_abelian_presentation(parse_presentation("<a | a^5>"))
        assert not is_abelian_presentation(parse_presentation("<a, b | [a, b]^2>"))

    def test_choose_oracle(self):
        assert isinstance(choose_oracle(Presentation.build(['a', 'b'])), FreeGroupOracle)
        assert isinstance(choose_oracle(parse_presentation("<a, b | [a, b]>")), ExponentSumOracle)
        b = create_test_branched()
        assert isinstance(choose_oracle(b.derived, b), DehnOracle)
        plain = branch(parse_presentation("<a, b | [a, b]>"), [2])
        assert isinstance(choose_oracle(plain.derived, plain), DiagramSearchOracle)

    def test_free_group_oracle(self):
        oracle = FreeGroupOracle(Presentation.build(['a', 'b']))
        assert oracle.equal(Word((1, 2, -2)), Word((1,)))
        assert not oracle.is_trivial(Word((1, 2, -1, -2)))

    def test_exponent_sum_oracle(self):
        oracle = ExponentSumOracle(parse_presentation("<a, b | [a, b]>"))
        assert oracle.equal(Word((1, 2)), Word((2, 1)))
        assert not oracle.equal(Word((1,)), Word((2,)))

    def test_inexact_exponent_sums_raise(self):
        p = parse_presentation("<a, b | [a, b]^2>")
        oracle = ExponentSumOracle(p, exact=False)
        assert not oracle.is_trivial(Word((1,)))
        with pytest.raises(OracleError):
            oracle.is_trivial(parse_word("[a,b]", p))

    def test_diagram_search_oracle(self):
        p = parse_presentation("<a, b | [a, b]^2>")
        oracle = DiagramSearchOracle(p, max_area=1)
        assert oracle.is_trivial(parse_word("[a,b]^2", p))
        assert not oracle.is_trivial(Word((1,)))
        with pytest.raises(OracleError):
            oracle.is_trivial(parse_word("[a,b]", p))

    def test_dehn_oracle_buckets(self):
        oracle = DehnOracle(create_test_branched("<a | a>", (3,)))
        assert oracle.bucket(Word((1, 1))) == oracle.bucket(Word((-1,)))
        assert oracle.equal(Word((1, 1)), Word((-1,)))
