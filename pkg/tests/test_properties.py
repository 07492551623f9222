#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Property tests tying the modules together on small presentations
"""
import sys
import os
import itertools
import pytest
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from collapsar.collapse import certify_branched, check_n_collapsing
from collapsar.dehn import (
    AbelianVerdict, ExponentSumOracle, abelianization_test, bounded_oracle_trivial,
    is_trivial, order_of_relator
)
from collapsar.diagram import (
    area_bound_check, check_dehn_property, check_generalized_dehn, check_ladder_or_tiny_shells,
    enumerate_reduced_disks, uniform_degrees
)
from collapsar.geometry import build_ball, check_face_intersections
from collapsar.words import Word, branch, free_reduce, parse_presentation, power


def create_test_branched(text, exponent):
    return certify_branched(branch(parse_presentation(text), [exponent]))


def reduced_words(rank, max_length):
    """Freely reduced words of length <= max_length"""
    letters = [c for g in range(1, rank + 1) for c in (g, -g)]
    for length in range(max_length + 1):
        for codes in itertools.product(letters, repeat=length):
            w = Word(codes)
            if free_reduce(w) == w:
                yield w


class TestTorsion:
    """Relator orders match their exponents"""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_commutator_orders(self, n):
        b = create_test_branched("<a, b | [a, b]>", n)
        assert order_of_relator(0, b) == n
        commutator = b.base.relators[0].representative
        for m in range(1, n):
            assert not is_trivial(power(commutator, m), b)
        assert is_trivial(power(commutator, n), b)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_cyclic_agrees_with_exponent_sums(self, n):
        b = create_test_branched("<a | a>", n)
        exact = ExponentSumOracle(b.derived, exact=True)
        for w in reduced_words(1, 8):
            assert is_trivial(w, b) == exact.is_trivial(w)


class TestOracleConsistency:
    """Dehn's algorithm never contradicts the one-sided tests"""

    def setup_method(self):
        """Setup test fixtures"""
        self.b = create_test_branched("<a, b | [a, b]>", 2)

    def test_abelianization_and_bounded_search(self):
        p = self.b.derived
        for w in reduced_words(2, 6):
            trivial = is_trivial(w, self.b)
            if abelianization_test(w, p) == AbelianVerdict.NONTRIVIAL:
                assert not trivial
            if bounded_oracle_trivial(w, p, 1, 8).trivial:
                assert trivial

    def test_relator_rotations_are_trivial(self):
        codes = self.b.derived.relators[0].codes
        for k in range(len(codes)):
            rotated = Word(codes[k:] + codes[:k])
            assert bounded_oracle_trivial(rotated, self.b.derived, 1, 8).trivial
            assert is_trivial(rotated, self.b)
            assert is_trivial(rotated.inverse(), self.b)


class TestDiagramProperties:
    """Reduced diagrams over a squared commutator"""

    @classmethod
    def setup_class(cls):
        """Enumerate once: area <= 3 without tree edges, area <= 2 with one"""
        cls.b = create_test_branched("<a, b | [a, b]>", 2)
        cls.diagrams = list(enumerate_reduced_disks(cls.b.derived, 3, threads=1, max_tree_edges=0))
        cls.diagrams += list(enumerate_reduced_disks(cls.b.derived, 2, threads=1, max_tree_edges=1))

    def test_enumeration_is_nonempty(self):
        assert {d.area for d in self.diagrams} == {0, 1, 2, 3}
        assert any(d.area == 2 and d.tree_edges == 1 for d in self.diagrams)

    def test_euler_characteristic(self):
        for d in self.diagrams:
            assert d.num_vertices - d.num_edges + d.area == 1

    def test_strong_generalized_dehn(self):
        for d in self.diagrams:
            assert d.is_single_cell() or check_generalized_dehn(d, strong=True)

    def test_dehn_property(self):
        for d in self.diagrams:
            assert check_dehn_property(d)

    def test_isoperimetric_bound(self):
        for d in self.diagrams:
            if d.area:
                assert area_bound_check(d, 8)

    def test_ladder_or_tiny_shells(self):
        for d in self.diagrams:
            assert check_ladder_or_tiny_shells(d, uniform_degrees(d, self.b.exponents))


class TestGrid:
    """Balls in the square grid"""

    def setup_method(self):
        """Setup test fixtures"""
        self.ball = build_ball(branch(parse_presentation("<a, b | [a, b]>"), [1]), 6)

    def test_grid_shape(self):
        assert self.ball.complex.num_vertices == 85
        assert self.ball.safe_radius == 2
        assert all(f.perimeter == 4 for f in self.ball.complex.faces)

    def test_grid_is_3_collapsing(self):
        verdict = check_n_collapsing(self.ball, 3, threads=1)
        assert verdict.certified
        assert verdict.details['unions_checked'] > 0

    def test_grid_face_intersections(self):
        assert check_face_intersections(self.ball).ok
