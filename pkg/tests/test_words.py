#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for words module
"""
import sys
import os
import pytest
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from collapsar.errors import EmptyRelatorError, PreconditionError, PresentationError
from collapsar.verdict import CollapsingVerdict, VerdictStatus
from collapsar.words import (
    BranchedPresentation, CyclicWord, Presentation, Word,
    branch, cyclically_reduce, free_reduce, is_proper_power, power
)


def create_test_presentation(relators=((1, 2, -1, -2),)):
    return Presentation.build(['a', 'b'], relators)


class TestWord:
    """Test cases for Word and CyclicWord"""

    def test_inverse_reverses_and_negates(self):
        w = Word((1, 2, -1))
        assert w.inverse() == Word((1, -2, -1))

    def test_negative_power_is_inverse_power(self):
        w = Word((1, 2))
        assert w ** -2 == Word((-2, -1, -2, -1))
        assert (w ** 0).is_empty()

    def test_zero_code_rejected(self):
        with pytest.raises(ValueError):
            Word((1, 0))

    def test_exponent_sums(self):
        w = Word((1, 2, -1, -1, 2))
        assert w.exponent_sums(2) == [-1, 2]

    def test_rotate(self):
        w = Word((1, 2, 3))
        assert w.rotate(1) == Word((2, 3, 1))
        assert w.rotate(-1) == Word((3, 1, 2))
        assert Word().rotate(5) == Word()

    def test_cyclic_equality_up_to_rotation(self):
        first = CyclicWord.from_codes((1, 2, -1, -2))
        second = CyclicWord.from_codes((-1, -2, 1, 2))
        assert first == second
        assert hash(first) == hash(second)

    def test_cyclic_equality_ignores_inversion(self):
        r = CyclicWord.from_codes((1, 1, 2))
        assert r != r.inverse()
        assert r.equal_up_to_inversion(r.inverse())

    def test_letter_at_wraps(self):
        r = CyclicWord.from_codes((1, 2, 3))
        assert r.letter_at(4) == 2
        assert r.letter_at(-1) == 3


class TestOperations:
    """Test cases for free-group operations"""

    def test_free_reduce(self):
        assert free_reduce(Word((1, 2, -2, -1, 3))) == Word((3,))
        assert free_reduce(Word((1, -1))).is_empty()

    def test_cyclically_reduce_returns_conjugator(self):
        core, conjugator = cyclically_reduce(Word((2, 1, -2)))
        assert core == CyclicWord.from_codes((1,))
        assert conjugator == Word((2,))

    def test_cyclically_reduce_already_reduced(self):
        core, conjugator = cyclically_reduce(Word((1, 2, -1, -2)))
        assert core.codes == (1, 2, -1, -2)
        assert conjugator.is_empty()

    def test_power(self):
        assert power(Word((1, 2)), 3) == Word((1, 2, 1, 2, 1, 2))

    def test_power_requires_positive_exponent(self):
        with pytest.raises(PreconditionError):
            power(Word((1,)), 0)

    def test_power_requires_cyclically_reduced(self):
        with pytest.raises(PreconditionError):
            power(Word((2, 1, -2)), 2)

    def test_is_proper_power(self):
        assert is_proper_power(Word((1, 2, 1, 2))) == (Word((1, 2)), 2)
        assert is_proper_power(Word((1, 1, 1))) == (Word((1,)), 3)
        assert is_proper_power(Word((1, 2, -1, -2))) is None


class TestPresentation:
    """Test cases for Presentation"""

    def test_build(self):
        p = create_test_presentation()
        assert p.rank == 2
        assert p.names == ['a', 'b']
        assert p.relator_lengths() == [4]
        assert p.generator_id('b') == 1

    def test_duplicate_names_rejected(self):
        with pytest.raises(PresentationError):
            Presentation.build(['a', 'a'])

    def test_empty_relator_rejected(self):
        with pytest.raises(EmptyRelatorError):
            Presentation.build(['a'], [()])

    def test_out_of_range_generator_rejected(self):
        with pytest.raises(PresentationError):
            Presentation.build(['a'], [(1, 2)])

    def test_dict_roundtrip(self):
        p = create_test_presentation([(1, 2, -1, -2), (1, 1, 1)])
        data = p.to_dict()
        assert data['relators'][0]['letters'][2] == [0, -1]
        assert data['relators'][1]['immersed'] is True
        assert Presentation.from_dict(data) == p

    def test_immersed_flags(self):
        p = create_test_presentation([(1, 2, -1), (1, 2)])
        assert p.immersed == (False, True)


class TestBranched:
    """Test cases for BranchedPresentation"""

    def setup_method(self):
        """Setup test fixtures"""
        self.base = Presentation.build(['a', 'b'], [(1, 2, -1, -2)])
        self.certified = CollapsingVerdict(VerdictStatus.CERTIFIED, ["C(4)-T(4) => 3-collapsing"])

    def test_derived_relators(self):
        bp = branch(self.base, [2])
        assert bp.relators[0].codes == (1, 2, -1, -2, 1, 2, -1, -2)
        assert bp.derived_length(0) == 8
        assert bp.base_length(0) == 4

    def test_exponent_count_must_match(self):
        with pytest.raises(PreconditionError):
            branch(self.base, [2, 3])

    def test_exponent_must_be_positive(self):
        with pytest.raises(PreconditionError):
            branch(self.base, [0])

    def test_non_immersed_relator_cannot_branch(self):
        p = Presentation.build(['a', 'b'], [(2, 1, -2)])
        with pytest.raises(PreconditionError):
            branch(p, [2])
        assert branch(p, [1]).relators[0].codes == (2, 1, -2)

    def test_dehn_eligibility_needs_certification(self):
        bp = branch(self.base, [2])
        assert not bp.dehn_eligible
        assert bp.with_certification(self.certified).dehn_eligible

    def test_dehn_eligibility_needs_exponents_at_least_two(self):
        bp = branch(self.base, [1]).with_certification(self.certified)
        assert not bp.dehn_eligible

    def test_dehn_eligibility_rejects_proper_power_base(self):
        p = Presentation.build(['a'], [(1, 1)])
        bp = branch(p, [2]).with_certification(self.certified)
        assert not bp.dehn_eligible

    def test_from_presentation_splits_powers(self):
        p = Presentation.build(['a', 'b'], [(1, 1, 1), (1, 2, -1, -2)])
        bp = BranchedPresentation.from_presentation(p)
        assert bp.exponents == (3, 1)
        assert bp.base.relators[0].codes == (1,)

    def test_to_dict(self):
        data = branch(self.base, [3]).with_certification(self.certified).to_dict()
        assert data['exponents'] == [3]
        assert data['dehn_eligible'] is True
        assert data['certification']['status'] == 'certified'
