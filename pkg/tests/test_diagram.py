#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for diagram module
"""
import sys
import os
import json
import pytest
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from collapsar.diagram import (
    TRIVIAL_DIAGRAM, DiagramBuilder, DiskDiagram, RoleKind, ShellMode,
    area_bound_check, cancellable_pairs, check_dehn_property, check_generalized_dehn,
    check_ladder_or_tiny_shells, classify_cells, diagram_to_dot, diagram_to_json,
    enumerate_reduced_disks, find_spherical_near_immersion, is_ladder, is_reduced,
    single_face_diagram, tiny_innerpath_shells, uniform_degrees
)
from collapsar.errors import MixedPerimeterError, PreconditionError
from collapsar.words import Presentation, Word, parse_presentation


def create_test_wedge(count=2):
    """Triangles a^3 wedged at one vertex"""
    builder = DiagramBuilder(parse_presentation("<a | a^3>"))
    for _ in range(count):
        builder.face(0)
    return builder.build()


def create_test_ladder():
    """Three commutator squares in a row"""
    builder = DiagramBuilder(parse_presentation("<a, b | [a, b]>"))
    builder.face(0)
    builder.face(0, orientation=1, offset=2, position=0, arc_length=1)
    builder.face(0, orientation=1, offset=2, position=1, arc_length=1)
    return builder.build()


class TestDiskDiagram:
    """Test cases for DiskDiagram construction"""

    def test_single_face(self):
        d = single_face_diagram((1, 2, -1, -2), relator=0)
        assert d.area == 1
        assert d.boundary_word() == Word((1, 2, -1, -2))
        assert (d.num_vertices, d.num_edges) == (4, 4)
        assert d.is_single_cell()

    def test_trivial_diagram(self):
        assert TRIVIAL_DIAGRAM.area == 0
        assert TRIVIAL_DIAGRAM.num_vertices == 1
        assert TRIVIAL_DIAGRAM.boundary_word().is_empty()

    def test_ladder_shape(self):
        d = create_test_ladder()
        assert d.area == 3
        assert d.boundary_length == 8
        assert d.num_vertices - d.num_edges + d.area == 1

    def test_face_word_must_match_arc(self):
        builder = DiagramBuilder(parse_presentation("<a, b | [a, b]>")).face(0)
        with pytest.raises(PreconditionError):
            builder.face(0, position=0, arc_length=1)

    def test_inconsistent_labels_rejected(self):
        with pytest.raises(ValueError):
            DiskDiagram((1, 1), (), (0, 1))

    def test_mirror_inverts_boundary(self):
        d = create_test_ladder()
        assert d.mirror().boundary_word() == d.boundary_word().inverse()
        assert d.mirror().canonical_code == d.canonical_code

    def test_validate_labels(self):
        p = parse_presentation("<a, b | [a, b]>")
        create_test_ladder().validate_labels(p)

    def test_to_complex(self):
        c = create_test_ladder().to_complex()
        assert (c.num_vertices, c.num_edges, c.num_faces) == (8, 10, 3)
        assert c.euler_characteristic() == 1

    def test_exports(self):
        d = create_test_wedge()
        dot = diagram_to_dot(d, ['a'])
        assert dot.startswith("digraph diagram {")
        assert 'pos="' in dot
        data = json.loads(diagram_to_json(d))
        assert data['kind'] == 'disk'
        assert data['area'] == 2


class TestCellRoles:
    """Test cases for classify_cells and the Dehn audits"""

    def test_single_face_is_trivial(self):
        classification = classify_cells(create_test_wedge(1))
        assert classification.trivial
        assert classification.roles == []

    def test_wedge_has_two_shells(self):
        classification = classify_cells(create_test_wedge(2))
        assert len(classification.shells) == 2
        assert classification.spurs == []
        assert classification.cutcells == []
        assert all(s.inner_length == 0 for s in classification.shells)

    def test_wedge_complex_mode(self):
        classification = classify_cells(create_test_wedge(2), ShellMode.COMPLEX)
        assert len(classification.shells) == 2
        assert classification.to_dict()['mode'] == 'complex'

    def test_ladder_roles(self):
        classification = classify_cells(create_test_ladder())
        assert [s.cell for s in classification.shells] == [0, 2]
        assert [c.cell for c in classification.cutcells] == [1]
        assert classification.cutcells[0].lobes == 2
        assert classification.count == 3

    def test_split_boundary_face_is_not_a_shell(self):
        # squares wedged at opposite corners of a middle square
        p = parse_presentation("<a | a^4>")
        d = DiagramBuilder(p).face(0).face(0, position=0).face(0, position=6).build()
        for mode in (ShellMode.DISK, ShellMode.COMPLEX):
            classification = classify_cells(d, mode)
            assert [s.cell for s in classification.shells] == [1, 2]
            assert [c.cell for c in classification.cutcells] == [0]
            assert classification.count == 3

    def test_spur_splits_outer_path(self):
        p = parse_presentation("<a | a^4>")
        d = DiagramBuilder(p).face(0).spur(1, position=2).build()
        shells = classify_cells(d).shells
        assert [(s.outer_length, s.inner_length) for s in shells] == [(4, 0)]
        d = DiagramBuilder(p).face(0).spur(1, position=2).spur(1, position=4).build()
        assert classify_cells(d).shells == []
        assert len(classify_cells(d).spurs) == 2

    def test_spur(self):
        p = parse_presentation("<a | a^3>")
        d = DiagramBuilder(p).face(0).spur(1).build()
        classification = classify_cells(d)
        assert len(classification.spurs) == 1
        assert len(classification.shells) == 1
        assert check_dehn_property(d)

    def test_single_edge(self):
        d = TRIVIAL_DIAGRAM.attach_spur(0, 1)
        assert d.is_single_cell()
        assert check_dehn_property(d)
        assert check_generalized_dehn(d, strong=True)

    def test_generalized_dehn(self):
        assert check_generalized_dehn(create_test_wedge(1), strong=True)
        assert check_generalized_dehn(create_test_wedge(2), strong=True)
        assert check_generalized_dehn(create_test_ladder(), strong=True)

    def test_dehn_property(self):
        assert check_dehn_property(create_test_wedge(2))
        assert check_dehn_property(create_test_ladder())


class TestReduced:
    """Test cases for cancellable pairs"""

    def test_doubled_cell_is_not_reduced(self):
        p = parse_presentation("<a, b | [a, b]>")
        d = DiagramBuilder(p).face(0).face(0, orientation=-1, offset=3,
                                          position=0, arc_length=1).build()
        assert not is_reduced(d)
        assert cancellable_pairs(d) == [(0, 1, 0)]

    def test_wedge_is_reduced(self):
        assert is_reduced(create_test_wedge(2))
        assert is_reduced(create_test_wedge(1))

    def test_ladder_is_reduced(self):
        assert is_reduced(create_test_ladder())


class TestAreaAndLadders:
    """Test cases for area bounds, tiny shells and ladders"""

    def test_single_face_area_bound_is_tight(self):
        d = single_face_diagram((1, 2, -1, -2) * 2, relator=0)
        assert area_bound_check(d, 8)

    def test_ladder_area_bound(self):
        assert area_bound_check(create_test_ladder(), 4)

    def test_mixed_perimeter(self):
        with pytest.raises(MixedPerimeterError):
            area_bound_check(create_test_ladder(), 3)

    def test_area_bound_needs_a_face(self):
        with pytest.raises(PreconditionError):
            area_bound_check(TRIVIAL_DIAGRAM, 4)

    def test_tiny_innerpath_threshold(self):
        d = create_test_ladder()
        assert [s.cell for s in tiny_innerpath_shells(d, [2, 2, 2])] == [0, 2]
        assert tiny_innerpath_shells(d, {0: 4, 1: 4, 2: 4}) == []

    def test_trivial_inner_path_always_tiny(self):
        d = create_test_wedge(2)
        assert len(tiny_innerpath_shells(d, [100, 100])) == 2

    def test_is_ladder(self):
        assert is_ladder(create_test_ladder())
        assert is_ladder(create_test_wedge(2))
        assert not is_ladder(create_test_wedge(3))
        assert not is_ladder(create_test_wedge(1))

    def test_ladder_or_tiny_shells(self):
        assert check_ladder_or_tiny_shells(create_test_wedge(1), [3])
        assert check_ladder_or_tiny_shells(create_test_ladder(), [2, 2, 2])
        wedge = create_test_wedge(3)
        assert check_ladder_or_tiny_shells(wedge, uniform_degrees(wedge, [3]))

    def test_uniform_degrees(self):
        d = create_test_wedge(2)
        assert uniform_degrees(d) == [1, 1]
        assert uniform_degrees(d, [3]) == [3, 3]


class TestEnumeration:
    """Test cases for diagram enumeration and sphere search"""

    def test_cube_power_area_one(self):
        found = list(enumerate_reduced_disks(parse_presentation("<a | a^3>"), 1, max_tree_edges=0))
        assert len(found) == 1
        assert found[0].area == 1

    def test_cube_power_area_two(self):
        found = list(enumerate_reduced_disks(parse_presentation("<a | a^3>"), 2, threads=1,
                                             max_tree_edges=0))
        assert [d.area for d in found] == [1, 2, 2]
        assert all(is_reduced(d) for d in found)
        assert all(d.num_vertices - d.num_edges + d.area == 1 for d in found)

    def test_bridge_and_spurs(self):
        found = list(enumerate_reduced_disks(parse_presentation("<a | a^3>"), 2, threads=1))
        shapes = [(d.area, d.num_vertices, d.num_edges) for d in found]
        assert (2, 6, 7) in shapes
        assert (1, 4, 4) in shapes
        assert (0, 2, 1) in shapes
        assert max(d.tree_edges for d in found) == 1
        assert all(d.num_vertices - d.num_edges + d.area == 1 for d in found)
        assert [d.area for d in found] == sorted(d.area for d in found)

    def test_bridge_between_faces(self):
        p = parse_presentation("<a | a^3>")
        d = DiagramBuilder(p).face(0).spur(1).face(0, position=1).build()
        assert (d.num_vertices, d.num_edges, d.tree_edges) == (6, 7, 1)
        found = {e.canonical_code for e in enumerate_reduced_disks(p, 2, threads=1)}
        assert d.canonical_code in found
        assert is_ladder(d)
        assert check_generalized_dehn(d, strong=True)

    def test_each_diagram_once(self):
        found = list(enumerate_reduced_disks(parse_presentation("<a | a^3>"), 2, threads=1))
        codes = [d.canonical_code for d in found]
        assert len(codes) == len(set(codes))

    def test_trivial_requested(self):
        found = list(enumerate_reduced_disks(parse_presentation("<a | a^3>"), 1,
                                             include_trivial=True))
        assert found[0] is TRIVIAL_DIAGRAM

    def test_free_presentation(self):
        p = Presentation.build(['a', 'b'])
        found = list(enumerate_reduced_disks(p, 2, max_tree_edges=2))
        assert found
        assert all(d.area == 0 and 1 <= d.num_edges <= 2 for d in found)
        assert all(d.num_vertices == d.num_edges + 1 for d in found)
        assert len([d for d in found if d.num_edges == 1]) == 2
        assert list(enumerate_reduced_disks(p, 2, max_tree_edges=0)) == []

    def test_negative_tree_bound(self):
        with pytest.raises(PreconditionError):
            list(enumerate_reduced_disks(Presentation.build(['a']), 1, max_tree_edges=-1))

    def test_area_limit(self):
        with pytest.raises(PreconditionError):
            list(enumerate_reduced_disks(parse_presentation("<a | a^3>"), 7))

    def test_dunce_cap_sphere(self):
        sphere = find_spherical_near_immersion(parse_presentation("<a | aaA>"), 2)
        assert sphere is not None
        assert sphere.area <= 2
        assert sphere.num_vertices - sphere.num_edges + sphere.area == 2

    def test_torus_has_no_sphere(self):
        assert find_spherical_near_immersion(parse_presentation("<a, b | [a, b]>"), 4) is None

    def test_free_presentation_has_no_sphere(self):
        assert find_spherical_near_immersion(Presentation.build(['a', 'b']), 2) is None
