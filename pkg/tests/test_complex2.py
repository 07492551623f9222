#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for complex2 module
"""
import sys
import os
import json
import pytest
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from collapsar.complex2 import (
    INFINITY, Edge, Face, SubComplex, TwoComplex,
    attach_polygon, boundary_intersection, branched_complex, canonical_cycle,
    closure_of_faces, complex_to_dot, complex_to_json, fold_complex, link,
    presentation_complex, quotient_duplicates
)
from collapsar.errors import PreconditionError
from collapsar.words import Presentation, branch, parse_presentation


def create_test_two_squares():
    """Two squares meeting in two opposite corners only"""
    edges = (
        Edge(0, 0, 1), Edge(1, 1, 2), Edge(2, 2, 3), Edge(3, 3, 0),
        Edge(4, 0, 4), Edge(5, 4, 2), Edge(6, 2, 5), Edge(7, 5, 0),
    )
    faces = (Face(0, (0, 2, 4, 6)), Face(1, (8, 10, 12, 14)))
    return TwoComplex((0, 1, 2, 3, 4, 5), edges, faces)


class TestTwoComplex:
    """Test cases for TwoComplex construction and queries"""

    def test_presentation_complex(self):
        c = presentation_complex(parse_presentation("<a, b | [a, b]>"))
        assert (c.num_vertices, c.num_edges, c.num_faces) == (1, 2, 1)
        assert c.euler_characteristic() == 0
        assert c.face_word(0) == (1, 2, -1, -2)

    def test_branched_complex_records_degree(self):
        bp = branch(Presentation.build(['a'], [(1,)]), [3])
        c = branched_complex(bp)
        face = c.face(0)
        assert face.degree == 3
        assert face.perimeter == 3
        assert face.period == 1

    def test_open_attaching_path_rejected(self):
        with pytest.raises(ValueError):
            TwoComplex((0, 1), (Edge(0, 0, 1),), (Face(0, (0,)),))

    def test_missing_endpoint_rejected(self):
        with pytest.raises(ValueError):
            TwoComplex((0,), (Edge(0, 0, 1),))

    def test_dart_conventions(self):
        c = TwoComplex((0, 1), (Edge(0, 0, 1, 0),))
        assert c.dart_tail(0) == 0 and c.dart_head(0) == 1
        assert c.dart_tail(1) == 1 and c.dart_head(1) == 0
        assert c.dart_label(0) == 1
        assert c.dart_label(1) == -1

    def test_attach_polygon(self):
        c = attach_polygon(None, (1, 2, -1, -2), 0)
        assert (c.num_vertices, c.num_edges, c.num_faces) == (4, 4, 1)
        assert c.face_word(0) == (1, 2, -1, -2)
        assert c.euler_characteristic() == 1

    def test_fold_merges_parallel_triangles(self):
        c = attach_polygon(None, (1, 1, 1), 0)
        c = attach_polygon(c, (1, 1, 1), 0, at_vertex=0)
        assert c.num_faces == 2
        folded = fold_complex(c)
        assert (folded.num_vertices, folded.num_edges, folded.num_faces) == (3, 3, 1)

    def test_fold_leaves_square_alone(self):
        c = attach_polygon(None, (1, 2, -1, -2), 0)
        folded = fold_complex(c)
        assert (folded.num_vertices, folded.num_edges, folded.num_faces) == (4, 4, 1)

    def test_without_and_relabeled(self):
        c = create_test_two_squares()
        smaller = c.without(faces=[0])
        assert smaller.num_faces == 1
        dense = smaller.relabeled()
        assert [f.id for f in dense.faces] == [0]
        assert dense.face_word(0) == smaller.face_word(1)

    def test_connected_components(self):
        c = TwoComplex((0, 1, 2), (Edge(0, 0, 1),))
        assert c.connected_components() == [frozenset({0, 1}), frozenset({2})]
        assert not c.is_connected()

    def test_dict_roundtrip(self):
        c = create_test_two_squares()
        data = c.to_dict()
        assert data['euler_characteristic'] == 0
        assert TwoComplex.from_dict(data).to_dict() == data
        assert json.loads(complex_to_json(c)) == data

    def test_quotient_duplicates(self):
        edges = (Edge(0, 0, 0, 0),)
        c = TwoComplex((0,), edges, (Face(0, (0, 0)), Face(1, (1, 1))))
        assert quotient_duplicates(c).num_faces == 1

    def test_canonical_cycle(self):
        assert canonical_cycle((2, 0)) == (0, 2)
        assert canonical_cycle((4, 2), with_reflection=True) == (2, 4)
        assert canonical_cycle(()) == ()

    def test_complex_to_dot(self):
        c = presentation_complex(parse_presentation("<a, b | [a, b]>"))
        dot = complex_to_dot(c, names=['a', 'b'])
        assert dot.startswith("digraph complex {")
        assert 'label="a"' in dot
        assert 'label="b"' in dot


class TestSubComplex:
    """Test cases for subcomplexes and boundary intersections"""

    def test_closure_required(self):
        c = create_test_two_squares()
        with pytest.raises(ValueError):
            SubComplex(c, frozenset(), frozenset({0}))

    def test_closure_of_faces(self):
        c = create_test_two_squares()
        closure = closure_of_faces(c, [0])
        assert closure.vertices == frozenset({0, 1, 2, 3})
        assert closure.euler_characteristic() == 1
        assert closure.is_connected()

    def test_disconnected_intersection(self):
        c = create_test_two_squares()
        shared = boundary_intersection(c, 0, 1)
        assert shared.subcomplex.vertices == frozenset({0, 2})
        assert not shared.connected
        assert shared.euler_characteristics == (0, 0)

    def test_connected_intersection(self):
        c = presentation_complex(parse_presentation("<a, b | ab, aB>"))
        shared = boundary_intersection(c, 0, 1)
        assert shared.connected
        assert shared.subcomplex.edges == frozenset({0, 1})

    def test_same_face_rejected(self):
        c = create_test_two_squares()
        with pytest.raises(PreconditionError):
            boundary_intersection(c, 0, 0)


class TestLink:
    """Test cases for vertex links"""

    def test_torus_link_is_four_cycle(self):
        c = presentation_complex(parse_presentation("<a, b | [a, b]>"))
        g = link(c, 0)
        assert len(g.nodes) == 4
        assert len(g.arcs) == 4
        assert g.girth() == 4

    def test_cube_power_link_has_bigons(self):
        c = presentation_complex(parse_presentation("<a | a^3>"))
        assert link(c, 0).girth() == 2

    def test_single_arc_link_is_forest(self):
        c = presentation_complex(parse_presentation("<a | a>"))
        assert link(c, 0).girth() == INFINITY

    def test_missing_vertex(self):
        c = presentation_complex(parse_presentation("<a | a>"))
        with pytest.raises(PreconditionError):
            link(c, 5)
