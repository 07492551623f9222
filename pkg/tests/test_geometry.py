#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for geometry module
"""
import sys
import os
import pytest
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from collapsar.complex2 import Edge, Face, TwoComplex, branched_complex, presentation_complex
from collapsar.errors import GeodesicError, PreconditionError
from collapsar.geometry import (
    CayleyBall, Wall, ball_to_dot, build_ball, carrier, check_cells_embed,
    check_face_intersections, divisive_trees, geodesic_crossing_profile,
    geodesics_from_root, halfspaces, ladder_check, safe_radius_for, spiders,
    tree_arc, walls
)
from collapsar.words import Presentation, branch, parse_presentation


def create_test_triangle_ball():
    """Radius-2 ball of <a | a^3>: a single triangle"""
    return build_ball(branch(Presentation.build(['a'], [(1,)]), [3]), 2)


def create_test_ladder_ball():
    """Two squares reading (ab)^2 side by side, sharing the edge 1 -> 4

        0 --e0-> 1 --e1-> 2
        |        |        |
        e4       e5       e6
        v        v        v
        3 --e2-> 4 --e3-> 5
    """
    edges = (
        Edge(0, 0, 1, 0), Edge(1, 1, 2, 0), Edge(2, 3, 4, 0), Edge(3, 4, 5, 0),
        Edge(4, 0, 3, 1), Edge(5, 1, 4, 1), Edge(6, 2, 5, 1),
    )
    faces = (
        Face(0, (0, 10, 5, 9), relator=0, degree=2, base_length=2),
        Face(1, (2, 12, 7, 11), relator=0, degree=2, base_length=2),
    )
    return CayleyBall.from_complex(TwoComplex(tuple(range(6)), edges, faces))


def create_test_two_squares_ball():
    """Two squares meeting in two opposite corners only"""
    edges = (
        Edge(0, 0, 1), Edge(1, 1, 2), Edge(2, 2, 3), Edge(3, 3, 0),
        Edge(4, 0, 4), Edge(5, 4, 2), Edge(6, 2, 5), Edge(7, 5, 0),
    )
    faces = (Face(0, (0, 2, 4, 6)), Face(1, (8, 10, 12, 14)))
    return CayleyBall.from_complex(TwoComplex((0, 1, 2, 3, 4, 5), edges, faces))


class TestBall:
    """Test cases for ball construction"""

    def setup_method(self):
        """Setup test fixtures"""
        self.ball = create_test_triangle_ball()

    def test_triangle_ball_shape(self):
        c = self.ball.complex
        assert (c.num_vertices, c.num_edges, c.num_faces) == (3, 3, 1)
        assert self.ball.root == 0
        assert self.ball.distances == (0, 1, 1)
        assert [w.codes for w in self.ball.words] == [(), (1,), (-1,)]
        assert c.face(0).darts == (0, 2, 4)

    def test_safe_region(self):
        assert self.ball.safe_radius == 1
        assert self.ball.safe_vertices() == [0, 1, 2]
        assert self.ball.safe_faces() == [0]
        assert self.ball.is_safe_vertex(2)
        assert self.ball.face_distance(0) == 0

    def test_safe_radius_formula(self):
        b = branch(parse_presentation("<a, b | [a, b]>"), [2])
        assert safe_radius_for(b, 6) == 2
        assert safe_radius_for(branch(Presentation.build(['a'], [(1,)]), [3]), 2) == 1

    def test_summary(self):
        assert self.ball.summary() == {
            'radius': 2,
            'safe_radius': 1,
            'vertices': 3,
            'edges': 3,
            'faces': 1,
            'safe_vertices': 3,
            'safe_faces': 1,
        }
        data = self.ball.to_dict()
        assert data['distances'] == [0, 1, 1]
        assert data['words'] == [[], [1], [-1]]

    def test_free_ball(self):
        ball = build_ball(branch(Presentation.build(['a', 'b'], []), []), 2)
        assert ball.complex.num_vertices == 17
        assert ball.complex.num_edges == 16
        assert ball.complex.num_faces == 0
        assert ball.safe_radius == 2
        assert walls(ball) == []

    def test_from_complex(self):
        ball = create_test_ladder_ball()
        assert ball.distances == (0, 1, 2, 1, 2, 3)
        assert ball.radius == ball.safe_radius == 3
        assert ball.max_relator_length == 4
        assert ball.distance(0, 5) == 3

    def test_fragment(self):
        sub = create_test_ladder_ball().fragment([0, 1, 3, 4])
        assert sub.edges == frozenset({0, 2, 4, 5})
        assert sub.faces == frozenset({0})


class TestDivisiveTrees:
    """Test cases for spiders and divisive trees"""

    def test_triangle_tripod(self):
        ball = create_test_triangle_ball()
        found = spiders(ball)
        assert len(found) == 1
        assert found[0].legs == 3
        assert found[0].feet == (0, 1, 2)
        report = divisive_trees(ball)
        assert len(report.trees) == 1
        assert report.all_trees and report.all_embedded
        assert report.trees[0].faces == frozenset({0})
        assert report.trees[0].cycle() == []

    def test_ladder_trees(self):
        report = divisive_trees(create_test_ladder_ball())
        assert len(report.trees) == 3
        assert [sorted(t.feet) for t in report.trees] == [[0, 2], [1, 3], [4, 5, 6]]
        assert report.trees[2].faces == frozenset({0, 1})
        assert not any(t.partial for t in report.trees)
        assert report.refutations == []

    def test_torus_trees_do_not_embed(self):
        c = presentation_complex(parse_presentation("<a, b | [a, b]>"))
        report = divisive_trees(CayleyBall.from_complex(c))
        assert len(report.trees) == 2
        assert report.all_trees
        assert not report.all_embedded
        assert len(report.refutations) == 2
        assert report.to_dict()['all_embedded'] is False

    def test_doubled_leg_gives_cycle(self):
        c = branched_complex(branch(Presentation.build(['a'], [(1,)]), [2]))
        report = divisive_trees(CayleyBall.from_complex(c))
        tree = report.trees[0]
        assert not tree.is_tree
        cycle = tree.cycle()
        assert len(cycle) == 3
        assert cycle[0] == cycle[2]


class TestWalls:
    """Test cases for walls, halfspaces and carriers"""

    def setup_method(self):
        """Setup test fixtures"""
        self.triangle = create_test_triangle_ball()
        self.ladder = create_test_ladder_ball()

    def test_tripod_walls(self):
        found = walls(self.triangle)
        assert len(found) == 3
        assert [sorted(w.crossed_edges) for w in found] == [[0, 2], [0, 1], [1, 2]]
        assert found[0].crossings == ((0, 'tail'), (2, 'head'))
        assert found[0].faces == (0,)
        assert found[0].corners(0) == {0}
        assert not any(w.partial for w in found)

    def test_tripod_halfspaces(self):
        found = walls(self.triangle)
        sides = [halfspaces(self.triangle, w) for w in found]
        assert all(h.two_sided for h in sides)
        assert (sides[0].side_a, sides[0].side_b) == (frozenset({0}), frozenset({1, 2}))
        assert (sides[1].side_a, sides[1].side_b) == (frozenset({0, 2}), frozenset({1}))
        assert sides[0].side_of(2) == 1
        assert sides[0].to_dict()['components'] == 2

    def test_ladder_walls_come_in_pairs(self):
        found = walls(self.ladder)
        assert len(found) == 6
        assert [w.tree for w in found] == [0, 0, 1, 1, 2, 2]
        assert found[4].crossed_edges == found[5].crossed_edges == frozenset({4, 5, 6})
        assert found[4].faces == (0, 1)

    def test_ladder_halfspaces(self):
        found = walls(self.ladder)
        for w in found[4:]:
            h = halfspaces(self.ladder, w)
            assert h.two_sided
            assert (h.side_a, h.side_b) == (frozenset({0, 1, 2}), frozenset({3, 4, 5}))
        h = halfspaces(self.ladder, found[0])
        assert (h.side_a, h.side_b) == (frozenset({0, 3}), frozenset({1, 2, 4, 5}))

    def test_walls_need_safe_region(self):
        b = branch(parse_presentation("<a, b | [a, b]>"), [2])
        ball = build_ball(b, 1, unsafe=True)
        with pytest.raises(PreconditionError):
            walls(ball)

    def test_carrier_convexity(self):
        found = walls(self.triangle)
        sub, report = carrier(self.triangle, found[0])
        assert sub.faces == frozenset({0})
        assert report.convex
        assert report.pairs_checked == 3
        assert not report.advisory

    def test_carrier_sampling(self):
        found = walls(self.ladder)
        sub, report = carrier(self.ladder, found[4], samples=5, seed=1)
        assert sub.faces == frozenset({0, 1})
        assert report.pairs_checked == 5
        assert report.convex


class TestLadders:
    """Test cases for tree arcs and ladder checks"""

    def setup_method(self):
        """Setup test fixtures"""
        self.ball = create_test_ladder_ball()
        self.tree = divisive_trees(self.ball).trees[2]

    def test_tree_arc(self):
        arc = tree_arc(self.tree, 0, 1)
        assert arc == [('s', 0, 1), ('e', 5, 0), ('s', 1, 1)]

    def test_tree_arc_needs_spiders(self):
        tree = divisive_trees(self.ball).trees[0]
        with pytest.raises(PreconditionError):
            tree_arc(tree, 0, 1)

    def test_ladder_along_arc(self):
        report = ladder_check(self.ball, tree_arc(self.tree, 0, 1))
        assert report.ok
        assert report.faces == [0, 1]

    def test_single_face_arc(self):
        report = ladder_check(self.ball, [('s', 0, 1)])
        assert report.ok
        assert report.reason == "single face"

    def test_repeated_face(self):
        report = ladder_check(self.ball, [('s', 0, 0), ('e', 0, 0), ('s', 0, 1)])
        assert not report.ok
        assert "repeats" in report.reason

    def test_edge_not_shared(self):
        report = ladder_check(self.ball, [('s', 0, 1), ('e', 0, 0), ('s', 1, 1)])
        assert not report.ok
        assert "not shared" in report.reason


class TestGeodesics:
    """Test cases for geodesic crossing profiles"""

    def setup_method(self):
        """Setup test fixtures"""
        self.ball = create_test_ladder_ball()
        self.walls = walls(self.ball)

    def test_geodesics_from_root(self):
        paths = geodesics_from_root(create_test_triangle_ball())
        assert paths == [[0, 1], [0, 2]]

    def test_single_crossings(self):
        profile = geodesic_crossing_profile(self.ball, [0, 3, 4, 5], self.walls)
        assert profile.counts == {0: 1, 1: 1, 2: 1, 3: 1, 4: 1, 5: 1}
        assert profile.multiply_crossed == []
        assert profile.satisfied

    def test_separator_found(self):
        twice = Wall(0, frozenset(), ((3, 'tail'), (4, 'tail')), ())
        once = Wall(1, frozenset(), ((2, 'tail'),), ())
        profile = geodesic_crossing_profile(self.ball, [0, 3, 4, 5], [twice, once])
        assert profile.positions == {0: [0, 2], 1: [1]}
        assert profile.separators == {0: 1}
        assert profile.satisfied

    def test_separator_missing(self):
        twice = Wall(0, frozenset(), ((3, 'tail'), (4, 'tail')), ())
        profile = geodesic_crossing_profile(self.ball, [0, 3, 4, 5], [twice])
        assert profile.multiply_crossed == [0]
        assert profile.separators == {0: None}
        assert not profile.satisfied
        assert profile.to_dict()['satisfied'] is False

    def test_invalid_paths(self):
        with pytest.raises(GeodesicError):
            geodesic_crossing_profile(self.ball, [], self.walls)
        with pytest.raises(GeodesicError):
            geodesic_crossing_profile(self.ball, [0, 2], self.walls)
        with pytest.raises(GeodesicError):
            geodesic_crossing_profile(self.ball, [0, 1, 4, 3], self.walls)

    def test_ball_dot(self):
        dot = ball_to_dot(self.ball, self.walls[:1], names=['a', 'b'])
        assert dot.startswith("digraph ball {")
        assert 'color="red"' in dot


class TestChecks:
    """Test cases for face-level checks"""

    def test_ladder_passes(self):
        ball = create_test_ladder_ball()
        report = check_face_intersections(ball)
        assert report.ok
        assert report.pairs_checked == 1
        assert check_cells_embed(ball).ok

    def test_disconnected_intersection(self):
        report = check_face_intersections(create_test_two_squares_ball())
        assert not report.ok
        assert report.disconnected == [(0, 1)]
        assert report.bad_boundaries == []

    def test_face_not_embedded(self):
        c = presentation_complex(parse_presentation("<a | a^3>"))
        report = check_cells_embed(CayleyBall.from_complex(c))
        assert not report.ok
        assert report.failures == [0]
        assert report.to_dict()['faces_checked'] == 1
