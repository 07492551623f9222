#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Walls as frontier components of divisive-tree neighbourhoods

Inside a face the frontier of a spider's neighbourhood runs from the head
side of one foot, through the corners and spokes of the positions between,
to the tail side of the next foot. Half-edge nodes glue these pieces across
faces sharing an edge. Each connected component is one wall.
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..complex2 import (SubComplex, boundary_intersection, closure_of_cells, complex_to_dot,
                        dart_edge, is_forward)
from ..errors import GeodesicError, PreconditionError
from ..parallel import ordered_map
from .ball import CayleyBall
from .trees import DivisiveTree, divisive_trees

logger = logging.getLogger(__name__)

TAIL = 'tail'
HEAD = 'head'

FrontierNode = Tuple[Any, ...]


def _require_safe(ball: CayleyBall) -> None:
    if ball.safe_radius < 0:
        raise PreconditionError(
            f"ball of radius {ball.radius} has no safe region for relator length "
            f"{ball.max_relator_length}")


@dataclass(frozen=True)
class Wall:
    """One frontier component of a divisive tree"""
    tree: int
    nodes: FrozenSet[FrontierNode]
    crossings: Tuple[Tuple[int, str], ...]
    faces: Tuple[int, ...]
    partial: bool = False

    @property
    def crossed_edges(self) -> FrozenSet[int]:
        return frozenset(e for e, _ in self.crossings)

    def corners(self, face: int) -> Set[int]:
        return {n[2] for n in self.nodes if n[0] == 'c' and n[1] == face}

    def to_dict(self) -> Dict[str, Any]:
        return {
            'tree': self.tree,
            'crossings': [[e, s] for e, s in self.crossings],
            'faces': list(self.faces),
            'partial': self.partial,
        }


def _feet_positions(tree: DivisiveTree) -> Dict[int, Set[int]]:
    positions: Dict[int, Set[int]] = {}
    for spider in tree.spiders:
        positions.setdefault(spider.face, set()).update(spider.positions)
    return positions


def _dart_side(dart: int, at_tail: bool) -> str:
    """Edge side of a dart's tail (or head) end"""
    if at_tail:
        return TAIL if is_forward(dart) else HEAD
    return HEAD if is_forward(dart) else TAIL


def frontier_graph(ball: CayleyBall, tree: DivisiveTree) -> nx.Graph:
    """Corners, spokes and half-edges of the tree's neighbourhood frontier"""
    graph = nx.Graph()
    for face_id, feet in _feet_positions(tree).items():
        darts = ball.complex.face(face_id).darts
        length = len(darts)
        for j, dart in enumerate(darts):
            corner, following = ('c', face_id, j), ('c', face_id, (j + 1) % length)
            if j in feet:
                edge = dart_edge(dart)
                graph.add_edge(corner, ('h', edge, _dart_side(dart, True)))
                graph.add_edge(following, ('h', edge, _dart_side(dart, False)))
            else:
                spoke = ('s', face_id, j)
                graph.add_edge(corner, spoke)
                graph.add_edge(spoke, following)
    return graph


def _wall_partial(ball: CayleyBall, tree: DivisiveTree, crossings: Sequence[Tuple[int, str]]) -> bool:
    if tree.partial:
        return True
    for edge_id, _ in crossings:
        edge = ball.complex.edge(edge_id)
        if not (ball.is_safe_vertex(edge.tail) and ball.is_safe_vertex(edge.head)):
            return True
    return False


def walls(ball: CayleyBall, trees: Optional[List[DivisiveTree]] = None) -> List[Wall]:
    """Frontier components of every divisive tree meeting the safe region"""
    _require_safe(ball)
    if trees is None:
        trees = divisive_trees(ball).trees
    found = []
    for index, tree in enumerate(trees):
        graph = frontier_graph(ball, tree)
        for nodes in sorted(nx.connected_components(graph), key=lambda c: min(c)):
            crossings = tuple(sorted((n[1], n[2]) for n in nodes if n[0] == 'h'))
            faces = tuple(sorted({n[1] for n in nodes if n[0] in ('c', 's')}))
            found.append(Wall(index, frozenset(nodes), crossings, faces,
                              _wall_partial(ball, tree, crossings)))
    logger.debug("%d walls from %d trees", len(found), len(trees))
    return found


# -- halfspaces ---------------------------------------------------------------


@dataclass(frozen=True)
class Halfspaces:
    """Safe vertices on each side of a wall"""
    side_a: FrozenSet[int]
    side_b: FrozenSet[int]
    partial: bool
    components: int

    @property
    def two_sided(self) -> bool:
        return self.components == 2 and bool(self.side_a) and bool(self.side_b)

    def side_of(self, v: int) -> Optional[int]:
        if v in self.side_a:
            return 0
        if v in self.side_b:
            return 1
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'side_a': sorted(self.side_a),
            'side_b': sorted(self.side_b),
            'partial': self.partial,
            'components': self.components,
        }


def _region_of_corner(corners_in_wall: Set[int], feet: Set[int], j: int, length: int) -> Any:
    """Sector cut off by the wall containing corner j, or 'rest'"""
    if j not in corners_in_wall:
        return 'rest'
    k = (j - 1) % length
    while k not in feet:
        k = (k - 1) % length
    return k


def halfspaces(ball: CayleyBall, w: Wall, tree: Optional[DivisiveTree] = None) -> Halfspaces:
    """Components of the ball minus the wall, restricted to the safe region"""
    c = ball.complex
    if tree is None:
        tree = divisive_trees(ball).trees[w.tree]
    feet_by_face = _feet_positions(tree)
    graph = nx.Graph()
    graph.add_nodes_from(('v', v) for v in c.vertices)
    crossed = w.crossed_edges
    for edge in c.edges:
        if edge.id not in crossed:
            graph.add_edge(('v', edge.tail), ('v', edge.head))
    for face in c.faces:
        corners = w.corners(face.id)
        feet = feet_by_face.get(face.id, set())
        for j, dart in enumerate(face.darts):
            region = _region_of_corner(corners, feet, j, face.perimeter) if corners else 'rest'
            graph.add_edge(('v', c.dart_tail(dart)), ('f', face.id, region))
    safe = set(ball.safe_vertices())
    sides = []
    for nodes in nx.connected_components(graph):
        vertices = frozenset(n[1] for n in nodes if n[0] == 'v' and n[1] in safe)
        if vertices:
            sides.append(vertices)
    sides.sort(key=min)
    side_a = sides[0] if sides else frozenset()
    side_b = frozenset().union(*sides[1:]) if len(sides) > 1 else frozenset()
    return Halfspaces(side_a, side_b, w.partial, len(sides))


# -- carriers -----------------------------------------------------------------


@dataclass
class ConvexityReport:
    pairs_checked: int = 0
    failures: List[Tuple[int, int]] = field(default_factory=list)
    advisory: bool = False

    @property
    def convex(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pairs_checked': self.pairs_checked,
            'failures': [list(p) for p in self.failures],
            'convex': self.convex,
            'advisory': self.advisory,
        }


def carrier(ball: CayleyBall, w: Wall, samples: int = 200,
            seed: int = 0) -> Tuple[SubComplex, ConvexityReport]:
    """Closed faces and edges met by the wall, with sampled convexity"""
    sub = closure_of_cells(ball.complex, edges=w.crossed_edges, faces=w.faces)
    report = ConvexityReport(advisory=w.partial)
    safe = sorted(v for v in sub.vertices if ball.is_safe_vertex(v))
    pairs = [(u, v) for i, u in enumerate(safe) for v in safe[i + 1:]]
    if len(pairs) > samples:
        pairs = sorted(random.Random(seed).sample(pairs, samples))
    whole = ball.graph()
    inside = sub.as_complex().one_skeleton()
    for u, v in pairs:
        report.pairs_checked += 1
        try:
            inner = nx.shortest_path_length(inside, u, v)
        except nx.NetworkXNoPath:
            report.failures.append((u, v))
            continue
        if inner != nx.shortest_path_length(whole, u, v):
            report.failures.append((u, v))
    if report.failures:
        logger.warning("Carrier of wall through faces %s fails convexity on %d pairs",
                       list(w.faces), len(report.failures))
    return sub, report


def carriers(ball: CayleyBall, found: List[Wall], samples: int = 200, seed: int = 0,
             threads: Optional[int] = None) -> List[Tuple[SubComplex, ConvexityReport]]:
    return ordered_map(lambda w: carrier(ball, w, samples, seed), found, threads)


# -- ladders ------------------------------------------------------------------


@dataclass
class LadderReport:
    ok: bool
    faces: List[int] = field(default_factory=list)
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {'ok': self.ok, 'faces': self.faces, 'reason': self.reason}


def tree_arc(tree: DivisiveTree, source_face: int, target_face: int) -> List[Any]:
    """Tree path between spider centres of two faces"""
    sources = [n for n in tree.graph if n[0] == 's' and n[1] == source_face]
    targets = [n for n in tree.graph if n[0] == 's' and n[1] == target_face]
    if not sources or not targets:
        raise PreconditionError("both faces must carry a spider of the tree")
    return nx.shortest_path(tree.graph, sources[0], targets[0])


def ladder_check(ball: CayleyBall, arc: Sequence[Any]) -> LadderReport:
    """The faces along a tree arc form an injective ladder"""
    faces = [n[1] for n in arc if n[0] == 's']
    edges = [n[1] for n in arc if n[0] == 'e']
    if len(faces) <= 1:
        return LadderReport(True, faces, "single face")
    if len(set(faces)) != len(faces):
        return LadderReport(False, faces, "a face repeats along the arc")
    c = ball.complex
    vertex_sets = []
    for fid in faces:
        vertices = c.face_vertices(fid)
        if len(set(vertices)) != len(vertices):
            return LadderReport(False, faces, f"face {fid} does not embed")
        vertex_sets.append(set(vertices))
    for i, edge in enumerate(edges):
        if edge not in c.face(faces[i]).edges() or edge not in c.face(faces[i + 1]).edges():
            return LadderReport(False, faces, f"edge {edge} is not shared by consecutive faces")
    for i in range(len(faces)):
        for j in range(i + 2, len(faces)):
            if vertex_sets[i] & vertex_sets[j]:
                return LadderReport(False, faces, f"faces {faces[i]} and {faces[j]} overlap")
    for i in range(len(faces) - 1):
        if not boundary_intersection(c, faces[i], faces[i + 1]).connected:
            return LadderReport(False, faces, f"faces {faces[i]} and {faces[i + 1]} meet in a disconnected piece")
    return LadderReport(True, faces)


# -- geodesics ----------------------------------------------------------------


@dataclass
class CrossingProfile:
    """Edge positions along a path where each wall is crossed"""
    positions: Dict[int, List[int]] = field(default_factory=dict)
    separators: Dict[int, Optional[int]] = field(default_factory=dict)

    @property
    def counts(self) -> Dict[int, int]:
        return {w: len(p) for w, p in self.positions.items()}

    @property
    def multiply_crossed(self) -> List[int]:
        return sorted(w for w, p in self.positions.items() if len(p) >= 2)

    @property
    def satisfied(self) -> bool:
        """Every multiply crossed wall has a singly crossed wall between its crossings"""
        return all(s is not None for s in self.separators.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'counts': {str(k): v for k, v in sorted(self.counts.items())},
            'multiply_crossed': self.multiply_crossed,
            'separators': {str(k): v for k, v in sorted(self.separators.items())},
            'satisfied': self.satisfied,
        }


def _path_edges(ball: CayleyBall, path: Sequence[int]) -> List[int]:
    by_ends: Dict[FrozenSet[int], int] = {}
    for edge in ball.complex.edges:
        by_ends.setdefault(frozenset((edge.tail, edge.head)), edge.id)
    edges = []
    for u, v in zip(path, path[1:]):
        key = frozenset((u, v))
        if key not in by_ends:
            raise GeodesicError(f"vertices {u} and {v} are not adjacent")
        edges.append(by_ends[key])
    return edges


def geodesic_crossing_profile(ball: CayleyBall, path: Sequence[int],
                              found: Optional[List[Wall]] = None) -> CrossingProfile:
    """Crossing positions of a geodesic with each wall

    For a wall met at least twice, the separator is a wall crossed exactly
    once by the path, strictly between the first and last crossings.
    """
    if not path:
        raise GeodesicError("empty path")
    edges = _path_edges(ball, path)
    if len(edges) != ball.distance(path[0], path[-1]):
        raise GeodesicError(f"path of length {len(edges)} is not a geodesic")
    if found is None:
        found = walls(ball)
    profile = CrossingProfile()
    for index, w in enumerate(found):
        hits = [k for k, e in enumerate(edges) if e in w.crossed_edges]
        if hits:
            profile.positions[index] = hits
    single = {w: p[0] for w, p in profile.positions.items() if len(p) == 1}
    for index in profile.multiply_crossed:
        first, last = profile.positions[index][0], profile.positions[index][-1]
        between = sorted(w for w, k in single.items() if first < k < last)
        profile.separators[index] = between[0] if between else None
    if not profile.satisfied:
        logger.warning("Geodesic %s crosses walls %s without a separating wall",
                       list(path), [w for w, s in profile.separators.items() if s is None])
    return profile


def geodesics_from_root(ball: CayleyBall) -> List[List[int]]:
    """One BFS geodesic from the root to each safe vertex"""
    paths = nx.single_source_shortest_path(nx.Graph(ball.graph()), ball.root)
    return [paths[v] for v in ball.safe_vertices() if v in paths and v != ball.root]


def ball_to_dot(ball: CayleyBall, found: Sequence[Wall] = (),
                names: Optional[Sequence[str]] = None) -> str:
    """1-skeleton with the edges crossed by each wall coloured"""
    palette = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]
    highlight = {}
    for index, w in enumerate(found):
        for edge in w.crossed_edges:
            highlight.setdefault(edge, palette[index % len(palette)])
    return complex_to_dot(ball.complex, names, highlight, graph_name="ball")
