#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Elementary collapses and collapsibility searches
"""
import itertools
import logging
from typing import TYPE_CHECKING, Dict, FrozenSet, List, Optional, Set, Tuple

from ..complex2 import TwoComplex, closure_of_faces
from ..errors import PreconditionError, StaleCollapseError
from ..parallel import ordered_map
from ..verdict import CollapsingVerdict, VerdictStatus
from .models import CollapseSequence, FreeFacePair, PairKind

if TYPE_CHECKING:
    from ..geometry.ball import CayleyBall

logger = logging.getLogger(__name__)

DEFAULT_STATE_LIMIT = 200000


def _spur_pairs(c: TwoComplex, traversals: Dict[int, int]) -> List[FreeFacePair]:
    pairs = []
    incident: Dict[int, List[int]] = {v: [] for v in c.vertices}
    for edge in c.edges:
        incident[edge.tail].append(edge.id)
        incident[edge.head].append(edge.id)
    for v, edges in incident.items():
        if len(edges) == 1 and traversals.get(edges[0], 0) == 0:
            pairs.append(FreeFacePair(PairKind.SPUR, v, edges[0]))
    return pairs


def _face_pairs(c: TwoComplex, traversals: Dict[int, int]) -> List[FreeFacePair]:
    pairs = []
    for face in c.faces:
        for eid in sorted(set(face.edges())):
            if traversals[eid] == 1:
                pairs.append(FreeFacePair(PairKind.FACE, eid, face.id))
    return pairs


def free_face_pairs(c: TwoComplex) -> List[FreeFacePair]:
    """Every valid elementary collapse of c, faces first"""
    traversals = c.edge_traversals()
    return sorted(_face_pairs(c, traversals) + _spur_pairs(c, traversals))


def is_valid_pair(c: TwoComplex, pair: FreeFacePair) -> bool:
    traversals = c.edge_traversals()
    if pair.kind == PairKind.FACE:
        if not c.has_face(pair.cell) or not c.has_edge(pair.free_cell):
            return False
        return (traversals[pair.free_cell] == 1
                and pair.free_cell in c.face(pair.cell).edges())
    if pair.free_cell not in c.vertices or not c.has_edge(pair.cell):
        return False
    edge = c.edge(pair.cell)
    return (not edge.is_loop and pair.free_cell in (edge.tail, edge.head)
            and c.vertex_valence(pair.free_cell) == 1 and traversals[pair.cell] == 0)


def do_collapse(c: TwoComplex, pair: FreeFacePair) -> TwoComplex:
    """Remove the free cell and its coface"""
    if not is_valid_pair(c, pair):
        raise StaleCollapseError(f"pair {pair.to_dict()} is not a free face of the complex")
    if pair.kind == PairKind.FACE:
        return c.without(edges=[pair.free_cell], faces=[pair.cell])
    return c.without(vertices=[pair.free_cell], edges=[pair.cell])


def _greedy_faces(c: TwoComplex) -> Tuple[TwoComplex, List[FreeFacePair]]:
    steps: List[FreeFacePair] = []
    while c.faces:
        traversals = c.edge_traversals()
        pairs = _face_pairs(c, traversals)
        if not pairs:
            break
        steps.append(pairs[0])
        c = c.without(edges=[pairs[0].free_cell], faces=[pairs[0].cell])
    return c, steps


def _exhaustive_faces(c: TwoComplex, limit: int) -> Optional[List[FreeFacePair]]:
    """Backtracking over face-collapse orders, memoized on the remaining cells"""
    failed: Set[Tuple[FrozenSet[int], FrozenSet[int]]] = set()
    budget = [limit]

    def search(current: TwoComplex) -> Optional[List[FreeFacePair]]:
        if not current.faces:
            return []
        key = (frozenset(f.id for f in current.faces), frozenset(e.id for e in current.edges))
        if key in failed or budget[0] <= 0:
            return None
        budget[0] -= 1
        for pair in _face_pairs(current, current.edge_traversals()):
            rest = search(current.without(edges=[pair.free_cell], faces=[pair.cell]))
            if rest is not None:
                return [pair] + rest
        failed.add(key)
        return None

    result = search(c)
    if result is None and budget[0] <= 0:
        logger.debug("Collapse search stopped after %d states", limit)
    return result


def collapses_to_graph(c: TwoComplex,
                       state_limit: int = DEFAULT_STATE_LIMIT) -> Optional[CollapseSequence]:
    """Face collapses removing every face, or None"""
    residue, steps = _greedy_faces(c)
    if not residue.faces:
        return CollapseSequence(tuple(steps))
    rest = _exhaustive_faces(c, state_limit)
    if rest is None:
        return None
    return CollapseSequence(tuple(rest))


def collapses_to_point(c: TwoComplex,
                       state_limit: int = DEFAULT_STATE_LIMIT) -> Optional[CollapseSequence]:
    """Collapse to a graph, then prune spurs down to one vertex"""
    if not c.vertices:
        return None
    to_graph = collapses_to_graph(c, state_limit)
    if to_graph is None:
        return None
    graph = to_graph.replay(c)
    steps = list(to_graph.pairs)
    while len(graph.vertices) > 1:
        spurs = _spur_pairs(graph, graph.edge_traversals())
        if not spurs:
            return None
        steps.append(spurs[0])
        graph = graph.without(vertices=[spurs[0].free_cell], edges=[spurs[0].cell])
    if graph.edges:
        return None
    return CollapseSequence(tuple(steps))


def count_collapsible_cells(c: TwoComplex) -> int:
    """Distinct edges or faces admitting at least one free face"""
    return len({(p.kind, p.cell) for p in free_face_pairs(c)})


def count_free_face_pairs(c: TwoComplex) -> int:
    return len(free_face_pairs(c))


def is_trivial_complex(c: TwoComplex) -> bool:
    """Closure of a single 0-cell, 1-cell, or 2-cell with a free face"""
    if not c.faces:
        if len(c.vertices) == 1 and not c.edges:
            return True
        return (len(c.edges) == 1 and len(c.vertices) == 2
                and not c.edges[0].is_loop)
    if len(c.faces) != 1:
        return False
    face = c.faces[0]
    closure = closure_of_faces(c, [face.id])
    if closure.edges != frozenset(e.id for e in c.edges):
        return False
    if closure.vertices != frozenset(c.vertices):
        return False
    return any(p.kind == PairKind.FACE for p in free_face_pairs(c))


def _touching_faces(c: TwoComplex, faces: List[int]) -> Dict[int, Set[int]]:
    at_vertex: Dict[int, Set[int]] = {}
    for fid in faces:
        for v in c.face_vertices(fid):
            at_vertex.setdefault(v, set()).add(fid)
    touching: Dict[int, Set[int]] = {fid: set() for fid in faces}
    for group in at_vertex.values():
        for fid in group:
            touching[fid] |= group - {fid}
    return touching


def connected_face_unions(c: TwoComplex, faces: List[int], n: int) -> List[Tuple[int, ...]]:
    """Sets of at most n faces whose closures form a connected union"""
    touching = _touching_faces(c, faces)
    level = {frozenset([f]) for f in faces}
    found = set(level)
    for _ in range(n - 1):
        grown = set()
        for group in level:
            for f in group:
                for g in touching[f] - group:
                    grown.add(group | {g})
        grown -= found
        found |= grown
        level = grown
    return sorted((tuple(sorted(s)) for s in found), key=lambda s: (len(s), s))


def _union_complex(c: TwoComplex, faces: Tuple[int, ...]) -> TwoComplex:
    return closure_of_faces(c, faces).as_complex()


def check_n_collapsing(ball: "CayleyBall", n: int,
                       threads: Optional[int] = None) -> CollapsingVerdict:
    """Every union of m <= n safe closed faces has at least m collapsing cells"""
    if not 1 <= n <= 3:
        raise PreconditionError(f"n must be between 1 and 3, got {n}")
    if ball.safe_radius < 0:
        raise PreconditionError(
            f"ball of radius {ball.radius} has no safe region for relator length "
            f"{ball.max_relator_length}")
    c = ball.complex
    unions = connected_face_unions(c, ball.safe_faces(), n)

    def deficit(faces: Tuple[int, ...]) -> bool:
        return count_collapsible_cells(_union_complex(c, faces)) < len(faces)

    flags = ordered_map(deficit, unions, threads)
    witnesses = [u for u, bad in zip(unions, flags) if bad]
    details = {'unions_checked': len(unions), 'safe_radius': ball.safe_radius,
               'witness_count': len(witnesses)}
    if witnesses:
        first = witnesses[0]
        details['witness_faces'] = list(first)
        logger.info("%d-collapsing refuted by %d faces", n, len(first))
        return CollapsingVerdict(VerdictStatus.REFUTED, [f"{n}-collapsing violated in ball"],
                                 witness=_union_complex(c, first), bound=ball.radius,
                                 details=details)
    return CollapsingVerdict(VerdictStatus.CERTIFIED,
                             [f"{n}-collapsing holds up to radius {ball.radius}"],
                             bound=ball.radius, details=details)


def check_unicollapsible(ball: "CayleyBall", n: int = 3,
                         state_limit: int = DEFAULT_STATE_LIMIT) -> CollapsingVerdict:
    """Every connected union of at most n safe faces collapses to a graph"""
    if ball.safe_radius < 0:
        raise PreconditionError(f"ball of radius {ball.radius} has no safe region")
    c = ball.complex
    unions = connected_face_unions(c, ball.safe_faces(), n)
    for faces in unions:
        union = _union_complex(c, faces)
        if collapses_to_graph(union, state_limit) is None:
            return CollapsingVerdict(VerdictStatus.REFUTED, ["union fails to collapse to a graph"],
                                     witness=union, bound=ball.radius,
                                     details={'witness_faces': list(faces)})
    return CollapsingVerdict(VerdictStatus.CERTIFIED,
                             [f"unions of <= {n} faces collapse to graphs up to radius {ball.radius}"],
                             bound=ball.radius, details={'unions_checked': len(unions)})


def check_dr_collapsing(ball: "CayleyBall",
                        state_limit: int = DEFAULT_STATE_LIMIT) -> CollapsingVerdict:
    """The closure of all safe faces collapses to a graph"""
    if ball.safe_radius < 0:
        raise PreconditionError(f"ball of radius {ball.radius} has no safe region")
    union = _union_complex(ball.complex, tuple(ball.safe_faces()))
    sequence = collapses_to_graph(union, state_limit)
    if sequence is None:
        return CollapsingVerdict(VerdictStatus.REFUTED, ["safe subcomplex does not collapse to a graph"],
                                 witness=union, bound=ball.radius)
    return CollapsingVerdict(VerdictStatus.CERTIFIED,
                             [f"safe subcomplex collapses to a graph at radius {ball.radius}"],
                             bound=ball.radius, details={'collapses': len(sequence)})


def sample_edge_extensions(c: TwoComplex, faces: Tuple[int, ...],
                           extra_edges: int) -> List[TwoComplex]:
    """Closure of faces plus up to extra_edges further edges of c, every combination"""
    base = closure_of_faces(c, faces)
    spare = sorted(e.id for e in c.edges if e.id not in base.edges)
    results = []
    for k in range(1, extra_edges + 1):
        for chosen in itertools.combinations(spare, k):
            vertices = set(base.vertices)
            for eid in chosen:
                vertices.update((c.edge(eid).tail, c.edge(eid).head))
            results.append(TwoComplex(
                tuple(sorted(vertices)),
                tuple(c.edge(e) for e in sorted(set(base.edges) | set(chosen))),
                tuple(c.face(f) for f in sorted(faces)),
            ))
    return results
