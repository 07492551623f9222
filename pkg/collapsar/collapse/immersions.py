#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Bounded search for immersed complexes that violate bicollapsibility

Candidates grow one relator polygon at a time: glue the polygon at a vertex
of the current complex, then fold. Folding keeps the map to the presentation
complex an immersion on 1-skeleta, and duplicate faces are dropped.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

from ..complex2 import TwoComplex, attach_polygon, fold_complex
from ..words import Presentation
from .collapser import DEFAULT_STATE_LIMIT, collapses_to_point, count_collapsible_cells, is_trivial_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ImmersionWitness:
    """Simply connected immersed complex, nontrivial, with fewer than two collapsing cells"""
    complex: TwoComplex
    collapsing_cells: int
    candidates_examined: int


def _shape_key(c: TwoComplex) -> Tuple:
    """Isomorphism invariant; candidates sharing it are compared exactly"""
    traversals = c.edge_traversals()
    words = sorted(
        (f.relator, min(c.face_word(f.id)[i:] + c.face_word(f.id)[:i]
                        for i in range(f.perimeter)))
        for f in c.faces
    )
    degrees = sorted(c.vertex_valence(v) for v in c.vertices)
    labels = sorted(Counter((e.label, traversals[e.id], e.is_loop) for e in c.edges).items())
    return (len(c.vertices), len(c.edges), tuple(words), tuple(degrees), tuple(labels))


def incidence_graph(c: TwoComplex) -> nx.DiGraph:
    """Labeled incidence digraph; isomorphic complexes give isomorphic graphs

    Vertices, edges, faces and face corners are nodes. Each corner points at
    the edge its dart runs along (marked forward or reverse) and at the next
    corner of its face.
    """
    graph = nx.DiGraph()
    for v in c.vertices:
        graph.add_node(('v', v), kind='v')
    for e in c.edges:
        graph.add_node(('e', e.id), kind='e', label=e.label)
        graph.add_edge(('v', e.tail), ('e', e.id), role='tail')
        graph.add_edge(('e', e.id), ('v', e.head), role='head')
    for f in c.faces:
        graph.add_node(('f', f.id), kind='f', relator=f.relator)
        for j, dart in enumerate(f.darts):
            corner = ('c', f.id, j)
            graph.add_node(corner, kind='c')
            graph.add_edge(('f', f.id), corner, role='corner')
            graph.add_edge(corner, ('e', dart >> 1), role='reverse' if dart & 1 else 'forward')
            graph.add_edge(corner, ('c', f.id, (j + 1) % f.perimeter), role='next')
    return graph


def _same_node(a: dict, b: dict) -> bool:
    return a == b


def _same_arc(a: dict, b: dict) -> bool:
    return a['role'] == b['role']


def is_isomorphic_complex(first: TwoComplex, second: TwoComplex) -> bool:
    """Label-preserving isomorphism of 2-complexes"""
    if _shape_key(first) != _shape_key(second):
        return False
    return nx.is_isomorphic(incidence_graph(first), incidence_graph(second),
                            node_match=_same_node, edge_match=_same_arc)


class _SeenComplexes:
    """Candidates up to isomorphism, bucketed by the cheap invariant"""

    def __init__(self):
        self._buckets: Dict[Tuple, List[nx.DiGraph]] = {}

    def add(self, c: TwoComplex) -> bool:
        """Record c; False when an isomorphic complex was already recorded"""
        bucket = self._buckets.setdefault(_shape_key(c), [])
        graph = incidence_graph(c)
        for other in bucket:
            if nx.is_isomorphic(graph, other, node_match=_same_node, edge_match=_same_arc):
                return False
        bucket.append(graph)
        return True


def immersed_candidates(p: Presentation, max_faces: int,
                        max_candidates: int) -> Iterator[TwoComplex]:
    """Folded unions of relator polygons, breadth first by face count"""
    seen = _SeenComplexes()
    level: List[TwoComplex] = []
    produced = 0
    for index, relator in enumerate(p.relators):
        candidate = fold_complex(attach_polygon(None, relator.codes, index))
        if seen.add(candidate):
            level.append(candidate)
            produced += 1
            yield candidate
    for _ in range(max_faces - 1):
        grown: List[TwoComplex] = []
        for base in level:
            for index, relator in enumerate(p.relators):
                codes = relator.codes
                for offset in range(len(codes)):
                    rotated = codes[offset:] + codes[:offset]
                    for vertex in base.vertices:
                        if produced >= max_candidates:
                            return
                        candidate = fold_complex(attach_polygon(base, rotated, index, vertex))
                        if candidate.num_faces <= base.num_faces:
                            continue
                        if not seen.add(candidate):
                            continue
                        grown.append(candidate)
                        produced += 1
                        yield candidate
        level = grown
        if not level:
            return


def search_bicollapse_violation(p: Presentation, max_faces: int = 3,
                                max_candidates: int = 2000,
                                state_limit: int = DEFAULT_STATE_LIMIT) -> Optional[ImmersionWitness]:
    """First candidate that is simply connected, nontrivial and has < 2 collapsing cells"""
    examined = 0
    for candidate in immersed_candidates(p, max_faces, max_candidates):
        examined += 1
        if is_trivial_complex(candidate):
            continue
        cells = count_collapsible_cells(candidate)
        if cells >= 2:
            continue
        if collapses_to_point(candidate, state_limit) is None:
            continue
        logger.info("Bicollapsibility violated by a %d-face immersed complex",
                    candidate.num_faces)
        return ImmersionWitness(candidate, cells, examined)
    logger.debug("No violation among %d immersed candidates", examined)
    return None
