#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Builders for presentation complexes and folded immersions
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from ..words import BranchedPresentation, Presentation, code_generator
from .models import Edge, Face, TwoComplex, canonical_cycle, dart_edge

logger = logging.getLogger(__name__)


def code_to_dart(code: int) -> int:
    """Dart of the presentation complex reading a signed letter code"""
    generator = code_generator(code)
    return 2 * generator if code > 0 else 2 * generator + 1


def presentation_complex(p: Presentation) -> TwoComplex:
    """One vertex, one loop per generator, one face per relator"""
    edges = tuple(Edge(g.id, 0, 0, g.id) for g in p.generators)
    faces = tuple(
        Face(i, tuple(code_to_dart(c) for c in r.codes), relator=i)
        for i, r in enumerate(p.relators)
    )
    return TwoComplex((0,), edges, faces)


def branched_complex(b: BranchedPresentation) -> TwoComplex:
    """Presentation complex with faces attached along w_i^n_i"""
    edges = tuple(Edge(g.id, 0, 0, g.id) for g in b.base.generators)
    faces = []
    for i, relator in enumerate(b.relators):
        faces.append(Face(i, tuple(code_to_dart(c) for c in relator.codes), relator=i,
                          degree=b.exponents[i], base_length=b.base_length(i)))
    return TwoComplex((0,), edges, tuple(faces))


def attach_polygon(c: Optional[TwoComplex], word: Sequence[int], relator: int,
                   at_vertex: Optional[int] = None) -> TwoComplex:
    """Disjoint labeled polygon reading word, its base vertex glued to at_vertex"""
    if c is None or not c.vertices:
        c = TwoComplex((0,))
        at_vertex = 0
    if at_vertex is None:
        at_vertex = c.vertices[0]
    next_vertex = max(c.vertices) + 1
    next_edge = max((e.id for e in c.edges), default=-1) + 1
    length = len(word)
    corners = [at_vertex] + [next_vertex + i for i in range(length - 1)] + [at_vertex]
    new_edges: List[Edge] = []
    darts: List[int] = []
    for i, code in enumerate(word):
        eid = next_edge + i
        generator = code_generator(code)
        if code > 0:
            new_edges.append(Edge(eid, corners[i], corners[i + 1], generator))
            darts.append(2 * eid)
        else:
            new_edges.append(Edge(eid, corners[i + 1], corners[i], generator))
            darts.append(2 * eid + 1)
    next_face = max((f.id for f in c.faces), default=-1) + 1
    vertices = c.vertices + tuple(next_vertex + i for i in range(length - 1))
    face = Face(next_face, tuple(darts), relator=relator)
    return TwoComplex(vertices, c.edges + tuple(new_edges), c.faces + (face,))


def fold_complex(c: TwoComplex) -> TwoComplex:
    """Stallings-fold the 1-skeleton and drop faces that become duplicates"""
    vertices = UnionFind(c.vertices)
    edges = UnionFind([e.id for e in c.edges])
    folds = 0
    changed = True
    while changed:
        changed = False
        outgoing: Dict[Tuple[int, int], int] = {}
        for edge in c.edges:
            if edges[edge.id] != edge.id:
                continue
            for side in (0, 1):
                dart = 2 * edge.id + side
                if c.dart_label(dart) == 0:
                    continue
                key = (vertices[c.dart_tail(dart)], c.dart_label(dart))
                other = outgoing.get(key)
                if other is None:
                    outgoing[key] = dart
                    continue
                edges.union(dart_edge(other), edge.id)
                vertices.union(c.dart_head(other), c.dart_head(dart))
                folds += 1
                changed = True
                break
            if changed:
                break
    vertex_reps = sorted({vertices[v] for v in c.vertices})
    vmap = {v: i for i, v in enumerate(vertex_reps)}
    edge_reps = sorted({edges[e.id] for e in c.edges})
    emap = {e: i for i, e in enumerate(edge_reps)}
    new_edges = tuple(
        Edge(emap[rep], vmap[vertices[c.edge(rep).tail]], vmap[vertices[c.edge(rep).head]],
             c.edge(rep).label)
        for rep in edge_reps
    )
    seen = set()
    new_faces = []
    for face in c.faces:
        darts = tuple(2 * emap[edges[dart_edge(d)]] + (d & 1) for d in face.darts)
        key = (face.relator, canonical_cycle(darts))
        if key in seen:
            continue
        seen.add(key)
        new_faces.append(Face(len(new_faces), darts, face.relator, face.degree, face.base_length))
    if folds:
        logger.debug("Folded %d edge pairs, %d faces remain", folds, len(new_faces))
    return TwoComplex(tuple(range(len(vertex_reps))), new_edges, tuple(new_faces))
