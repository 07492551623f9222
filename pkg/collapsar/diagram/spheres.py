#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Search for spherical diagrams without cancellable pairs

A candidate is a multiset of relator polygons whose sides are matched in
inverse-labeled pairs. Matchings that glue two faces into a cancellable pair
are pruned as soon as they are made.
"""
import itertools
import logging
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from ..words import Presentation
from .models import DiagramFace, SphericalDiagram, relator_rotation

logger = logging.getLogger(__name__)

DEFAULT_STATE_LIMIT = 500000

Shape = Tuple[int, int, Tuple[int, ...]]


def _shapes(p: Presentation) -> List[Shape]:
    shapes = []
    for index in range(len(p.relators)):
        forward = relator_rotation(p, index, 1, 0)
        shapes.append((index, 1, forward))
        backward = relator_rotation(p, index, -1, 0)
        rotations = {backward[i:] + backward[:i] for i in range(len(backward))}
        if forward not in rotations:
            shapes.append((index, -1, backward))
    return shapes


class _Matching:
    """Side pairing for one multiset of polygons"""

    def __init__(self, shapes: Sequence[Shape], state_limit: int):
        self.shapes = shapes
        self.sides: List[Tuple[int, int]] = []
        self.labels: List[int] = []
        self.starts: List[int] = []
        for face, (_, _, codes) in enumerate(shapes):
            self.starts.append(len(self.sides))
            for position, code in enumerate(codes):
                self.sides.append((face, position))
                self.labels.append(code)
        self.partner = [-1] * len(self.sides)
        self.budget = state_limit

    def _side(self, face: int, position: int) -> int:
        length = len(self.shapes[face][2])
        return self.starts[face] + position % length

    def _cancellable(self, s: int, t: int) -> bool:
        (f, i), (g, j) = self.sides[s], self.sides[t]
        if f == g:
            return False
        fw, gw = self.shapes[f][2], self.shapes[g][2]
        if len(fw) != len(gw):
            return False
        return all(fw[(i + k) % len(fw)] == -gw[(j - k) % len(gw)] for k in range(len(fw)))

    def search(self) -> bool:
        if self.budget <= 0:
            return False
        self.budget -= 1
        try:
            s = self.partner.index(-1)
        except ValueError:
            return self._is_sphere()
        for t in range(s + 1, len(self.sides)):
            if self.partner[t] != -1 or self.labels[t] != -self.labels[s]:
                continue
            if self._cancellable(s, t):
                continue
            self.partner[s], self.partner[t] = t, s
            if self.search():
                return True
            self.partner[s] = self.partner[t] = -1
        return False

    def _is_sphere(self) -> bool:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.shapes)))
        for s, t in enumerate(self.partner):
            graph.add_edge(self.sides[s][0], self.sides[t][0])
        if not nx.is_connected(graph):
            return False
        try:
            self.diagram()
        except ValueError:
            return False
        return True

    def diagram(self) -> SphericalDiagram:
        dart_of = [0] * len(self.sides)
        labels: List[int] = []
        for s, t in enumerate(self.partner):
            if s > t:
                continue
            forward, backward = (s, t) if self.labels[s] > 0 else (t, s)
            dart_of[forward] = len(labels)
            dart_of[backward] = len(labels) + 1
            labels.extend((self.labels[forward], self.labels[backward]))
        faces = tuple(
            DiagramFace(relator, orientation, 0,
                        tuple(dart_of[self._side(face, i)] for i in range(len(codes))))
            for face, (relator, orientation, codes) in enumerate(self.shapes)
        )
        return SphericalDiagram(tuple(labels), faces)


def _balanced(shapes: Sequence[Shape]) -> bool:
    total = {}
    for _, _, codes in shapes:
        for code in codes:
            total[abs(code)] = total.get(abs(code), 0) + (1 if code > 0 else -1)
    return not any(total.values())


def find_spherical_near_immersion(p: Presentation, max_area: int,
                                  state_limit: int = DEFAULT_STATE_LIMIT) -> Optional[SphericalDiagram]:
    """A sphere with no cancellable pair and at most max_area faces, or None"""
    shapes = _shapes(p)
    if not shapes:
        return None
    for area in range(1, max_area + 1):
        for combo in itertools.combinations_with_replacement(range(len(shapes)), area):
            chosen = [shapes[i] for i in combo]
            if sum(len(s[2]) for s in chosen) % 2 or not _balanced(chosen):
                continue
            matching = _Matching(chosen, state_limit)
            if matching.search():
                sphere = matching.diagram()
                logger.info("Spherical diagram found with %d faces", sphere.area)
                return sphere
            if matching.budget <= 0:
                logger.warning("Sphere search truncated at %d states for area %d",
                               state_limit, area)
    return None
