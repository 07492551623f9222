#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Star graphs, T(q), staggeredness, the curvature inequality and the
3-collapsing certification rule
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Tuple, Union

import networkx as nx

from ..complex2 import INFINITY, TwoComplex, girth, link, reverse_dart
from ..errors import PreconditionError
from ..verdict import CollapsingVerdict, VerdictStatus
from ..words import Presentation, code_generator, is_proper_power
from .pieces import min_piece_decomposition, pieces

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StarGraph:
    """Letters as nodes; each relator corner x.y contributes an arc {x, y^-1}"""
    nodes: Tuple[int, ...]
    arcs: Tuple[Tuple[int, int], ...]

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.nodes)
        for index, (x, y) in enumerate(self.arcs):
            graph.add_edge(x, y, key=index)
        return graph


def star_graph(p: Presentation) -> StarGraph:
    nodes = tuple(c for g in range(p.rank) for c in (g + 1, -(g + 1)))
    arcs = []
    for relator in p.relators:
        codes = relator.codes
        for i, x in enumerate(codes):
            y = codes[(i + 1) % len(codes)]
            arcs.append((x, -y))
    return StarGraph(nodes, tuple(arcs))


def _has_short_reduced_cycle(g: StarGraph, lower: int, upper: int) -> bool:
    """Closed path with no backtracking, lower <= length < upper"""
    adjacency: Dict[int, List[Tuple[int, int]]] = {n: [] for n in g.nodes}
    for index, (x, y) in enumerate(g.arcs):
        adjacency[x].append((y, index))
        if x != y:
            adjacency[y].append((x, index))

    def walk(start: int, node: int, first: int, last: int, length: int) -> bool:
        if length >= lower and node == start and last != first:
            return True
        if length + 1 >= upper:
            return False
        for nxt, arc in adjacency[node]:
            if arc == last:
                continue
            if walk(start, nxt, first, arc, length + 1):
                return True
        return False

    for start in g.nodes:
        for nxt, arc in adjacency[start]:
            if walk(start, nxt, arc, arc, 1):
                return True
    return False


def check_T(p: Presentation, q: int) -> bool:
    """True iff the star graph has no reduced cycle of length h, 3 <= h < q"""
    for index, relator in enumerate(p.relators):
        if not relator.cyclically_reduced:
            raise PreconditionError(f"relator {index} is not cyclically reduced")
    if q <= 3:
        return True
    return not _has_short_reduced_cycle(star_graph(p), 3, q)


def is_staggered(p: Presentation) -> bool:
    """Exhaustive search for a generator order making relator extremes strictly increase"""
    if len(p.relators) <= 1:
        return True
    supports = [sorted({code_generator(c) for c in r.codes}) for r in p.relators]
    for order in itertools.permutations(range(p.rank)):
        rank = {g: i for i, g in enumerate(order)}
        extremes = sorted(
            (min(rank[g] for g in s), max(rank[g] for g in s)) for s in supports)
        if all(a[0] < b[0] and a[1] < b[1] for a, b in zip(extremes, extremes[1:])):
            logger.debug("Staggered under generator order %s", order)
            return True
    return False


class CurvatureVerdict(Enum):
    """Sign of 2/p + 1/q - 1"""
    NEGATIVE = "negative"
    NONPOSITIVE = "nonpositive"
    NONE = "none"


@dataclass(frozen=True)
class CurvatureParams:
    """p = least link girth, q = least face perimeter"""
    p: Union[int, float]
    q: Union[int, float]

    def weight(self) -> Fraction:
        total = Fraction(0)
        if self.p != INFINITY:
            total += Fraction(2, int(self.p))
        if self.q != INFINITY:
            total += Fraction(1, int(self.q))
        return total

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p': None if self.p == INFINITY else int(self.p),
            'q': None if self.q == INFINITY else int(self.q),
            'weight': str(self.weight()),
        }


def face_is_immersed(c: TwoComplex, face_id: int) -> bool:
    darts = c.face(face_id).darts
    return all(darts[(i + 1) % len(darts)] != reverse_dart(d) for i, d in enumerate(darts))


def curvature_condition(c: TwoComplex) -> Tuple[CurvatureParams, CurvatureVerdict]:
    """Compare 2/p + 1/q with 1"""
    for face in c.faces:
        if not face_is_immersed(c, face.id):
            raise PreconditionError(f"face {face.id} is not attached by an immersion")
    p = min((girth(link(c, v)) for v in c.vertices), default=INFINITY)
    q = min((face.perimeter for face in c.faces), default=INFINITY)
    params = CurvatureParams(p, q)
    weight = params.weight()
    if weight < 1:
        verdict = CurvatureVerdict.NEGATIVE
    elif weight == 1:
        verdict = CurvatureVerdict.NONPOSITIVE
    else:
        verdict = CurvatureVerdict.NONE
    return params, verdict


def has_duplicate_relators(p: Presentation) -> bool:
    """Two relators equal up to rotation and inversion"""
    relators = p.relators
    return any(
        relators[i].equal_up_to_inversion(relators[j])
        for i in range(len(relators)) for j in range(i + 1, len(relators))
    )


def _decomposition_label(value: Union[int, float]) -> Any:
    return None if value == INFINITY else int(value)


def certify_3_collapsing(p: Presentation) -> CollapsingVerdict:
    """Certify 3-collapsing through C(6) or C(4)-T(4); never refutes"""
    if not all(p.immersed):
        return CollapsingVerdict(VerdictStatus.INCONCLUSIVE,
                                 ["relator not cyclically reduced"])
    powers = [i for i, r in enumerate(p.relators) if is_proper_power(r) is not None]
    if powers:
        return CollapsingVerdict(VerdictStatus.INCONCLUSIVE, ["proper-power relator"],
                                 details={'proper_powers': powers})
    if has_duplicate_relators(p):
        return CollapsingVerdict(VerdictStatus.INCONCLUSIVE, ["duplicate relators"])
    idx = pieces(p)
    decompositions = [min_piece_decomposition(r, idx) for r in p.relators]
    details: Dict[str, Any] = {
        'max_piece_length': list(idx.max_piece_length),
        'piece_decompositions': [_decomposition_label(d) for d in decompositions],
        'vacuous_C': [d == INFINITY for d in decompositions],
    }
    c6 = all(d >= 6 for d in decompositions)
    c4 = all(d >= 4 for d in decompositions)
    t4 = check_T(p, 4)
    details.update({'C(6)': c6, 'C(4)': c4, 'T(4)': t4})
    if c6:
        return CollapsingVerdict(VerdictStatus.CERTIFIED, ["C(6) => 3-collapsing"],
                                 details=details)
    if c4 and t4:
        return CollapsingVerdict(VerdictStatus.CERTIFIED, ["C(4)-T(4) => 3-collapsing"],
                                 details=details)
    return CollapsingVerdict(VerdictStatus.INCONCLUSIVE, ["small cancellation not met"],
                             details=details)
