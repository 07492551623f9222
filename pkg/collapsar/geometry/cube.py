#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Finite fragment of the dual cube complex of a wallspace

Vertices are consistent choices of one halfspace per wall, reached from the
root's principal orientation by at most ``max_flips`` single-wall flips.
Squares fill every pair of crossing walls whose four corners are present.
"""
import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..errors import InconsistentHalfspaceError, PreconditionError
from .ball import CayleyBall
from .trees import divisive_trees
from .walls import Halfspaces, Wall, halfspaces

logger = logging.getLogger(__name__)

DEFAULT_MAX_FLIPS = 4

Orientation = Tuple[int, ...]


@dataclass
class CubeComplexFragment:
    walls: int
    vertices: List[Orientation] = field(default_factory=list)
    edges: List[Tuple[int, int, int]] = field(default_factory=list)
    squares: List[Tuple[int, int, int, int]] = field(default_factory=list)
    crossing_pairs: List[Tuple[int, int]] = field(default_factory=list)
    cycle_rank: int = 0
    filled_rank: int = 0
    flag_failures: List[Tuple[int, Tuple[int, int, int]]] = field(default_factory=list)
    max_flips: int = DEFAULT_MAX_FLIPS

    @property
    def simply_connected(self) -> bool:
        """Square boundaries span the cycle space of the 1-skeleton"""
        return self.filled_rank == self.cycle_rank

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        for u, v, w in self.edges:
            g.add_edge(u, v, wall=w)
        return g

    def summary(self) -> Dict[str, Any]:
        return {
            'walls': self.walls,
            'vertices': len(self.vertices),
            'edges': len(self.edges),
            'squares': len(self.squares),
            'crossing_pairs': len(self.crossing_pairs),
            'simply_connected': self.simply_connected,
            'flag_failures': len(self.flag_failures),
            'max_flips': self.max_flips,
        }

    def to_dict(self) -> Dict[str, Any]:
        data = self.summary()
        data['orientations'] = [list(o) for o in self.vertices]
        data['edge_list'] = [list(e) for e in self.edges]
        data['square_list'] = [list(s) for s in self.squares]
        data['crossing_pair_list'] = [list(p) for p in self.crossing_pairs]
        return data


def _check_sides(sides: Sequence[Halfspaces], root: int) -> Orientation:
    principal = []
    for index, h in enumerate(sides):
        if h.side_a & h.side_b:
            raise InconsistentHalfspaceError(f"wall {index} has overlapping halfspaces")
        side = h.side_of(root)
        if side is None:
            raise InconsistentHalfspaceError(f"root {root} lies in neither halfspace of wall {index}")
        principal.append(side)
    return tuple(principal)


def _chosen(h: Halfspaces, bit: int) -> FrozenSet[int]:
    return h.side_b if bit else h.side_a


def _consistent(sides: Sequence[Halfspaces], orientation: Orientation) -> bool:
    chosen = [_chosen(h, b) for h, b in zip(sides, orientation)]
    if any(not c for c in chosen):
        return False
    return all(a & b for a, b in itertools.combinations(chosen, 2))


def crosses(first: Halfspaces, second: Halfspaces) -> bool:
    """All four halfspace intersections are nonempty"""
    return all(_chosen(first, i) & _chosen(second, j) for i in (0, 1) for j in (0, 1))


def _flip(orientation: Orientation, wall: int) -> Orientation:
    return orientation[:wall] + (1 - orientation[wall],) + orientation[wall + 1:]


def _cycle_ranks(fragment: CubeComplexFragment) -> Tuple[int, int]:
    g = fragment.graph()
    cycle_rank = len(nx.cycle_basis(g))
    if not fragment.squares:
        return cycle_rank, 0
    column = {}
    for u, v, _ in fragment.edges:
        column[(min(u, v), max(u, v))] = len(column)
    rows = np.zeros((len(fragment.squares), len(column)))
    for r, square in enumerate(fragment.squares):
        for a, b in zip(square, square[1:] + square[:1]):
            rows[r, column[(min(a, b), max(a, b))]] += 1 if a < b else -1
    return cycle_rank, int(np.linalg.matrix_rank(rows))


def sageev_fragment(sides: Sequence[Halfspaces], root: int,
                    max_flips: int = DEFAULT_MAX_FLIPS) -> CubeComplexFragment:
    """Orientations within max_flips of the root's principal orientation"""
    principal = _check_sides(sides, root)
    fragment = CubeComplexFragment(len(sides), max_flips=max_flips)
    index: Dict[Orientation, int] = {principal: 0}
    fragment.vertices.append(principal)
    depth = {principal: 0}
    queue = deque([principal])
    while queue:
        current = queue.popleft()
        if depth[current] >= max_flips:
            continue
        for wall in range(len(sides)):
            neighbour = _flip(current, wall)
            if neighbour in index or not _consistent(sides, neighbour):
                continue
            index[neighbour] = len(fragment.vertices)
            fragment.vertices.append(neighbour)
            depth[neighbour] = depth[current] + 1
            queue.append(neighbour)
    for orientation, u in index.items():
        for wall in range(len(sides)):
            if orientation[wall] == 0:
                v = index.get(_flip(orientation, wall))
                if v is not None:
                    fragment.edges.append((u, v, wall))
    fragment.edges.sort()
    fragment.crossing_pairs = [(i, j) for i, j in itertools.combinations(range(len(sides)), 2)
                               if crosses(sides[i], sides[j])]
    for orientation, u in index.items():
        for i, j in fragment.crossing_pairs:
            if orientation[i] or orientation[j]:
                continue
            a = index.get(_flip(orientation, i))
            b = index.get(_flip(orientation, j))
            c = index.get(_flip(_flip(orientation, i), j))
            if None not in (a, b, c):
                fragment.squares.append((u, a, c, b))
    fragment.squares.sort()
    fragment.cycle_rank, fragment.filled_rank = _cycle_ranks(fragment)
    fragment.flag_failures = _flag_failures(fragment, index, depth, max_flips)
    logger.info("Cube fragment: %d vertices, %d edges, %d squares",
                len(fragment.vertices), len(fragment.edges), len(fragment.squares))
    return fragment


def _flag_failures(fragment: CubeComplexFragment, index: Dict[Orientation, int],
                   depth: Dict[Orientation, int], max_flips: int) -> List[Tuple[int, Tuple[int, int, int]]]:
    """Corners where three pairwise squares exist but the cube's far corner is missing"""
    crossing = set(fragment.crossing_pairs)
    failures = []
    for orientation, u in index.items():
        if depth[orientation] + 3 > max_flips:
            continue
        for triple in itertools.combinations(range(fragment.walls), 3):
            if not all(pair in crossing for pair in itertools.combinations(triple, 2)):
                continue
            faces_present = all(
                _flip(_flip(orientation, i), j) in index
                for i, j in itertools.combinations(triple, 2))
            if not faces_present:
                continue
            far = orientation
            for wall in triple:
                far = _flip(far, wall)
            if far not in index:
                failures.append((u, triple))
    return failures


def dual_cube_fragment(ball: CayleyBall, found: Sequence[Wall],
                       max_flips: int = DEFAULT_MAX_FLIPS,
                       allow_partial: bool = False) -> CubeComplexFragment:
    """Sageev fragment for the walls of a ball

    Walls that split the safe region into fewer than two sides, and walls
    inducing a partition already seen, contribute no new halfspace pair.
    """
    partial = [i for i, w in enumerate(found) if w.partial]
    if partial and not allow_partial:
        raise PreconditionError(f"walls {partial} are partial; pass allow_partial for advisory output")
    trees = divisive_trees(ball).trees
    sides: List[Halfspaces] = []
    seen = set()
    for w in found:
        h = halfspaces(ball, w, trees[w.tree])
        if not h.side_a or not h.side_b:
            continue
        key = frozenset((h.side_a, h.side_b))
        if key in seen:
            continue
        seen.add(key)
        sides.append(h)
    logger.debug("%d distinct halfspace pairs from %d walls", len(sides), len(found))
    return sageev_fragment(sides, ball.root, max_flips)
