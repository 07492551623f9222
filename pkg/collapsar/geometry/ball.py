#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Balls in the universal cover with relator-power cycles filled as faces

Vertices are group elements within distance R of the identity, found by
breadth-first search with an equality oracle. Each closed relator-power
cycle inside the ball becomes one face, so duplicate faces never appear.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

import networkx as nx

from ..complex2 import Edge, Face, SubComplex, TwoComplex, canonical_cycle
from ..dehn import EqualityOracle, choose_oracle
from ..errors import OracleError
from ..words import BranchedPresentation, Word, code_generator, free_reduce

logger = logging.getLogger(__name__)


def safe_radius_for(b: BranchedPresentation, radius: int) -> int:
    """radius - max_i max(|w_i|, floor(|w_i^n_i| / 2))

    Not radius minus the longest relator: a face of relator i lies within
    max(|w_i|, floor(|w_i^n_i| / 2)) of each of its vertices, so that is the
    margin subtracted. For [a, b] branched at 2 and radius 6 this gives 2,
    where the longest relator would give -2.
    """
    reach = 0
    for i in range(len(b.exponents)):
        reach = max(reach, b.base_length(i), b.derived_length(i) // 2)
    return radius - reach


@dataclass(frozen=True)
class CayleyBall:
    """Finite piece of the cover; distances are from vertex 0"""
    complex: TwoComplex
    radius: int
    safe_radius: int
    max_relator_length: int
    distances: Tuple[int, ...]
    words: Tuple[Word, ...] = ()
    presentation: Optional[BranchedPresentation] = None

    @property
    def root(self) -> int:
        return 0

    def safe_vertices(self) -> List[int]:
        return [v for v in self.complex.vertices if self.distances[v] <= self.safe_radius]

    def is_safe_vertex(self, v: int) -> bool:
        return self.distances[v] <= self.safe_radius

    def face_distance(self, face_id: int) -> int:
        return min(self.distances[v] for v in self.complex.face_vertices(face_id))

    def safe_faces(self) -> List[int]:
        """Faces meeting the safe region"""
        return [f.id for f in self.complex.faces if self.face_distance(f.id) <= self.safe_radius]

    def graph(self) -> nx.MultiGraph:
        return self.complex.one_skeleton()

    def distance(self, u: int, v: int) -> int:
        return nx.shortest_path_length(self.graph(), u, v)

    def fragment(self, vertices: Iterable[int]) -> SubComplex:
        """Cells of the ball spanned by a vertex set"""
        chosen = frozenset(vertices)
        edges = frozenset(e.id for e in self.complex.edges
                          if e.tail in chosen and e.head in chosen)
        faces = frozenset(f.id for f in self.complex.faces
                          if set(f.edges()) <= edges)
        return SubComplex(self.complex, chosen, edges, faces)

    @classmethod
    def from_complex(cls, c: TwoComplex, root: Optional[int] = None) -> "CayleyBall":
        """A finite complex as its own cover; every cell is safe"""
        c = c.relabeled()
        root = 0 if root is None else root
        lengths = nx.single_source_shortest_path_length(c.one_skeleton(), root)
        distances = tuple(lengths.get(v, 0) for v in c.vertices)
        radius = max(distances, default=0)
        longest = max((f.perimeter for f in c.faces), default=0)
        return cls(c, radius, radius, longest, distances)

    def summary(self) -> Dict[str, Any]:
        return {
            'radius': self.radius,
            'safe_radius': self.safe_radius,
            'vertices': self.complex.num_vertices,
            'edges': self.complex.num_edges,
            'faces': self.complex.num_faces,
            'safe_vertices': len(self.safe_vertices()),
            'safe_faces': len(self.safe_faces()),
        }

    def to_dict(self) -> Dict[str, Any]:
        data = self.summary()
        data['complex'] = self.complex.to_dict()
        data['distances'] = list(self.distances)
        data['words'] = [list(w.codes) for w in self.words]
        return data


class _BallBuilder:
    """Breadth-first search with oracle-bucketed vertex identification"""

    def __init__(self, b: BranchedPresentation, radius: int, oracle: EqualityOracle):
        self.b = b
        self.radius = radius
        self.oracle = oracle
        self.words: List[Word] = [Word(())]
        self.distances: List[int] = [0]
        self.buckets: Dict[Any, List[int]] = {oracle.bucket(Word(())): [0]}
        self.out: Dict[Tuple[int, int], int] = {}
        self.incoming: Dict[Tuple[int, int], int] = {}

    def _find(self, w: Word) -> Optional[int]:
        for v in self.buckets.get(self.oracle.bucket(w), ()):
            if self.oracle.equal(w, self.words[v]):
                return v
        return None

    def _link(self, tail: int, generator: int, head: int) -> None:
        known = self.out.setdefault((tail, generator), head)
        self.incoming.setdefault((head, generator), tail)
        if known != head:
            raise OracleError(f"oracle gave two targets for generator {generator} at vertex {tail}")

    def run(self) -> None:
        queue = deque([0])
        rank = self.b.base.rank
        while queue:
            u = queue.popleft()
            for generator in range(rank):
                for sign in (1, -1):
                    if (u, generator) in (self.out if sign > 0 else self.incoming):
                        continue
                    code = sign * (generator + 1)
                    w = free_reduce(self.words[u] + Word((code,)))
                    v = self._find(w)
                    if v is None:
                        if self.distances[u] >= self.radius:
                            continue
                        v = len(self.words)
                        self.words.append(w)
                        self.distances.append(self.distances[u] + 1)
                        self.buckets.setdefault(self.oracle.bucket(w), []).append(v)
                        queue.append(v)
                    if sign > 0:
                        self._link(u, generator, v)
                    else:
                        self._link(v, generator, u)
        logger.debug("Ball of radius %d: %d vertices", self.radius, len(self.words))

    def edges(self) -> Tuple[Tuple[Edge, ...], Dict[Tuple[int, int], int]]:
        ids = {}
        edges = []
        for (tail, generator), head in sorted(self.out.items()):
            ids[(tail, generator)] = len(edges)
            edges.append(Edge(len(edges), tail, head, generator))
        return tuple(edges), ids

    def faces(self, edges: Tuple[Edge, ...], ids: Dict[Tuple[int, int], int]) -> Tuple[Face, ...]:
        incoming = {(e.head, e.label): e.tail for e in edges}
        seen = set()
        faces: List[Face] = []
        for index, relator in enumerate(self.b.relators):
            codes = relator.codes
            for start in range(len(self.words)):
                darts = []
                current = start
                for code in codes:
                    generator = code_generator(code)
                    if code > 0:
                        if (current, generator) not in ids:
                            break
                        darts.append(2 * ids[(current, generator)])
                        current = self.out[(current, generator)]
                    else:
                        if (current, generator) not in incoming:
                            break
                        previous = incoming[(current, generator)]
                        darts.append(2 * ids[(previous, generator)] + 1)
                        current = previous
                else:
                    if current != start:
                        raise OracleError(f"relator {index} does not close at vertex {start}")
                    key = canonical_cycle(darts)
                    if key in seen:
                        continue
                    seen.add(key)
                    faces.append(Face(len(faces), tuple(darts), relator=index,
                                      degree=self.b.exponents[index],
                                      base_length=self.b.base_length(index)))
        return tuple(faces)


def build_ball(b: BranchedPresentation, radius: int,
               oracle: Optional[EqualityOracle] = None, unsafe: bool = False) -> CayleyBall:
    """Radius-R ball of the cover with one face per relator-power cycle"""
    oracle = oracle or choose_oracle(b.derived, b, unsafe)
    builder = _BallBuilder(b, radius, oracle)
    builder.run()
    edges, ids = builder.edges()
    faces = builder.faces(edges, ids)
    complex_ = TwoComplex(tuple(range(len(builder.words))), edges, faces)
    longest = max((b.derived_length(i) for i in range(len(b.exponents))), default=0)
    ball = CayleyBall(complex_, radius, safe_radius_for(b, radius), longest,
                      tuple(builder.distances), tuple(builder.words), b)
    logger.info("Built ball R=%d with %d vertices, %d edges, %d faces (oracle %s)",
                radius, complex_.num_vertices, complex_.num_edges, complex_.num_faces, oracle.name)
    return ball
