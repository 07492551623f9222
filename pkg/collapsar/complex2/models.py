#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Combinatorial 2-complexes

Edges carry two darts: ``2 * edge_id`` runs tail -> head and
``2 * edge_id + 1`` runs head -> tail, so reversal is ``dart ^ 1``.
Faces store their attaching path as a closed dart sequence; an edge may be
traversed several times by the same face.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from ..errors import PreconditionError

INFINITY = float("inf")


def reverse_dart(dart: int) -> int:
    return dart ^ 1


def dart_edge(dart: int) -> int:
    return dart >> 1


def is_forward(dart: int) -> bool:
    return dart & 1 == 0


def canonical_cycle(darts: Sequence[int], with_reflection: bool = True) -> Tuple[int, ...]:
    """Least rotation of a dart cycle, optionally also over its reversal"""
    darts = tuple(darts)
    if not darts:
        return ()
    candidates = [darts]
    if with_reflection:
        candidates.append(tuple(reverse_dart(d) for d in reversed(darts)))
    best = None
    for cycle in candidates:
        for i in range(len(cycle)):
            rotated = cycle[i:] + cycle[:i]
            if best is None or rotated < best:
                best = rotated
    return best


@dataclass(frozen=True)
class Edge:
    """Oriented 1-cell; label is a generator id or -1 when unlabeled"""
    id: int
    tail: int
    head: int
    label: int = -1

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def to_dict(self) -> Dict[str, Any]:
        return {'id': self.id, 'tail': self.tail, 'head': self.head, 'label': self.label}


@dataclass(frozen=True)
class Face:
    """2-cell attached along a closed dart path"""
    id: int
    darts: Tuple[int, ...]
    relator: int = -1
    degree: int = 1
    base_length: int = 0

    @property
    def perimeter(self) -> int:
        return len(self.darts)

    @property
    def period(self) -> int:
        """Length of the base word w when the boundary reads w^degree"""
        return self.base_length or len(self.darts)

    def edges(self) -> List[int]:
        return [dart_edge(d) for d in self.darts]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'darts': list(self.darts),
            'relator': self.relator,
            'degree': self.degree,
            'base_length': self.period,
        }


@dataclass(frozen=True)
class TwoComplex:
    """Vertices, edges and faces; immutable after construction"""
    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...] = ()
    faces: Tuple[Face, ...] = ()
    _edge_index: Dict[int, Edge] = field(init=False, repr=False, compare=False, hash=False)
    _face_index: Dict[int, Face] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        edge_index = {}
        for edge in self.edges:
            if edge.id in edge_index:
                raise ValueError(f"duplicate edge id {edge.id}")
            if edge.tail not in vertex_set or edge.head not in vertex_set:
                raise ValueError(f"edge {edge.id} has an endpoint outside the vertex set")
            edge_index[edge.id] = edge
        face_index = {}
        for face in self.faces:
            if face.id in face_index:
                raise ValueError(f"duplicate face id {face.id}")
            if not face.darts:
                raise ValueError(f"face {face.id} has an empty attaching path")
            for d in face.darts:
                if dart_edge(d) not in edge_index:
                    raise ValueError(f"face {face.id} uses missing edge {dart_edge(d)}")
            face_index[face.id] = face
        object.__setattr__(self, '_edge_index', edge_index)
        object.__setattr__(self, '_face_index', face_index)
        for face in self.faces:
            darts = face.darts
            for i, d in enumerate(darts):
                if self.dart_head(d) != self.dart_tail(darts[(i + 1) % len(darts)]):
                    raise ValueError(f"attaching path of face {face.id} is not closed")

    # -- cells -------------------------------------------------------------

    def edge(self, edge_id: int) -> Edge:
        return self._edge_index[edge_id]

    def face(self, face_id: int) -> Face:
        return self._face_index[face_id]

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edge_index

    def has_face(self, face_id: int) -> bool:
        return face_id in self._face_index

    def dart_tail(self, dart: int) -> int:
        edge = self._edge_index[dart_edge(dart)]
        return edge.tail if is_forward(dart) else edge.head

    def dart_head(self, dart: int) -> int:
        edge = self._edge_index[dart_edge(dart)]
        return edge.head if is_forward(dart) else edge.tail

    def dart_label(self, dart: int) -> int:
        """Signed generator code read along the dart, 0 when unlabeled"""
        edge = self._edge_index[dart_edge(dart)]
        if edge.label < 0:
            return 0
        return edge.label + 1 if is_forward(dart) else -(edge.label + 1)

    def darts(self) -> List[int]:
        return [2 * e.id + s for e in self.edges for s in (0, 1)]

    def face_word(self, face_id: int) -> Tuple[int, ...]:
        return tuple(self.dart_label(d) for d in self.face(face_id).darts)

    def face_vertices(self, face_id: int) -> List[int]:
        return [self.dart_tail(d) for d in self.face(face_id).darts]

    # -- counts ------------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def is_graph(self) -> bool:
        return not self.faces

    def edge_traversals(self) -> Counter:
        """Edge id -> number of traversals by all attaching paths"""
        counts: Counter = Counter()
        for face in self.faces:
            counts.update(dart_edge(d) for d in face.darts)
        return counts

    def vertex_valence(self, vertex: int) -> int:
        """Number of edge ends at the vertex; a loop contributes two"""
        return sum((e.tail == vertex) + (e.head == vertex) for e in self.edges)

    # -- structure ---------------------------------------------------------

    def one_skeleton(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.id, label=edge.label)
        return graph

    def connected_components(self) -> List[FrozenSet[int]]:
        """Vertex sets of connected components, sorted by least vertex"""
        components = [frozenset(c) for c in nx.connected_components(self.one_skeleton())]
        return sorted(components, key=min)

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def without(self, vertices: Iterable[int] = (), edges: Iterable[int] = (),
                faces: Iterable[int] = ()) -> "TwoComplex":
        """Complex with the given cells removed; caller keeps closure valid"""
        vs, es, fs = set(vertices), set(edges), set(faces)
        return TwoComplex(
            tuple(v for v in self.vertices if v not in vs),
            tuple(e for e in self.edges if e.id not in es),
            tuple(f for f in self.faces if f.id not in fs),
        )

    def relabeled(self) -> "TwoComplex":
        """Copy with dense vertex, edge and face ids in current order"""
        vmap = {v: i for i, v in enumerate(self.vertices)}
        emap = {e.id: i for i, e in enumerate(self.edges)}
        edges = tuple(Edge(emap[e.id], vmap[e.tail], vmap[e.head], e.label) for e in self.edges)
        faces = tuple(
            Face(i, tuple(2 * emap[dart_edge(d)] + (d & 1) for d in f.darts),
                 f.relator, f.degree, f.base_length)
            for i, f in enumerate(self.faces)
        )
        return TwoComplex(tuple(range(len(self.vertices))), edges, faces)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            'vertices': list(self.vertices),
            'edges': [e.to_dict() for e in self.edges],
            'faces': [f.to_dict() for f in self.faces],
            'euler_characteristic': self.euler_characteristic(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TwoComplex":
        """Create from dictionary"""
        edges = tuple(Edge(int(e['id']), int(e['tail']), int(e['head']), int(e.get('label', -1)))
                      for e in data.get('edges', []))
        faces = tuple(
            Face(int(f['id']), tuple(int(d) for d in f['darts']), int(f.get('relator', -1)),
                 int(f.get('degree', 1)), int(f.get('base_length', 0)))
            for f in data.get('faces', [])
        )
        return cls(tuple(int(v) for v in data['vertices']), edges, faces)


@dataclass(frozen=True)
class LinkArc:
    """Corner of a face at a vertex, joining two incoming darts"""
    first: int
    second: int
    face: int
    position: int


@dataclass(frozen=True)
class LinkGraph:
    """Link of a vertex: incoming darts joined by face corners"""
    vertex: int
    nodes: Tuple[int, ...]
    arcs: Tuple[LinkArc, ...]

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.nodes)
        for index, arc in enumerate(self.arcs):
            graph.add_edge(arc.first, arc.second, key=index, face=arc.face)
        return graph

    def girth(self) -> float:
        return girth(self)


def link(c: TwoComplex, v: int) -> LinkGraph:
    """Link graph of c at v"""
    if v not in c.vertices:
        raise PreconditionError(f"vertex {v} is not in the complex")
    nodes = tuple(d for d in c.darts() if c.dart_head(d) == v)
    arcs = []
    for face in c.faces:
        darts = face.darts
        for i, d in enumerate(darts):
            if c.dart_head(d) != v:
                continue
            nxt = darts[(i + 1) % len(darts)]
            arcs.append(LinkArc(d, reverse_dart(nxt), face.id, i))
    return LinkGraph(v, nodes, tuple(arcs))


def multigraph_girth(nodes: Iterable[Any], arcs: Sequence[Tuple[Any, Any]]) -> float:
    """Shortest cycle length of a multigraph given as an arc list; loops count 1"""
    adjacency: Dict[Any, List[Tuple[Any, int]]] = {n: [] for n in nodes}
    best = INFINITY
    for index, (u, w) in enumerate(arcs):
        if u == w:
            return 1
        adjacency.setdefault(u, []).append((w, index))
        adjacency.setdefault(w, []).append((u, index))
    for root in adjacency:
        dist = {root: 0}
        parent_arc = {root: -1}
        queue = [root]
        for u in queue:
            if 2 * dist[u] + 1 >= best:
                break
            for w, index in adjacency[u]:
                if index == parent_arc[u]:
                    continue
                if w in dist:
                    best = min(best, dist[u] + dist[w] + 1)
                else:
                    dist[w] = dist[u] + 1
                    parent_arc[w] = index
                    queue.append(w)
    return best


def girth(g: LinkGraph) -> float:
    """Shortest cycle in the link, infinity for a forest"""
    return multigraph_girth(g.nodes, [(a.first, a.second) for a in g.arcs])


@dataclass(frozen=True)
class SubComplex:
    """Subset of cells of a parent complex, closed under taking boundaries"""
    parent: TwoComplex
    vertices: FrozenSet[int]
    edges: FrozenSet[int]
    faces: FrozenSet[int] = frozenset()

    def __post_init__(self):
        for eid in self.edges:
            edge = self.parent.edge(eid)
            if edge.tail not in self.vertices or edge.head not in self.vertices:
                raise ValueError(f"subcomplex not closed: edge {eid} without its endpoints")
        for fid in self.faces:
            missing = set(self.parent.face(fid).edges()) - self.edges
            if missing:
                raise ValueError(f"subcomplex not closed: face {fid} without edges {sorted(missing)}")

    def as_complex(self) -> TwoComplex:
        return TwoComplex(
            tuple(sorted(self.vertices)),
            tuple(self.parent.edge(e) for e in sorted(self.edges)),
            tuple(self.parent.face(f) for f in sorted(self.faces)),
        )

    def is_empty(self) -> bool:
        return not self.vertices

    def is_connected(self) -> bool:
        return len(self.as_complex().connected_components()) <= 1

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'vertices': sorted(self.vertices),
            'edges': sorted(self.edges),
            'faces': sorted(self.faces),
        }


def face_boundary(c: TwoComplex, face_id: int) -> SubComplex:
    """Closure of the attaching path of a face, without the face itself"""
    face = c.face(face_id)
    edges = frozenset(face.edges())
    vertices = frozenset(v for e in edges for v in (c.edge(e).tail, c.edge(e).head))
    return SubComplex(c, vertices, edges)


def closure_of_faces(c: TwoComplex, face_ids: Iterable[int]) -> SubComplex:
    faces = frozenset(face_ids)
    edges = frozenset(e for f in faces for e in c.face(f).edges())
    vertices = frozenset(v for e in edges for v in (c.edge(e).tail, c.edge(e).head))
    return SubComplex(c, vertices, edges, faces)


def closure_of_cells(c: TwoComplex, vertices: Iterable[int] = (), edges: Iterable[int] = (),
                     faces: Iterable[int] = ()) -> SubComplex:
    base = closure_of_faces(c, faces)
    edge_set = set(base.edges) | set(edges)
    vertex_set = set(base.vertices) | set(vertices)
    for e in edge_set:
        vertex_set.update((c.edge(e).tail, c.edge(e).head))
    return SubComplex(c, frozenset(vertex_set), frozenset(edge_set), base.faces)


@dataclass(frozen=True)
class BoundaryIntersection:
    """Intersection of two face boundaries"""
    subcomplex: SubComplex
    connected: bool
    euler_characteristics: Tuple[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'intersection': self.subcomplex.to_dict(),
            'connected': self.connected,
            'boundary_euler_characteristics': list(self.euler_characteristics),
        }


def boundary_intersection(c: TwoComplex, f1: int, f2: int) -> BoundaryIntersection:
    """The subcomplex boundary(f1) & boundary(f2) and whether it is connected"""
    if f1 == f2:
        raise PreconditionError("boundary_intersection needs two distinct faces")
    b1, b2 = face_boundary(c, f1), face_boundary(c, f2)
    shared = SubComplex(c, b1.vertices & b2.vertices, b1.edges & b2.edges)
    connected = shared.is_empty() or shared.is_connected()
    return BoundaryIntersection(
        shared, connected, (b1.euler_characteristic(), b2.euler_characteristic()))


def euler_characteristic(c: TwoComplex) -> int:
    return c.euler_characteristic()


def quotient_duplicates(c: TwoComplex) -> TwoComplex:
    """Merge faces whose attaching cycles agree up to rotation and reflection"""
    seen = set()
    kept = []
    for face in c.faces:
        key = canonical_cycle(face.darts)
        if key in seen:
            continue
        seen.add(key)
        kept.append(face)
    if len(kept) == len(c.faces):
        return c
    return TwoComplex(c.vertices, c.edges, tuple(kept))

