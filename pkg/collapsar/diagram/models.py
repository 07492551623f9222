#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Disk and spherical diagrams as labeled combinatorial maps

Darts come in pairs ``(2e, 2e + 1)``; ``labels[d ^ 1] == -labels[d]``.
Inner faces list their darts in cyclic order. The boundary path lists the
darts of inner cells met while walking around the outside with the diagram
on the left; the outer face cycle is its reversal, dart by dart reversed.
"""
import functools
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..complex2 import Edge, Face, TwoComplex
from ..errors import PreconditionError
from ..words import Presentation, Word, code_generator


@dataclass(frozen=True)
class DiagramFace:
    """Inner face reading rotation `offset` of relator^orientation"""
    relator: int
    orientation: int
    offset: int
    darts: Tuple[int, ...]

    @property
    def perimeter(self) -> int:
        return len(self.darts)

    def mirrored(self) -> "DiagramFace":
        darts = tuple(d ^ 1 for d in reversed(self.darts))
        length = len(self.darts)
        return DiagramFace(self.relator, -self.orientation, (length - self.offset) % length, darts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'relator': self.relator,
            'orientation': self.orientation,
            'offset': self.offset,
            'darts': list(self.darts),
        }


def relator_rotation(p: Presentation, relator: int, orientation: int, offset: int) -> Tuple[int, ...]:
    word = p.relators[relator].representative
    codes = word.codes if orientation > 0 else word.inverse().codes
    offset %= len(codes)
    return codes[offset:] + codes[:offset]


def _cycles(permutation: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(permutation)
    cycles = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycle = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = permutation[d]
        cycles.append(cycle)
    return cycles


class PlanarMapMixin:
    """Shared dart bookkeeping for disk and spherical diagrams"""

    labels: Tuple[int, ...]
    faces: Tuple[DiagramFace, ...]

    @property
    def num_darts(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.labels) // 2

    @property
    def area(self) -> int:
        return len(self.faces)

    def _phi(self) -> List[int]:
        raise NotImplementedError

    @functools.cached_property
    def phi(self) -> Tuple[int, ...]:
        return tuple(self._phi())

    @functools.cached_property
    def vertex_of(self) -> Tuple[int, ...]:
        """Tail vertex id of every dart; vertices are the cycles of phi after reversal"""
        sigma = [self.phi[d ^ 1] for d in range(self.num_darts)]
        tails = [0] * self.num_darts
        for index, cycle in enumerate(_cycles(sigma)):
            for d in cycle:
                tails[d] = index
        return tuple(tails)

    @property
    def num_vertices(self) -> int:
        if not self.labels:
            return 1
        return len(set(self.vertex_of))

    def tail(self, dart: int) -> int:
        return self.vertex_of[dart]

    def head(self, dart: int) -> int:
        return self.vertex_of[dart ^ 1]

    def vertex_degree(self, vertex: int) -> int:
        return sum(1 for v in self.vertex_of if v == vertex)

    @functools.cached_property
    def face_of(self) -> Dict[int, int]:
        """Dart -> inner face index"""
        owner = {}
        for index, face in enumerate(self.faces):
            for d in face.darts:
                owner[d] = index
        return owner

    def face_vertices(self, index: int) -> List[int]:
        return [self.tail(d) for d in self.faces[index].darts]

    def face_edges(self, index: int) -> List[int]:
        return [d >> 1 for d in self.faces[index].darts]

    @property
    def tree_edges(self) -> int:
        """Edges lying on no face"""
        return self.num_edges - len({d >> 1 for f in self.faces for d in f.darts})

    def word_of(self, darts: Sequence[int]) -> Word:
        return Word(tuple(self.labels[d] for d in darts))

    def to_complex(self) -> TwoComplex:
        """Underlying 2-complex with edges oriented along positive labels"""
        flip = [self.labels[2 * e] < 0 for e in range(self.num_edges)]
        vertices = tuple(sorted(set(self.vertex_of))) if self.labels else (0,)
        edges = []
        for e in range(self.num_edges):
            forward = 2 * e + 1 if flip[e] else 2 * e
            edges.append(Edge(e, self.tail(forward), self.head(forward),
                              code_generator(self.labels[forward])))
        faces = []
        for index, face in enumerate(self.faces):
            darts = tuple(d ^ 1 if flip[d >> 1] else d for d in face.darts)
            faces.append(Face(index, darts, relator=face.relator))
        return TwoComplex(vertices, tuple(edges), tuple(faces))

    def validate_labels(self, p: Presentation) -> None:
        """Each face reads its declared relator rotation"""
        for index, face in enumerate(self.faces):
            expected = relator_rotation(p, face.relator, face.orientation, face.offset)
            if tuple(self.labels[d] for d in face.darts) != expected:
                raise PreconditionError(f"face {index} does not read its relator")


@dataclass(frozen=True)
class DiskDiagram(PlanarMapMixin):
    """Planar contractible diagram with a boundary path"""
    labels: Tuple[int, ...] = ()
    faces: Tuple[DiagramFace, ...] = ()
    boundary: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.labels) % 2:
            raise ValueError("dart count must be even")
        for e in range(len(self.labels) // 2):
            if self.labels[2 * e] != -self.labels[2 * e + 1] or self.labels[2 * e] == 0:
                raise ValueError(f"edge {e} has inconsistent labels")
        used = [d for f in self.faces for d in f.darts] + [d ^ 1 for d in self.boundary]
        if sorted(used) != list(range(len(self.labels))):
            raise ValueError("every dart must lie on exactly one face or the outer face")
        if self.labels and self.num_vertices - self.num_edges + self.area != 1:
            raise ValueError("diagram is not contractible (V - E + F != 1)")

    def _phi(self) -> List[int]:
        phi = [0] * len(self.labels)
        for face in self.faces:
            darts = face.darts
            for i, d in enumerate(darts):
                phi[d] = darts[(i + 1) % len(darts)]
        b = self.boundary
        for i in range(len(b)):
            phi[b[(i + 1) % len(b)] ^ 1] = b[i] ^ 1
        return phi

    @property
    def boundary_length(self) -> int:
        return len(self.boundary)

    def boundary_word(self) -> Word:
        return self.word_of(self.boundary)

    @functools.cached_property
    def boundary_positions(self) -> Dict[int, int]:
        return {d: i for i, d in enumerate(self.boundary)}

    def is_single_cell(self) -> bool:
        """A single 0-cell, 1-cell or 2-cell"""
        if not self.labels:
            return True
        if not self.faces:
            return self.num_edges == 1
        return self.area == 1 and len(self.boundary) == self.faces[0].perimeter

    # -- growth ------------------------------------------------------------

    def glue_face(self, position: int, arc_length: int, word: Sequence[int],
                  relator: int = -1, orientation: int = 1, offset: int = 0) -> "DiskDiagram":
        """Attach a face outside the boundary arc starting at `position`

        The face reads `word`; its first `arc_length` letters run backwards
        along the arc, the rest are new edges. arc_length 0 glues at the
        corner before boundary dart `position`.
        """
        word = tuple(word)
        n = len(self.boundary)
        if not 0 <= arc_length < len(word) or arc_length > n:
            raise PreconditionError(f"arc length {arc_length} invalid for word of length {len(word)}")
        rotated = self.boundary[position % n:] + self.boundary[:position % n] if n else ()
        arc = rotated[:arc_length]
        for j in range(arc_length):
            if word[j] != -self.labels[arc[arc_length - 1 - j]]:
                raise PreconditionError("face word does not match the boundary arc")
        base = len(self.labels) // 2
        fresh = len(word) - arc_length
        labels = list(self.labels)
        new_darts = []
        for m in range(fresh):
            code = word[arc_length + m]
            labels.extend((code, -code))
            new_darts.append(2 * (base + m))
        face_darts = tuple(d ^ 1 for d in reversed(arc)) + tuple(new_darts)
        face = DiagramFace(relator, orientation, offset, face_darts)
        boundary = tuple(new_darts) + rotated[arc_length:]
        return DiskDiagram(tuple(labels), self.faces + (face,), boundary)

    def attach_spur(self, position: int, code: int) -> "DiskDiagram":
        """Hang a new edge labeled `code` at the corner before boundary dart `position`"""
        n = len(self.boundary)
        rotated = self.boundary[position % n:] + self.boundary[:position % n] if n else ()
        dart = len(self.labels)
        labels = self.labels + (code, -code)
        return DiskDiagram(labels, self.faces, (dart, dart ^ 1) + rotated)

    def mirror(self) -> "DiskDiagram":
        faces = tuple(f.mirrored() for f in self.faces)
        boundary = tuple(d ^ 1 for d in reversed(self.boundary))
        return DiskDiagram(self.labels, faces, boundary)

    # -- canonical form ----------------------------------------------------

    def _rooted_code(self, root: int) -> Tuple:
        order = {root: 0}
        queue = [root]
        phi = self.phi
        for d in queue:
            for nxt in (phi[d], d ^ 1):
                if nxt not in order:
                    order[nxt] = len(order)
                    queue.append(nxt)
        owner = self.face_of
        return tuple(
            (order[phi[d]], order[d ^ 1], self.labels[d],
             self.faces[owner[d]].relator if d in owner else -1)
            for d in queue
        )

    @functools.cached_property
    def canonical_code(self) -> Tuple:
        """Least rooted code over boundary roots of the diagram and its mirror"""
        if not self.labels:
            return ()
        codes = [self._rooted_code(r) for r in self.boundary]
        mirror = self.mirror()
        codes.extend(mirror._rooted_code(r) for r in mirror.boundary)
        return min(codes)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            'labels': list(self.labels),
            'faces': [f.to_dict() for f in self.faces],
            'boundary': list(self.boundary),
            'area': self.area,
            'vertices': self.num_vertices,
            'edges': self.num_edges,
        }


TRIVIAL_DIAGRAM = DiskDiagram()


def single_face_diagram(word: Sequence[int], relator: int = -1, orientation: int = 1,
                        offset: int = 0) -> DiskDiagram:
    return TRIVIAL_DIAGRAM.glue_face(0, 0, word, relator, orientation, offset)


class DiagramBuilder:
    """Grow a disk diagram from relator rotations of a presentation"""

    def __init__(self, p: Presentation):
        self.presentation = p
        self.diagram = TRIVIAL_DIAGRAM

    def face(self, relator: int, orientation: int = 1, offset: int = 0,
             position: int = 0, arc_length: int = 0) -> "DiagramBuilder":
        word = relator_rotation(self.presentation, relator, orientation, offset)
        self.diagram = self.diagram.glue_face(position, arc_length, word, relator, orientation, offset)
        return self

    def spur(self, code: int, position: int = 0) -> "DiagramBuilder":
        self.diagram = self.diagram.attach_spur(position, code)
        return self

    def build(self) -> DiskDiagram:
        return self.diagram


@dataclass(frozen=True)
class SphericalDiagram(PlanarMapMixin):
    """Closed planar map: faces only, every edge in two face corners"""
    labels: Tuple[int, ...]
    faces: Tuple[DiagramFace, ...]

    def __post_init__(self):
        used = sorted(d for f in self.faces for d in f.darts)
        if used != list(range(len(self.labels))):
            raise ValueError("every dart must lie on exactly one face")
        if self.num_vertices - self.num_edges + self.area != 2:
            raise ValueError("map is not a sphere (V - E + F != 2)")

    def _phi(self) -> List[int]:
        phi = [0] * len(self.labels)
        for face in self.faces:
            for i, d in enumerate(face.darts):
                phi[d] = face.darts[(i + 1) % len(face.darts)]
        return phi

    def to_dict(self) -> Dict[str, Any]:
        return {
            'labels': list(self.labels),
            'faces': [f.to_dict() for f in self.faces],
            'area': self.area,
            'vertices': self.num_vertices,
            'edges': self.num_edges,
        }


def cancellable_across(d: PlanarMapMixin, dart: int) -> Optional[Tuple[int, int]]:
    """Faces on both sides of dart's edge when they form a cancellable pair"""
    owner = d.face_of
    other = dart ^ 1
    if dart not in owner or other not in owner:
        return None
    f, g = owner[dart], owner[other]
    if f == g:
        return None
    fd, gd = d.faces[f].darts, d.faces[g].darts
    if len(fd) != len(gd):
        return None
    i, j = fd.index(dart), gd.index(other)
    forward = [d.labels[fd[(i + k) % len(fd)]] for k in range(len(fd))]
    mirrored = [-d.labels[gd[(j - k) % len(gd)]] for k in range(len(gd))]
    return (min(f, g), max(f, g)) if forward == mirrored else None
