#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Spurs, shells and cutcells of disk diagrams, and the audits built on them
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from ..errors import MixedPerimeterError, PreconditionError
from .models import DiskDiagram, cancellable_across

logger = logging.getLogger(__name__)

Degrees = Union[Sequence[int], Mapping[int, int]]


class RoleKind(Enum):
    SPUR = "spur"
    SHELL = "shell"
    CUTCELL = "cutcell"


class ShellMode(Enum):
    """DISK: Q lies on the boundary. COMPLEX: Q's interior meets no other cell"""
    DISK = "disk"
    COMPLEX = "complex"


@dataclass(frozen=True)
class CellRole:
    """Role of one cell; `cell` is a vertex for spurs and a face index otherwise"""
    kind: RoleKind
    cell: int
    outer_length: int = 0
    inner_length: int = 0
    lobes: int = 0

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'kind': self.kind.value, 'cell': self.cell}
        if self.kind == RoleKind.SHELL:
            data['outer_length'] = self.outer_length
            data['inner_length'] = self.inner_length
        elif self.kind == RoleKind.CUTCELL:
            data['lobes'] = self.lobes
        return data


@dataclass
class CellClassification:
    """Roles of every cell plus counts over distinct cells"""
    roles: List[CellRole] = field(default_factory=list)
    trivial: bool = False
    mode: ShellMode = ShellMode.DISK

    def of_kind(self, kind: RoleKind) -> List[CellRole]:
        return [r for r in self.roles if r.kind == kind]

    @property
    def spurs(self) -> List[CellRole]:
        return self.of_kind(RoleKind.SPUR)

    @property
    def shells(self) -> List[CellRole]:
        return self.of_kind(RoleKind.SHELL)

    @property
    def cutcells(self) -> List[CellRole]:
        return self.of_kind(RoleKind.CUTCELL)

    @property
    def count(self) -> int:
        """Distinct cells carrying at least one role"""
        return len({('v' if r.kind == RoleKind.SPUR else 'f', r.cell) for r in self.roles})

    def to_dict(self) -> Dict[str, Any]:
        return {
            'trivial': self.trivial,
            'mode': self.mode.value,
            'roles': [r.to_dict() for r in self.roles],
            'spurs': len(self.spurs),
            'shells': len(self.shells),
            'cutcells': len(self.cutcells),
            'count': self.count,
        }


def _longest_outer_run(d: DiskDiagram, index: int, mode: ShellMode) -> int:
    """Longest cyclic run of face darts read consecutively along the boundary path"""
    darts = d.faces[index].darts
    length = len(darts)
    positions = d.boundary_positions
    n = len(d.boundary)
    linked = []
    for i in range(length):
        here, nxt = darts[i], darts[(i + 1) % length]
        ok = here in positions and nxt in positions and d.boundary[(positions[here] + 1) % n] == nxt
        if ok and mode == ShellMode.COMPLEX:
            ok = d.vertex_degree(d.head(here)) == 2
        linked.append(ok)
    if all(linked):
        return length
    best = 0
    for start in range(length):
        if darts[start] not in positions or linked[start - 1]:
            continue
        run = 1
        while run < length and linked[(start + run - 1) % length]:
            run += 1
        best = max(best, run)
    return best


def _lobes(d: DiskDiagram, index: int) -> int:
    """Components of the open cells outside the closed face"""
    face_vertices = set(d.face_vertices(index))
    face_edges = set(d.face_edges(index))
    graph = nx.Graph()
    for v in set(d.vertex_of):
        if v not in face_vertices:
            graph.add_node(('v', v))
    for e in range(d.num_edges):
        if e in face_edges:
            continue
        graph.add_node(('e', e))
        for v in (d.tail(2 * e), d.head(2 * e)):
            if v not in face_vertices:
                graph.add_edge(('e', e), ('v', v))
    for other in range(d.area):
        if other == index:
            continue
        graph.add_node(('f', other))
        for e in d.face_edges(other):
            if e not in face_edges:
                graph.add_edge(('f', other), ('e', e))
        for v in d.face_vertices(other):
            if v not in face_vertices:
                graph.add_edge(('f', other), ('v', v))
    if graph.number_of_nodes() == 0:
        return 0
    return nx.number_connected_components(graph)


def classify_cells(d: DiskDiagram, mode: ShellMode = ShellMode.DISK) -> CellClassification:
    """Spurs, shells and cutcells of d"""
    result = CellClassification(mode=mode)
    if d.is_single_cell():
        result.trivial = True
        return result
    for v in sorted(set(d.vertex_of)):
        if d.vertex_degree(v) == 1:
            result.roles.append(CellRole(RoleKind.SPUR, v))
    for index, face in enumerate(d.faces):
        outer = _longest_outer_run(d, index, mode)
        inner = face.perimeter - outer
        if outer > inner:
            result.roles.append(CellRole(RoleKind.SHELL, index, outer, inner))
        lobes = _lobes(d, index)
        if lobes > 1:
            result.roles.append(CellRole(RoleKind.CUTCELL, index, lobes=lobes))
    return result


def cancellable_pairs(d: DiskDiagram) -> List[Tuple[int, int, int]]:
    """(face, face, edge) for every cancellable pair"""
    found = []
    for e in range(d.num_edges):
        pair = cancellable_across(d, 2 * e)
        if pair is not None:
            found.append((pair[0], pair[1], e))
    return found


def is_reduced(d: DiskDiagram) -> bool:
    return not cancellable_pairs(d)


def check_generalized_dehn(d: DiskDiagram, strong: bool = False,
                           mode: ShellMode = ShellMode.DISK) -> bool:
    """At least one (two when strong) spurs, shells or cutcells"""
    classification = classify_cells(d, mode)
    if classification.trivial:
        return True
    return classification.count >= (2 if strong else 1)


def check_dehn_property(d: DiskDiagram, mode: ShellMode = ShellMode.DISK) -> bool:
    """A single 0-cell or 2-cell, or a spur, or a shell"""
    if d.is_single_cell():
        return True
    classification = classify_cells(d, mode)
    return bool(classification.spurs or classification.shells)


def area_bound_check(d: DiskDiagram, r: int) -> bool:
    """Area(d) <= |boundary| + 1 - r for faces of uniform perimeter r"""
    if d.area == 0:
        raise PreconditionError("area bound needs at least one face")
    perimeters = {f.perimeter for f in d.faces}
    if perimeters != {r}:
        raise MixedPerimeterError(f"face perimeters {sorted(perimeters)} differ from {r}")
    return d.area <= d.boundary_length + 1 - r


def tiny_innerpath_shells(d: DiskDiagram, degrees: Degrees,
                          mode: ShellMode = ShellMode.DISK) -> List[CellRole]:
    """Shells with |S| * n < |boundary of R|"""
    shells = classify_cells(d, mode).shells
    return [
        s for s in shells
        if s.inner_length * degrees[s.cell] < d.faces[s.cell].perimeter
    ]


def _closed_cells(d: DiskDiagram) -> List[Set[int]]:
    """Vertex sets of faces and of edges outside every face"""
    in_faces = {e for i in range(d.area) for e in d.face_edges(i)}
    cells = [set(d.face_vertices(i)) for i in range(d.area)]
    for e in range(d.num_edges):
        if e not in in_faces:
            cells.append({d.tail(2 * e), d.head(2 * e)})
    return cells


def is_ladder(d: DiskDiagram) -> bool:
    """Closed cells C_1..C_n, n >= 2, with C_i meeting C_j only when |i - j| <= 1"""
    cells = _closed_cells(d)
    if len(cells) < 2:
        return False
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cells)))
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            if cells[i] & cells[j]:
                graph.add_edge(i, j)
    if not nx.is_connected(graph):
        return False
    if graph.number_of_edges() != len(cells) - 1:
        return False
    return max(dict(graph.degree()).values()) <= 2


def check_ladder_or_tiny_shells(d: DiskDiagram, degrees: Degrees,
                                mode: ShellMode = ShellMode.DISK) -> bool:
    """Single 0-cell or 2-cell, a ladder, or three tiny shells and spurs"""
    if d.is_single_cell():
        return True
    if is_ladder(d):
        return True
    classification = classify_cells(d, mode)
    tiny = tiny_innerpath_shells(d, degrees, mode)
    total = len(tiny) + len(classification.spurs)
    if total < 3:
        logger.debug("Diagram of area %d has %d tiny shells and spurs", d.area, total)
    return total >= 3


def uniform_degrees(d: DiskDiagram, exponents: Optional[Sequence[int]] = None) -> List[int]:
    """Per-face degree read from the relator exponents, 1 when absent"""
    if exponents is None:
        return [1] * d.area
    return [exponents[f.relator] if f.relator >= 0 else 1 for f in d.faces]
