#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Bounded enumeration of reduced disk diagrams

Diagrams grow one cell at a time from a single vertex: either a relator
rotation is glued outside a boundary arc (or at a corner), or a new edge is
hung at a corner. A face glued at the far end of such an edge gives a
bridge. Faces are kept when they form no cancellable pair. Isomorphic
diagrams are merged on their canonical code.

Edges on no face (spurs, bridges and whole trees) are bounded separately
from the area, since without faces every tree is a diagram.
"""
import logging
from typing import Dict, Iterator, List, Optional, Tuple

from ..errors import PreconditionError
from ..parallel import ordered_map
from ..words import Presentation
from .models import TRIVIAL_DIAGRAM, DiskDiagram, cancellable_across, relator_rotation

logger = logging.getLogger(__name__)

DEFAULT_AREA_LIMIT = 6
DEFAULT_TREE_EDGES = 1

FaceWord = Tuple[int, int, int, Tuple[int, ...]]


def face_words(p: Presentation) -> List[FaceWord]:
    """(relator, orientation, offset, codes) for each distinct rotation of R and R^-1"""
    words: List[FaceWord] = []
    seen = set()
    for index, relator in enumerate(p.relators):
        for orientation in (1, -1):
            for offset in range(len(relator)):
                codes = relator_rotation(p, index, orientation, offset)
                if (index, codes) in seen:
                    continue
                seen.add((index, codes))
                words.append((index, orientation, offset, codes))
    return words


def _glued_faces(d: DiskDiagram, words: List[FaceWord]) -> List[DiskDiagram]:
    n = len(d.boundary)
    grown = []
    for position in range(max(n, 1)):
        for relator, orientation, offset, codes in words:
            for k in range(0, min(n, len(codes) - 1) + 1):
                arc = [d.boundary[(position + j) % n] for j in range(k)]
                if any(codes[j] != -d.labels[arc[k - 1 - j]] for j in range(k)):
                    continue
                candidate = d.glue_face(position, k, codes, relator, orientation, offset)
                new_face = candidate.faces[-1]
                if any(cancellable_across(candidate, dart) for dart in new_face.darts[:k]):
                    continue
                grown.append(candidate)
    return grown


def _hung_edges(d: DiskDiagram, letters: List[int]) -> List[DiskDiagram]:
    return [d.attach_spur(position, code)
            for position in range(max(len(d.boundary), 1))
            for code in letters]


def enumerate_reduced_disks(p: Presentation, max_area: int,
                            include_trivial: bool = False,
                            area_limit: int = DEFAULT_AREA_LIMIT,
                            threads: Optional[int] = None,
                            max_tree_edges: int = DEFAULT_TREE_EDGES) -> Iterator[DiskDiagram]:
    """Reduced diagrams with at most max_area faces and max_tree_edges edges on no face

    Ordered by area, then tree edges, then canonical code. The single vertex
    is only yielded with include_trivial.
    """
    if max_area > area_limit:
        raise PreconditionError(f"max area {max_area} exceeds the limit {area_limit}")
    if max_tree_edges < 0:
        raise PreconditionError("max_tree_edges must be non-negative")
    if include_trivial:
        yield TRIVIAL_DIAGRAM
    words = face_words(p)
    letters = [code for g in range(1, len(p.generators) + 1) for code in (g, -g)]

    def extend(d: DiskDiagram) -> List[DiskDiagram]:
        grown = _glued_faces(d, words) if d.area < max_area else []
        if d.tree_edges < max_tree_edges:
            grown.extend(_hung_edges(d, letters))
        return grown

    found: Dict[Tuple, DiskDiagram] = {TRIVIAL_DIAGRAM.canonical_code: TRIVIAL_DIAGRAM}
    frontier: List[DiskDiagram] = [TRIVIAL_DIAGRAM]
    step = 0
    while frontier:
        step += 1
        fresh: Dict[Tuple, DiskDiagram] = {}
        for batch in ordered_map(extend, frontier, threads):
            for candidate in batch:
                code = candidate.canonical_code
                if code not in found and code not in fresh:
                    fresh[code] = candidate
        found.update(fresh)
        frontier = [fresh[code] for code in sorted(fresh)]
        logger.debug("Step %d: %d new reduced diagrams", step, len(frontier))
    del found[TRIVIAL_DIAGRAM.canonical_code]
    yield from sorted(found.values(), key=lambda d: (d.area, d.tree_edges, d.canonical_code))
