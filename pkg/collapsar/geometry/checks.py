#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Face-level structural checks on the safe part of a ball
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..complex2 import boundary_intersection, face_boundary
from .ball import CayleyBall

logger = logging.getLogger(__name__)


@dataclass
class FaceIntersectionReport:
    pairs_checked: int = 0
    disconnected: List[Tuple[int, int]] = field(default_factory=list)
    bad_boundaries: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disconnected and not self.bad_boundaries

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pairs_checked': self.pairs_checked,
            'disconnected': [list(p) for p in self.disconnected],
            'bad_boundaries': self.bad_boundaries,
            'ok': self.ok,
        }


def check_face_intersections(ball: CayleyBall) -> FaceIntersectionReport:
    """Safe face pairs meet in a connected piece; each safe face boundary is a circle"""
    report = FaceIntersectionReport()
    safe = ball.safe_faces()
    for fid in safe:
        if face_boundary(ball.complex, fid).euler_characteristic() != 0:
            report.bad_boundaries.append(fid)
    for f1, f2 in itertools.combinations(safe, 2):
        report.pairs_checked += 1
        if not boundary_intersection(ball.complex, f1, f2).connected:
            report.disconnected.append((f1, f2))
    if not report.ok:
        logger.warning("Face intersection check failed: %d disconnected pairs, %d bad boundaries",
                       len(report.disconnected), len(report.bad_boundaries))
    return report


@dataclass
class EmbeddingReport:
    faces_checked: int = 0
    failures: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {'faces_checked': self.faces_checked, 'failures': self.failures, 'ok': self.ok}


def check_cells_embed(ball: CayleyBall) -> EmbeddingReport:
    """Each safe face boundary visits distinct vertices"""
    report = EmbeddingReport()
    for fid in ball.safe_faces():
        report.faces_checked += 1
        vertices = ball.complex.face_vertices(fid)
        if len(set(vertices)) != len(vertices):
            report.failures.append(fid)
    return report
