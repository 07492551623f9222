"""
Pieces, C(p)/T(q) conditions, staggeredness and curvature checks
"""

from .pieces import (
    Placement,
    PieceIndex,
    check_C,
    min_piece_decomposition,
    pieces,
)
from .conditions import (
    CurvatureParams,
    CurvatureVerdict,
    StarGraph,
    certify_3_collapsing,
    check_T,
    curvature_condition,
    face_is_immersed,
    has_duplicate_relators,
    is_staggered,
    star_graph,
)

__all__ = [
    "CurvatureParams",
    "CurvatureVerdict",
    "PieceIndex",
    "Placement",
    "StarGraph",
    "certify_3_collapsing",
    "check_C",
    "check_T",
    "curvature_condition",
    "face_is_immersed",
    "has_duplicate_relators",
    "is_staggered",
    "min_piece_decomposition",
    "pieces",
    "star_graph",
]
