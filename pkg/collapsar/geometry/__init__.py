"""
Balls in the universal cover, divisive trees, walls and dual cube fragments
"""

from .ball import CayleyBall, build_ball, safe_radius_for
from .trees import DivisiveTree, DivisiveTreeReport, Spider, divisive_trees, spider_graph, spiders
from .walls import (
    ConvexityReport,
    CrossingProfile,
    Halfspaces,
    LadderReport,
    Wall,
    ball_to_dot,
    carrier,
    carriers,
    frontier_graph,
    geodesic_crossing_profile,
    geodesics_from_root,
    halfspaces,
    ladder_check,
    tree_arc,
    walls,
)
from .cube import CubeComplexFragment, crosses, dual_cube_fragment, sageev_fragment
from .checks import EmbeddingReport, FaceIntersectionReport, check_cells_embed, check_face_intersections

__all__ = [
    "CayleyBall",
    "ConvexityReport",
    "CrossingProfile",
    "CubeComplexFragment",
    "DivisiveTree",
    "DivisiveTreeReport",
    "EmbeddingReport",
    "FaceIntersectionReport",
    "Halfspaces",
    "LadderReport",
    "Spider",
    "Wall",
    "ball_to_dot",
    "build_ball",
    "carrier",
    "carriers",
    "check_cells_embed",
    "check_face_intersections",
    "crosses",
    "divisive_trees",
    "dual_cube_fragment",
    "frontier_graph",
    "geodesic_crossing_profile",
    "geodesics_from_root",
    "halfspaces",
    "ladder_check",
    "safe_radius_for",
    "sageev_fragment",
    "spider_graph",
    "spiders",
    "tree_arc",
    "walls",
]
