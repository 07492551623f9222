"""
Disk and spherical diagrams: roles, audits and bounded enumeration
"""

from .models import (
    TRIVIAL_DIAGRAM,
    DiagramBuilder,
    DiagramFace,
    DiskDiagram,
    SphericalDiagram,
    cancellable_across,
    relator_rotation,
    single_face_diagram,
)
from .roles import (
    CellClassification,
    CellRole,
    RoleKind,
    ShellMode,
    area_bound_check,
    cancellable_pairs,
    check_dehn_property,
    check_generalized_dehn,
    check_ladder_or_tiny_shells,
    classify_cells,
    is_ladder,
    is_reduced,
    tiny_innerpath_shells,
    uniform_degrees,
)
from .enumerate import DEFAULT_AREA_LIMIT, DEFAULT_TREE_EDGES, enumerate_reduced_disks, face_words
from .spheres import find_spherical_near_immersion
from .export import diagram_to_dot, diagram_to_json

__all__ = [
    "DEFAULT_AREA_LIMIT",
    "DEFAULT_TREE_EDGES",
    "TRIVIAL_DIAGRAM",
    "DiagramBuilder",
    "CellClassification",
    "CellRole",
    "DiagramFace",
    "DiskDiagram",
    "RoleKind",
    "ShellMode",
    "SphericalDiagram",
    "area_bound_check",
    "cancellable_across",
    "cancellable_pairs",
    "check_dehn_property",
    "check_generalized_dehn",
    "check_ladder_or_tiny_shells",
    "classify_cells",
    "diagram_to_dot",
    "diagram_to_json",
    "enumerate_reduced_disks",
    "face_words",
    "find_spherical_near_immersion",
    "is_ladder",
    "is_reduced",
    "relator_rotation",
    "single_face_diagram",
    "tiny_innerpath_shells",
    "uniform_degrees",
]
