"""
Combinatorial 2-complexes, vertex links and the duplicates quotient
"""

from .models import (
    INFINITY,
    BoundaryIntersection,
    Edge,
    Face,
    LinkArc,
    LinkGraph,
    SubComplex,
    TwoComplex,
    boundary_intersection,
    canonical_cycle,
    closure_of_cells,
    closure_of_faces,
    dart_edge,
    euler_characteristic,
    face_boundary,
    girth,
    is_forward,
    link,
    multigraph_girth,
    quotient_duplicates,
    reverse_dart,
)
from .builders import (
    attach_polygon,
    branched_complex,
    code_to_dart,
    fold_complex,
    presentation_complex,
)
from .export import complex_to_dot, complex_to_json, link_to_dot

__all__ = [
    "INFINITY",
    "BoundaryIntersection",
    "Edge",
    "Face",
    "LinkArc",
    "LinkGraph",
    "SubComplex",
    "TwoComplex",
    "attach_polygon",
    "boundary_intersection",
    "branched_complex",
    "canonical_cycle",
    "closure_of_cells",
    "closure_of_faces",
    "code_to_dart",
    "complex_to_dot",
    "complex_to_json",
    "dart_edge",
    "euler_characteristic",
    "face_boundary",
    "fold_complex",
    "girth",
    "is_forward",
    "link",
    "link_to_dot",
    "multigraph_girth",
    "presentation_complex",
    "quotient_duplicates",
    "reverse_dart",
]
