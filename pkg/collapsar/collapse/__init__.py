"""
Free faces, collapses, n-collapsing checks and bicollapsibility verdicts
"""

from ..verdict import CollapsingVerdict, VerdictStatus
from .models import CollapseSequence, FreeFacePair, PairKind
from .collapser import (
    check_dr_collapsing,
    check_n_collapsing,
    check_unicollapsible,
    collapses_to_graph,
    collapses_to_point,
    connected_face_unions,
    count_collapsible_cells,
    count_free_face_pairs,
    do_collapse,
    free_face_pairs,
    is_trivial_complex,
    sample_edge_extensions,
)
from .immersions import (
    ImmersionWitness,
    immersed_candidates,
    incidence_graph,
    is_isomorphic_complex,
    search_bicollapse_violation,
)
from .certifier import certification_tree, certify_bicollapsible, certify_branched

__all__ = [
    "CollapseSequence",
    "CollapsingVerdict",
    "FreeFacePair",
    "ImmersionWitness",
    "PairKind",
    "VerdictStatus",
    "certification_tree",
    "certify_bicollapsible",
    "certify_branched",
    "check_dr_collapsing",
    "check_n_collapsing",
    "check_unicollapsible",
    "collapses_to_graph",
    "collapses_to_point",
    "connected_face_unions",
    "count_collapsible_cells",
    "count_free_face_pairs",
    "do_collapse",
    "free_face_pairs",
    "immersed_candidates",
    "incidence_graph",
    "is_isomorphic_complex",
    "is_trivial_complex",
    "sample_edge_extensions",
    "search_bicollapse_violation",
]
