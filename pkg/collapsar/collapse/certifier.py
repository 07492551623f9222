#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Bicollapsibility certification and refutation
"""
import logging
from typing import Any, Callable, Dict, Optional

from ..diagram.spheres import find_spherical_near_immersion
from ..smallcancel import (
    certify_3_collapsing,
    check_C,
    check_T,
    has_duplicate_relators,
    is_staggered,
)
from ..verdict import CollapsingVerdict, VerdictStatus
from ..words import BranchedPresentation, Presentation, is_proper_power
from .collapser import DEFAULT_STATE_LIMIT
from .immersions import search_bicollapse_violation

logger = logging.getLogger(__name__)

RULE_3_TO_BI = "3-collapsing => 2-collapsing => bicollapsible"
RULE_STAGGERED = "staggered without torsion => bicollapsible"
RULE_IMMERSION = "simply connected immersed complex with < 2 collapsing cells"
RULE_SPHERE = "spherical near-immersion => not DR => not bicollapsible"


def _torsion_free_staggered(p: Presentation) -> bool:
    if not p.relators or not all(p.immersed):
        return False
    if any(is_proper_power(r) is not None for r in p.relators):
        return False
    if has_duplicate_relators(p):
        return False
    return is_staggered(p)


def certify_bicollapsible(p: Presentation, budget: int = 3,
                          max_candidates: int = 2000,
                          sphere_max_area: int = 2,
                          state_limit: int = DEFAULT_STATE_LIMIT) -> CollapsingVerdict:
    """Certify by small cancellation or staggering; refute by a bounded search"""
    three = certify_3_collapsing(p)
    if three.certified:
        return CollapsingVerdict(VerdictStatus.CERTIFIED, three.provenance + [RULE_3_TO_BI],
                                 details=dict(three.details))
    if _torsion_free_staggered(p):
        return CollapsingVerdict(VerdictStatus.CERTIFIED, [RULE_STAGGERED])
    witness = search_bicollapse_violation(p, budget, max_candidates, state_limit)
    if witness is not None:
        return CollapsingVerdict(
            VerdictStatus.REFUTED, [RULE_IMMERSION], witness=witness.complex, bound=budget,
            details={'faces': witness.complex.num_faces,
                     'collapsing_cells': witness.collapsing_cells,
                     'candidates_examined': witness.candidates_examined})
    sphere = find_spherical_near_immersion(p, sphere_max_area)
    if sphere is not None:
        return CollapsingVerdict(VerdictStatus.REFUTED, [RULE_SPHERE],
                                 witness=sphere.to_complex(), bound=sphere_max_area,
                                 details={'sphere_area': sphere.area})
    logger.info("Bicollapsibility inconclusive within %d faces", budget)
    return CollapsingVerdict(VerdictStatus.INCONCLUSIVE, ["search budget exhausted"],
                             bound=budget, details={'three_collapsing': three.provenance})


def certify_branched(b: BranchedPresentation, budget: int = 3,
                     max_candidates: int = 2000) -> BranchedPresentation:
    """Attach the base certification that Dehn eligibility depends on"""
    return b.with_certification(certify_bicollapsible(b.base, budget, max_candidates))


def _optional_check(check: Callable[..., bool], *args: Any) -> Optional[bool]:
    try:
        return check(*args)
    except ValueError:
        return None


def certification_tree(p: Presentation, budget: int = 3,
                       max_candidates: int = 2000) -> Dict[str, Any]:
    """Every rule evaluated on p, with the chain that reached the final verdict"""
    three = certify_3_collapsing(p)
    bicollapsible = certify_bicollapsible(p, budget, max_candidates)
    chain = list(bicollapsible.provenance)
    return {
        'conditions': {
            'C(4)': _optional_check(check_C, p, 4),
            'C(6)': _optional_check(check_C, p, 6),
            'T(4)': _optional_check(check_T, p, 4),
            'staggered': is_staggered(p),
        },
        '3-collapsing': three.to_dict(),
        'bicollapsible': bicollapsible.to_dict(),
        'chain': chain,
        'status': bicollapsible.status.value,
    }
