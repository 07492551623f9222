#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Three-valued verdicts with provenance
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from .complex2.models import TwoComplex


class VerdictStatus(Enum):
    """Outcome of a certification or refutation attempt"""
    CERTIFIED = "certified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CollapsingVerdict:
    """Verdict with the rule that produced it and an optional witness"""
    status: VerdictStatus
    provenance: List[str] = field(default_factory=list)
    witness: Optional["TwoComplex"] = None
    bound: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status == VerdictStatus.REFUTED and self.witness is None:
            raise ValueError("refuted verdict requires a witness")

    @property
    def certified(self) -> bool:
        return self.status == VerdictStatus.CERTIFIED

    @property
    def refuted(self) -> bool:
        return self.status == VerdictStatus.REFUTED

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        data: Dict[str, Any] = {
            'status': self.status.value,
            'provenance': list(self.provenance),
            'bound': self.bound,
            'details': dict(self.details),
        }
        if self.witness is not None:
            data['witness'] = self.witness.to_dict()
        return data
