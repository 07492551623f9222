#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Branched presentations: base relators raised to positive exponents
"""
import dataclasses
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple, TYPE_CHECKING

from ..errors import PreconditionError
from .models import CyclicWord, Presentation
from .operations import is_proper_power, power

if TYPE_CHECKING:
    from ..verdict import CollapsingVerdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchedPresentation:
    """Base presentation with one exponent per relator"""
    base: Presentation
    exponents: Tuple[int, ...]
    certification: Optional["CollapsingVerdict"] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.exponents) != len(self.base.relators):
            raise PreconditionError(
                f"expected {len(self.base.relators)} exponents, got {len(self.exponents)}")
        for index, n in enumerate(self.exponents):
            if n < 1:
                raise PreconditionError(f"exponent for relator {index} must be >= 1, got {n}")
            if n > 1 and not self.base.relators[index].cyclically_reduced:
                raise PreconditionError(
                    f"relator {index} is not immersed and cannot be raised to a power")

    @property
    def relators(self) -> Tuple[CyclicWord, ...]:
        """Derived relators w_i^n_i"""
        derived = []
        for relator, n in zip(self.base.relators, self.exponents):
            if n == 1:
                derived.append(relator)
            else:
                derived.append(CyclicWord(power(relator, n)))
        return tuple(derived)

    @property
    def derived(self) -> Presentation:
        return Presentation(self.base.generators, self.relators)

    @property
    def certified_bicollapsible(self) -> bool:
        return self.certification is not None and self.certification.certified

    @property
    def dehn_eligible(self) -> bool:
        """All exponents >= 2, base certified, base relators immersed and not proper powers"""
        if not self.exponents or any(n < 2 for n in self.exponents):
            return False
        if not self.certified_bicollapsible:
            return False
        return all(
            r.cyclically_reduced and is_proper_power(r) is None for r in self.base.relators
        )

    def base_length(self, index: int) -> int:
        return len(self.base.relators[index])

    def derived_length(self, index: int) -> int:
        return self.base_length(index) * self.exponents[index]

    def with_certification(self, verdict: "CollapsingVerdict") -> "BranchedPresentation":
        return dataclasses.replace(self, certification=verdict)

    @classmethod
    def from_presentation(cls, p: Presentation) -> "BranchedPresentation":
        """Read each proper-power relator u^k as base u with exponent k"""
        bases = []
        exponents = []
        for relator in p.relators:
            split = is_proper_power(relator) if relator.cyclically_reduced else None
            if split is None:
                bases.append(relator)
                exponents.append(1)
            else:
                root, k = split
                bases.append(CyclicWord(root))
                exponents.append(k)
        return cls(Presentation(p.generators, tuple(bases)), tuple(exponents))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        data = {
            'base': self.base.to_dict(),
            'exponents': list(self.exponents),
            'dehn_eligible': self.dehn_eligible,
            'certified_bicollapsible': self.certified_bicollapsible,
        }
        if self.certification is not None:
            data['certification'] = self.certification.to_dict()
        return data


def branch(p: Presentation, exponents: Sequence[int]) -> BranchedPresentation:
    """Raise each relator of p to its exponent"""
    branched = BranchedPresentation(p, tuple(int(n) for n in exponents))
    logger.debug("Branched %d relators with exponents %s", len(exponents), list(exponents))
    return branched
