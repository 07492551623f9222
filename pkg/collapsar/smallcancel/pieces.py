#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pieces of a presentation and the C(p) condition

A placement is (relator index, orientation, rotation offset). A word is a
piece when it occurs at two or more distinct placements; rotations of a
proper-power relator count as distinct placements. Pieces read inside
relator ``r`` have length at most ``|r| - 1``.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Tuple, Union

from ..errors import PreconditionError
from ..words import CyclicWord, Presentation

logger = logging.getLogger(__name__)

INFINITY = float("inf")


@dataclass(frozen=True, order=True)
class Placement:
    """Where a subword starts: relator, orientation (+1/-1), offset"""
    relator: int
    orientation: int
    offset: int

    def to_dict(self) -> Dict[str, int]:
        return {'relator': self.relator, 'orientation': self.orientation, 'offset': self.offset}


def relator_cycle(p: Presentation, relator: int, orientation: int) -> Tuple[int, ...]:
    word = p.relators[relator].representative
    return word.codes if orientation > 0 else word.inverse().codes


def cyclic_subword(codes: Tuple[int, ...], offset: int, length: int) -> Tuple[int, ...]:
    n = len(codes)
    return tuple(codes[(offset + i) % n] for i in range(length))


@dataclass
class PieceIndex:
    """All pieces of a presentation with their placements"""
    presentation: Presentation
    placements: Dict[Tuple[int, ...], Tuple[Placement, ...]] = field(default_factory=dict)
    max_piece_length: Tuple[int, ...] = ()

    def is_piece(self, word: Tuple[int, ...]) -> bool:
        return word in self.placements

    def pieces_of_length(self, length: int) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(w for w in self.placements if len(w) == length)

    @property
    def overall_max_piece_length(self) -> int:
        return max(self.max_piece_length, default=0)

    def is_empty(self) -> bool:
        return not self.placements

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            'max_piece_length': list(self.max_piece_length),
            'piece_count': len(self.placements),
            'pieces': [
                {'word': list(w), 'placements': [pl.to_dict() for pl in self.placements[w]]}
                for w in sorted(self.placements, key=lambda w: (len(w), w))
            ],
        }


def _require_reduced(p: Presentation) -> None:
    for index, relator in enumerate(p.relators):
        if not relator.cyclically_reduced:
            raise PreconditionError(f"relator {index} is not cyclically reduced")


def pieces(p: Presentation) -> PieceIndex:
    """Index every piece of p"""
    _require_reduced(p)
    occurrences: Dict[Tuple[int, ...], List[Placement]] = {}
    for index, relator in enumerate(p.relators):
        for orientation in (1, -1):
            codes = relator_cycle(p, index, orientation)
            for length in range(1, len(codes)):
                for offset in range(len(codes)):
                    word = cyclic_subword(codes, offset, length)
                    occurrences.setdefault(word, []).append(Placement(index, orientation, offset))
    placements = {w: tuple(sorted(pl)) for w, pl in occurrences.items() if len(set(pl)) >= 2}
    longest = [0] * len(p.relators)
    for word, where in placements.items():
        for placement in where:
            longest[placement.relator] = max(longest[placement.relator], len(word))
    logger.debug("Indexed %d pieces over %d relators", len(placements), len(p.relators))
    return PieceIndex(p, placements, tuple(longest))


def min_piece_decomposition(r: CyclicWord, idx: PieceIndex) -> Union[int, float]:
    """Fewest pieces whose cyclic concatenation is r; infinity if impossible"""
    codes = r.codes
    n = len(codes)
    if n == 0:
        return INFINITY
    if any(not idx.is_piece((c,)) for c in codes):
        return INFINITY
    best: Union[int, float] = INFINITY
    for start in range(n):
        dp: List[Union[int, float]] = [0] + [INFINITY] * n
        for j in range(1, n + 1):
            for k in range(j):
                if dp[k] + 1 >= dp[j]:
                    continue
                if idx.is_piece(cyclic_subword(codes, start + k, j - k)):
                    dp[j] = dp[k] + 1
        best = min(best, dp[n])
    return best


def check_C(p: Presentation, k: int) -> bool:
    """True iff no relator is a product of fewer than k pieces"""
    idx = pieces(p)
    return all(min_piece_decomposition(r, idx) >= k for r in p.relators)
