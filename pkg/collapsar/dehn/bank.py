#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Relator bank: rotations of every derived relator and its inverse, indexed by
the prefixes long enough to trigger a Dehn rewrite
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from ..words import Presentation


@dataclass(frozen=True)
class BankEntry:
    """Rotation `offset` of relator^orientation"""
    relator: int
    orientation: int
    offset: int
    codes: Tuple[int, ...]

    @property
    def threshold(self) -> int:
        return len(self.codes) // 2

    def to_dict(self) -> Dict[str, Any]:
        return {'relator': self.relator, 'orientation': self.orientation, 'offset': self.offset}


@dataclass(frozen=True)
class Match:
    """Prefix of `entry` found at `position` of a word"""
    position: int
    length: int
    entry: BankEntry

    def replacement(self) -> Tuple[int, ...]:
        """S^-1 where entry = Q S"""
        rest = self.entry.codes[self.length:]
        return tuple(-c for c in reversed(rest))


class RelatorBank:
    """Immutable, shareable index of long relator prefixes"""

    def __init__(self, p: Presentation):
        self.presentation = p
        self.entries: List[BankEntry] = []
        self._prefixes: Dict[Tuple[int, ...], List[int]] = {}
        seen = set()
        for index, relator in enumerate(p.relators):
            for orientation in (1, -1):
                word = relator.representative if orientation > 0 else relator.representative.inverse()
                codes = word.codes
                for offset in range(len(codes)):
                    rotated = codes[offset:] + codes[:offset]
                    if rotated in seen:
                        continue
                    seen.add(rotated)
                    entry = BankEntry(index, orientation, offset, rotated)
                    self.entries.append(entry)
                    for length in range(entry.threshold + 1, len(rotated) + 1):
                        self._prefixes.setdefault(rotated[:length], []).append(len(self.entries) - 1)
        self.lengths = sorted({len(k) for k in self._prefixes}, reverse=True)

    @property
    def thresholds(self) -> List[int]:
        return [len(r) // 2 for r in self.presentation.relators]

    def __len__(self) -> int:
        return len(self.entries)

    def matches_at(self, codes: Tuple[int, ...], position: int) -> List[Match]:
        """Every bank prefix starting at position, longest first"""
        found = []
        for length in self.lengths:
            if position + length > len(codes):
                continue
            for index in self._prefixes.get(codes[position:position + length], ()):
                found.append(Match(position, length, self.entries[index]))
        return found

    def first_match(self, codes: Tuple[int, ...]) -> Tuple[int, List[Match]]:
        """Leftmost position with a match and its matches, or (-1, [])"""
        for position in range(len(codes)):
            found = self.matches_at(codes, position)
            if found:
                return position, found
        return -1, []

    def all_matches(self, codes: Tuple[int, ...]) -> List[Match]:
        found = []
        for position in range(len(codes)):
            found.extend(self.matches_at(codes, position))
        return found
