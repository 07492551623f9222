#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Free-face pairs and collapse sequences
"""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterator, List, Tuple

from ..complex2 import TwoComplex


class PairKind(Enum):
    """Spur: (vertex, edge). Face: (edge, face)"""
    SPUR = "spur"
    FACE = "face"


@dataclass(frozen=True)
class FreeFacePair:
    """A free cell and the unique cell containing it"""
    kind: PairKind
    free_cell: int
    cell: int

    def __lt__(self, other: "FreeFacePair") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> Tuple[int, int, int]:
        return (0 if self.kind == PairKind.FACE else 1, self.cell, self.free_cell)

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == PairKind.SPUR:
            return {'kind': 'spur', 'vertex': self.free_cell, 'edge': self.cell}
        return {'kind': 'face', 'edge': self.free_cell, 'face': self.cell}


@dataclass(frozen=True)
class CollapseSequence:
    """Elementary collapses applied in order"""
    pairs: Tuple[FreeFacePair, ...] = ()

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[FreeFacePair]:
        return iter(self.pairs)

    def replay(self, c: TwoComplex) -> TwoComplex:
        """Apply every pair to c, validating each step"""
        from .collapser import do_collapse

        for pair in self.pairs:
            c = do_collapse(c, pair)
        return c

    def to_dict(self) -> List[Dict[str, Any]]:
        return [p.to_dict() for p in self.pairs]
