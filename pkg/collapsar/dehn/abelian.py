#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Abelianization: invariant factors, lattice membership and canonical residues
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from ..words import Presentation, Word

logger = logging.getLogger(__name__)


class AbelianVerdict(Enum):
    NONTRIVIAL = "nontrivial"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank x Z/t_1 x ... x Z/t_k"""
    free_rank: int
    torsion: Tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def describe(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "1"

    def to_dict(self) -> Dict[str, Any]:
        return {'free_rank': self.free_rank, 'torsion': list(self.torsion),
                'group': self.describe()}


def relation_matrix(p: Presentation) -> List[List[int]]:
    """Exponent-sum rows, one per relator"""
    return [r.representative.exponent_sums(p.rank) for r in p.relators]


def _diagonal(rows: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero Smith invariants of the row lattice"""
    if not rows or not any(any(row) for row in rows):
        return []
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    size = min(snf.shape)
    return [abs(int(snf[i, i])) for i in range(size) if snf[i, i] != 0]


def abelianization(p: Presentation) -> AbelianInvariants:
    diagonal = _diagonal(relation_matrix(p))
    torsion = tuple(d for d in diagonal if d > 1)
    return AbelianInvariants(p.rank - len(diagonal), torsion)


def in_relation_lattice(vector: Sequence[int], p: Presentation) -> bool:
    """Equal rank and equal invariant product with the vector appended"""
    rows = relation_matrix(p)
    if not any(vector):
        return True
    before = _diagonal(rows)
    after = _diagonal(rows + [list(vector)])
    return len(before) == len(after) and math.prod(before) == math.prod(after)


def abelianization_test(w: Word, p: Presentation) -> AbelianVerdict:
    """Nontrivial when the exponent-sum vector leaves the relation lattice"""
    if in_relation_lattice(w.exponent_sums(p.rank), p):
        return AbelianVerdict.INCONCLUSIVE
    return AbelianVerdict.NONTRIVIAL


def _echelon(rows: Sequence[Sequence[int]], width: int) -> np.ndarray:
    """Integer row echelon basis with positive pivots"""
    m = np.array([list(r) for r in rows] or np.zeros((0, width)), dtype=object).reshape(-1, width)
    pivot_row = 0
    for col in range(width):
        while True:
            nonzero = [i for i in range(pivot_row, m.shape[0]) if m[i, col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(m[i, col]))
            m[[pivot_row, best]] = m[[best, pivot_row]]
            done = True
            for i in range(pivot_row + 1, m.shape[0]):
                if m[i, col] != 0:
                    m[i] = m[i] - (m[i, col] // m[pivot_row, col]) * m[pivot_row]
                    if m[i, col] != 0:
                        done = False
            if done:
                if m[pivot_row, col] < 0:
                    m[pivot_row] = -m[pivot_row]
                pivot_row += 1
                break
        if pivot_row == m.shape[0]:
            break
    return m[:pivot_row]


class AbelianLattice:
    """Canonical residues of exponent-sum vectors modulo the relation lattice"""

    def __init__(self, p: Presentation):
        self.presentation = p
        self.basis = _echelon(relation_matrix(p), p.rank)
        self.pivots = [int(np.flatnonzero(row != 0)[0]) for row in self.basis]

    def residue_of_vector(self, vector: Sequence[int]) -> Tuple[int, ...]:
        v = np.array(list(vector), dtype=object)
        for row, col in zip(self.basis, self.pivots):
            v = v - (v[col] // row[col]) * row
        return tuple(int(x) for x in v)

    def residue(self, w: Word) -> Tuple[int, ...]:
        return self.residue_of_vector(w.exponent_sums(self.presentation.rank))

    def is_zero(self, w: Word) -> bool:
        return not any(self.residue(w))
