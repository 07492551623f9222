#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Equality oracles for group elements given as words
"""
import functools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Hashable, Optional, Tuple

from ..diagram import DiskDiagram, enumerate_reduced_disks
from ..errors import OracleError
from ..words import BranchedPresentation, CyclicWord, Presentation, Word, cyclically_reduce, free_reduce
from .abelian import AbelianLattice
from .solver import is_trivial

logger = logging.getLogger(__name__)


class OracleStatus(Enum):
    TRIVIAL = "trivial"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class OracleResult:
    status: OracleStatus
    diagram: Optional[DiskDiagram] = None

    @property
    def trivial(self) -> bool:
        return self.status == OracleStatus.TRIVIAL

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'status': self.status.value}
        if self.diagram is not None:
            data['diagram'] = self.diagram.to_dict()
        return data


def _cyclic_key(codes: Tuple[int, ...]) -> Tuple[int, ...]:
    core, _ = cyclically_reduce(Word(codes))
    return core.canonical()


@functools.lru_cache(maxsize=16)
def _boundary_index(p: Presentation, max_area: int, max_length: int) -> Dict[Tuple[int, ...], DiskDiagram]:
    """Cyclically reduced boundary words (and inverses) of reduced diagrams"""
    index: Dict[Tuple[int, ...], DiskDiagram] = {}
    for d in enumerate_reduced_disks(p, max_area, area_limit=max(max_area, 1)):
        word = d.boundary_word()
        core, _ = cyclically_reduce(word)
        if len(core) > max_length:
            continue
        index.setdefault(core.canonical(), d)
        index.setdefault(core.inverse().canonical(), d)
    logger.debug("Boundary index: %d words up to area %d", len(index), max_area)
    return index


def bounded_oracle_trivial(w: Word, p: Presentation, max_area: int,
                           max_length: int) -> OracleResult:
    """Trivial with a certificate diagram when one of area <= max_area has boundary w"""
    key = _cyclic_key(w.codes)
    if not key:
        return OracleResult(OracleStatus.TRIVIAL, DiskDiagram())
    if len(key) > max_length:
        return OracleResult(OracleStatus.UNKNOWN)
    diagram = _boundary_index(p, max_area, max_length).get(key)
    if diagram is None:
        return OracleResult(OracleStatus.UNKNOWN)
    return OracleResult(OracleStatus.TRIVIAL, diagram)


class EqualityOracle(ABC):
    """Decides u == v in the group, or raises OracleError"""

    name = "oracle"

    def __init__(self, p: Presentation):
        self.presentation = p
        self.lattice = AbelianLattice(p)

    @abstractmethod
    def is_trivial(self, w: Word) -> bool:
        ...

    def equal(self, u: Word, v: Word) -> bool:
        return self.is_trivial(u + v.inverse())

    def bucket(self, w: Word) -> Hashable:
        """Invariant shared by equal elements"""
        return self.lattice.residue(w)


class ExponentSumOracle(EqualityOracle):
    """Exact for abelian groups: equality of residues modulo the relation lattice"""

    name = "exponent-sum"

    def __init__(self, p: Presentation, exact: Optional[bool] = None):
        super().__init__(p)
        self.exact = is_abelian_presentation(p) if exact is None else exact

    def is_trivial(self, w: Word) -> bool:
        if not self.lattice.is_zero(w):
            return False
        if not self.exact:
            raise OracleError("exponent sums cannot certify triviality in a nonabelian group")
        return True


class FreeGroupOracle(EqualityOracle):
    """No relators: free reduction decides everything"""

    name = "free"

    def is_trivial(self, w: Word) -> bool:
        return free_reduce(w).is_empty()

    def bucket(self, w: Word) -> Hashable:
        return free_reduce(w).codes


class DehnOracle(EqualityOracle):
    """Dehn's algorithm on an eligible branched presentation"""

    name = "dehn"

    def __init__(self, b: BranchedPresentation, unsafe: bool = False):
        super().__init__(b.derived)
        self.branched = b
        self.unsafe = unsafe

    def is_trivial(self, w: Word) -> bool:
        return is_trivial(w, self.branched, self.unsafe)


class DiagramSearchOracle(EqualityOracle):
    """Bounded van Kampen search, with exponent sums as the negative test"""

    name = "diagram-search"

    def __init__(self, p: Presentation, max_area: int = 3, max_length: int = 24):
        super().__init__(p)
        self.max_area = max_area
        self.max_length = max_length

    def is_trivial(self, w: Word) -> bool:
        if not self.lattice.is_zero(w):
            return False
        if bounded_oracle_trivial(w, self.presentation, self.max_area, self.max_length).trivial:
            return True
        raise OracleError(f"no diagram of area <= {self.max_area} for a word of length {len(w)}")


def _is_commutator(r: CyclicWord, x: int, y: int) -> bool:
    target = CyclicWord.from_codes((x + 1, y + 1, -(x + 1), -(y + 1)))
    return r.equal_up_to_inversion(target)


def is_abelian_presentation(p: Presentation) -> bool:
    """Rank <= 1, or every pair of generators has a commutator relator"""
    if p.rank <= 1:
        return True
    return all(
        any(_is_commutator(r, x, y) or _is_commutator(r, y, x) for r in p.relators)
        for x in range(p.rank) for y in range(x + 1, p.rank)
    )


def choose_oracle(p: Presentation, b: Optional[BranchedPresentation] = None,
                  unsafe: bool = False, max_area: int = 3, max_length: int = 24) -> EqualityOracle:
    """Free reduction, exact abelian residues, then Dehn, then bounded diagram search"""
    if not p.relators:
        return FreeGroupOracle(p)
    if is_abelian_presentation(p):
        return ExponentSumOracle(p, exact=True)
    if b is not None and (b.dehn_eligible or unsafe):
        return DehnOracle(b, unsafe)
    logger.info("No exact oracle for this presentation; using bounded diagram search")
    return DiagramSearchOracle(p, max_area, max_length)
