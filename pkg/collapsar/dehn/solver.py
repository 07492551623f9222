#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Dehn's algorithm over branched presentations

Rewrites replace a subword Q of a bank rotation QS, |Q| > |QS|/2, by S^-1
and freely reduce, until no such subword remains. Each run records a trace
that can be replayed from its input.
"""
import functools
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..errors import EligibilityError, OracleError
from ..parallel import ordered_map
from ..words import BranchedPresentation, Word, free_reduce, power
from .bank import Match, RelatorBank

logger = logging.getLogger(__name__)


class StepKind(Enum):
    REWRITE = "rewrite"
    FREE = "free"


@dataclass(frozen=True)
class DehnStep:
    kind: StepKind
    position: int = 0
    removed: Tuple[int, ...] = ()
    inserted: Tuple[int, ...] = ()
    relator: int = -1
    orientation: int = 0
    offset: int = 0

    def apply(self, codes: Tuple[int, ...]) -> Tuple[int, ...]:
        if self.kind == StepKind.FREE:
            return free_reduce(Word(codes)).codes
        end = self.position + len(self.removed)
        if codes[self.position:end] != self.removed:
            raise OracleError(f"trace step at {self.position} does not match the word")
        return codes[:self.position] + self.inserted + codes[end:]

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == StepKind.FREE:
            return {'kind': 'free'}
        return {
            'kind': 'rewrite',
            'position': self.position,
            'relator': self.relator,
            'orientation': self.orientation,
            'offset': self.offset,
            'removed': list(self.removed),
            'inserted': list(self.inserted),
        }


@dataclass
class DehnTrace:
    """Ordered rewrites and free reductions of one run"""
    input: Word
    output: Word = Word(())
    steps: List[DehnStep] = field(default_factory=list)
    heuristic: bool = False

    @property
    def rewrites(self) -> int:
        return sum(1 for s in self.steps if s.kind == StepKind.REWRITE)

    def replay(self, w: Optional[Word] = None) -> Word:
        """Apply every step to w (default: the recorded input)"""
        codes = (self.input if w is None else w).codes
        for step in self.steps:
            before = len(codes)
            codes = step.apply(codes)
            if step.kind == StepKind.REWRITE and len(codes) >= before:
                raise OracleError("rewrite step does not shorten the word")
        return Word(codes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'input': list(self.input.codes),
            'output': list(self.output.codes),
            'rewrites': self.rewrites,
            'heuristic': self.heuristic,
            'steps': [s.to_dict() for s in self.steps],
        }


@functools.lru_cache(maxsize=32)
def relator_bank(b: BranchedPresentation) -> RelatorBank:
    return RelatorBank(b.derived)


def _require_eligible(b: BranchedPresentation, unsafe: bool) -> bool:
    """True when the run is heuristic"""
    if b.dehn_eligible:
        return False
    if not unsafe:
        raise EligibilityError(
            "presentation is not Dehn-eligible (exponents >= 2 on a certified "
            "bicollapsible base are required); pass unsafe to override")
    logger.warning("Running Dehn's algorithm on an ineligible presentation; results are heuristic")
    return True


def _choose(matches: List[Match], rng: Optional[random.Random]) -> Match:
    if rng is None:
        return matches[0]
    return rng.choice(matches)


def dehn_reduce(w: Word, b: BranchedPresentation, unsafe: bool = False,
                rng: Optional[random.Random] = None) -> Tuple[Word, DehnTrace]:
    """Reduce w; rng picks among all available rewrites instead of leftmost-longest"""
    heuristic = _require_eligible(b, unsafe)
    bank = relator_bank(b)
    trace = DehnTrace(w, heuristic=heuristic)
    codes = w.codes
    reduced = free_reduce(Word(codes)).codes
    if reduced != codes:
        trace.steps.append(DehnStep(StepKind.FREE))
        codes = reduced
    while True:
        if rng is None:
            _, matches = bank.first_match(codes)
        else:
            matches = bank.all_matches(codes)
        if not matches:
            break
        match = _choose(matches, rng)
        end = match.position + match.length
        step = DehnStep(StepKind.REWRITE, match.position, codes[match.position:end],
                        match.replacement(), match.entry.relator,
                        match.entry.orientation, match.entry.offset)
        codes = step.apply(codes)
        trace.steps.append(step)
        reduced = free_reduce(Word(codes)).codes
        if reduced != codes:
            trace.steps.append(DehnStep(StepKind.FREE))
            codes = reduced
    trace.output = Word(codes)
    logger.debug("Dehn reduction %d -> %d letters in %d rewrites",
                 len(w), len(codes), trace.rewrites)
    return trace.output, trace


def is_trivial(w: Word, b: BranchedPresentation, unsafe: bool = False) -> bool:
    return dehn_reduce(w, b, unsafe)[0].is_empty()


def solve_many(words: Sequence[Word], b: BranchedPresentation, unsafe: bool = False,
               threads: Optional[int] = None) -> List[Tuple[Word, DehnTrace]]:
    """dehn_reduce over a batch, in input order"""
    _require_eligible(b, unsafe)
    return ordered_map(lambda w: dehn_reduce(w, b, unsafe), list(words), threads)


@dataclass(frozen=True)
class RelatorOrder:
    """Observed order of a base relator against its exponent"""
    relator: int
    expected: int
    observed: int

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    def to_dict(self) -> Dict[str, Any]:
        return {'relator': self.relator, 'expected': self.expected,
                'observed': self.observed, 'ok': self.ok}


def order_of_relator(i: int, b: BranchedPresentation, unsafe: bool = False) -> int:
    """Least m >= 1 with w_i^m trivial"""
    base = b.base.relators[i]
    expected = b.exponents[i]
    for m in range(1, expected + 1):
        if is_trivial(power(base, m), b, unsafe):
            if m != expected:
                logger.warning("Relator %d has order %d, expected %d", i, m, expected)
            return m
    logger.warning("Relator %d not trivial at its own exponent %d", i, expected)
    return 0


def relator_orders(b: BranchedPresentation, unsafe: bool = False) -> List[RelatorOrder]:
    return [RelatorOrder(i, b.exponents[i], order_of_relator(i, b, unsafe))
            for i in range(len(b.exponents))]
