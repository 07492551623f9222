#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Free-group operations on words
"""
from typing import List, Optional, Tuple, Union

from ..errors import PreconditionError
from .models import CyclicWord, Word


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain"""
    stack: List[int] = []
    for code in w.codes:
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return Word(tuple(stack))


def cyclically_reduce(w: Word) -> Tuple[CyclicWord, Word]:
    """Return (core, conjugator) with w = conjugator . core . conjugator^-1"""
    reduced = free_reduce(w).codes
    i, j = 0, len(reduced) - 1
    while i < j and reduced[i] == -reduced[j]:
        i += 1
        j -= 1
    return CyclicWord(Word(reduced[i:j + 1])), Word(reduced[:i])


def _as_word(w: Union[Word, CyclicWord]) -> Word:
    return w.representative if isinstance(w, CyclicWord) else w


def power(w: Union[Word, CyclicWord], n: int) -> Word:
    """w repeated n times; w must be cyclically reduced"""
    word = _as_word(w)
    if n < 1:
        raise PreconditionError(f"power exponent must be >= 1, got {n}")
    if not word.is_cyclically_reduced():
        raise PreconditionError("power requires a cyclically reduced word")
    return Word(word.codes * n)


def is_proper_power(w: Union[Word, CyclicWord]) -> Optional[Tuple[Word, int]]:
    """(root, k) with w = root^k and k maximal, or None when k = 1"""
    codes = _as_word(w).codes
    length = len(codes)
    for period in range(1, length // 2 + 1):
        if length % period:
            continue
        if codes == codes[:period] * (length // period):
            return Word(codes[:period]), length // period
    return None
