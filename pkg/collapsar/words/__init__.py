"""
Words in free groups, cyclic words, presentations and branching
"""

from .models import (
    CyclicWord,
    Generator,
    Letter,
    Presentation,
    Word,
    code_generator,
    code_sign,
    letter_code,
    minimal_rotation,
)
from .operations import cyclically_reduce, free_reduce, is_proper_power, power
from .branched import BranchedPresentation, branch
from .parser import format_presentation, format_word, parse_presentation, parse_word

__all__ = [
    "BranchedPresentation",
    "CyclicWord",
    "Generator",
    "Letter",
    "Presentation",
    "Word",
    "branch",
    "code_generator",
    "code_sign",
    "cyclically_reduce",
    "format_presentation",
    "format_word",
    "free_reduce",
    "is_proper_power",
    "letter_code",
    "minimal_rotation",
    "parse_presentation",
    "parse_word",
    "power",
]
