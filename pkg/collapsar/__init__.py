"""
collapsar - collapsibility, small cancellation and Dehn's algorithm for
branched group presentations
"""

__version__ = "1.0.0"
__author__ = "Collapsar Team"

from .words import (
    BranchedPresentation,
    CyclicWord,
    Presentation,
    Word,
    parse_presentation,
)

__all__ = [
    "__version__",
    "BranchedPresentation",
    "CyclicWord",
    "Presentation",
    "Word",
    "parse_presentation",
]
