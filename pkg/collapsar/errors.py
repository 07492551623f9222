#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exception hierarchy shared by all collapsar modules
"""


class CollapsarError(Exception):
    """Base class for collapsar errors"""


class PresentationError(CollapsarError, ValueError):
    """Presentation text or data could not be turned into a presentation"""


class PresentationSyntaxError(PresentationError):
    """Malformed presentation text"""

    def __init__(self, message: str, position: int = -1):
        if position >= 0:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class UnknownGeneratorError(PresentationError):
    """A relator uses a symbol that is not a declared generator"""

    def __init__(self, symbol: str, position: int = -1):
        message = f"unknown generator symbol '{symbol}'"
        if position >= 0:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.symbol = symbol
        self.position = position


class EmptyRelatorError(PresentationError):
    """A relator slot evaluates to the empty word"""


class PreconditionError(CollapsarError, ValueError):
    """An operation was called outside its domain"""


class StaleCollapseError(CollapsarError, ValueError):
    """A free-face pair is not valid in the complex it is applied to"""


class EligibilityError(CollapsarError):
    """Dehn's algorithm requested on a presentation that is not certified"""


class OracleError(CollapsarError):
    """An equality oracle cannot answer a query soundly"""


class GeodesicError(CollapsarError, ValueError):
    """A vertex path is not a geodesic of the ball"""


class InconsistentHalfspaceError(CollapsarError):
    """Halfspace data cannot support a dual cube construction"""


class MixedPerimeterError(CollapsarError, ValueError):
    """Area bound requested over relators of different lengths"""


class ArtifactError(CollapsarError):
    """Report bundling found no usable run artifacts"""
