"""
Reporter module for run reports and bundles
"""

from .models import Report, RunTimer, VerdictRecord, input_digest
from .reporters import (
    BaseReporter,
    JsonReporter,
    MarkdownReporter,
    Reporter,
    TextReporter,
    bundle_reports,
    save_report,
)

__all__ = [
    "BaseReporter",
    "JsonReporter",
    "MarkdownReporter",
    "Report",
    "Reporter",
    "RunTimer",
    "TextReporter",
    "VerdictRecord",
    "bundle_reports",
    "input_digest",
    "save_report",
]
