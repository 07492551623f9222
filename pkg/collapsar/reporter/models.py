#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Run report data models
"""
import hashlib
import json
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import psutil

from .. import __version__

SCHEMA_VERSION = 1


def input_digest(text: str, flags: Dict[str, Any]) -> str:
    """SHA-256 over the input text and the flags that shaped the run"""
    payload = json.dumps({'input': text, 'flags': flags}, sort_keys=True, default=str)
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


@dataclass
class VerdictRecord:
    """One claim with the rule that licensed it"""
    claim: str
    status: str
    provenance: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'claim': self.claim,
            'status': self.status,
            'provenance': list(self.provenance),
            'details': self.details,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerdictRecord':
        return cls(data['claim'], data['status'], list(data.get('provenance', [])),
                   dict(data.get('details', {})))


@dataclass
class Report:
    """Everything a subcommand produced"""
    command: str
    input_digest: str = ""
    verdicts: List[VerdictRecord] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    artifacts: Dict[str, str] = field(default_factory=dict)
    tool_version: str = __version__
    schema_version: int = SCHEMA_VERSION
    timing: Dict[str, float] = field(default_factory=dict)

    def add_verdict(self, claim: str, status: str, provenance: Optional[List[str]] = None,
                    **details: Any) -> VerdictRecord:
        record = VerdictRecord(claim, status, provenance or [], details)
        self.verdicts.append(record)
        return record

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        """Convert to dictionary; without timing the result is deterministic"""
        result = {
            'command': self.command,
            'input_digest': self.input_digest,
            'verdicts': [v.to_dict() for v in self.verdicts],
            'data': self.data,
            'artifacts': sorted(self.artifacts),
            'tool_version': self.tool_version,
            'schema_version': self.schema_version,
        }
        if include_timing:
            result['timing'] = dict(self.timing)
        return result

    def digest(self) -> str:
        body = json.dumps(self.to_dict(include_timing=False), sort_keys=True, default=str)
        return hashlib.sha256(body.encode('utf-8')).hexdigest()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Report':
        return cls(
            command=data['command'],
            input_digest=data.get('input_digest', ''),
            verdicts=[VerdictRecord.from_dict(v) for v in data.get('verdicts', [])],
            data=dict(data.get('data', {})),
            tool_version=data.get('tool_version', __version__),
            schema_version=int(data.get('schema_version', SCHEMA_VERSION)),
            timing=dict(data.get('timing', {})),
        )


class RunTimer:
    """Wall time and resident memory of a block"""

    def __init__(self, report: Report):
        self.report = report
        self._start = 0.0
        self._process = psutil.Process()

    def __enter__(self) -> 'RunTimer':
        self._start = time.perf_counter()
        self._rss = self._process.memory_info().rss
        return self

    def __exit__(self, *exc: Any) -> None:
        rss = max(self._rss, self._process.memory_info().rss)
        self.report.timing = {
            'wall_seconds': round(time.perf_counter() - self._start, 6),
            'peak_rss_bytes': rss,
        }
