#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Base reporter interface and factory
"""
import io
import json
import logging
import shutil
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

from rich.console import Console
from rich.table import Table

from ..config import Config, OutputFormat
from ..errors import ArtifactError
from .models import Report

logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"
TIMING_FILE = "timing.json"
SUMMARY_FILE = "summary.txt"


class BaseReporter(ABC):
    """Base class for all reporters"""

    def __init__(self, config: Config):
        self.config = config

    @abstractmethod
    def generate_report(self, report: Report) -> str:
        """Generate report string"""
        pass


class Reporter:
    """Reporter factory and manager"""

    def __init__(self, config: Config):
        self.config = config
        self._reporter = self._create_reporter()

    def _create_reporter(self) -> BaseReporter:
        """Create appropriate reporter based on config"""
        if self.config.output_format == OutputFormat.JSON:
            return JsonReporter(self.config)
        elif self.config.output_format == OutputFormat.MARKDOWN:
            return MarkdownReporter(self.config)
        else:
            return TextReporter(self.config)

    def generate_report(self, report: Report) -> str:
        """Generate report using configured reporter"""
        return self._reporter.generate_report(report)


def _scalar_items(data: Dict[str, Any]) -> List[tuple]:
    return [(k, v) for k, v in sorted(data.items())
            if isinstance(v, (str, int, float, bool)) or v is None]


class TextReporter(BaseReporter):
    """Text format reporter rendered through rich tables"""

    STATUS_STYLES = {
        'certified': 'green',
        'trivial': 'green',
        'ok': 'green',
        'refuted': 'red',
        'nontrivial': 'red',
        'failed': 'red',
        'inconclusive': 'yellow',
    }

    def generate_report(self, report: Report) -> str:
        """Generate text report"""
        buffer = io.StringIO()
        console = Console(file=buffer, width=100, force_terminal=self.config.enable_colors,
                          no_color=not self.config.enable_colors, highlight=False)
        console.print(f"[bold]collapsar {report.command}[/bold]  (v{report.tool_version})")
        console.print(f"input digest: {report.input_digest}")

        if report.verdicts:
            table = Table(title="Verdicts")
            table.add_column("Claim")
            table.add_column("Status")
            table.add_column("Provenance")
            for verdict in report.verdicts:
                style = self.STATUS_STYLES.get(verdict.status, 'white')
                table.add_row(verdict.claim, f"[{style}]{verdict.status}[/{style}]",
                              "; ".join(verdict.provenance))
            console.print(table)

        scalars = _scalar_items(report.data)
        if scalars:
            table = Table(title="Summary")
            table.add_column("Field")
            table.add_column("Value")
            for key, value in scalars:
                table.add_row(key, str(value))
            console.print(table)

        if report.artifacts:
            console.print("artifacts: " + ", ".join(sorted(report.artifacts)))
        return buffer.getvalue()


class JsonReporter(BaseReporter):
    """JSON format reporter; timing stays out of the body"""

    def generate_report(self, report: Report) -> str:
        """Generate JSON report"""
        return json.dumps(report.to_dict(include_timing=False), indent=2,
                          sort_keys=True, ensure_ascii=False, default=str) + "\n"


class MarkdownReporter(BaseReporter):
    """Markdown format reporter"""

    def generate_report(self, report: Report) -> str:
        """Generate Markdown report"""
        md = f"""# collapsar {report.command}

**Input digest:** `{report.input_digest}`  
**Tool version:** {report.tool_version}

"""
        if report.verdicts:
            md += "## Verdicts\n\n"
            md += "| Claim | Status | Provenance |\n"
            md += "|-------|--------|------------|\n"
            for verdict in report.verdicts:
                md += f"| {verdict.claim} | {verdict.status} | {'; '.join(verdict.provenance)} |\n"
            md += "\n"

        scalars = _scalar_items(report.data)
        if scalars:
            md += "## Summary\n\n| Field | Value |\n|-------|-------|\n"
            for key, value in scalars:
                md += f"| {key} | {value} |\n"

        if report.artifacts:
            md += "\n## Artifacts\n\n"
            for name in sorted(report.artifacts):
                md += f"- `{name}`\n"
        return md


def save_report(report: Report, out_dir: Union[str, Path], config: Config) -> List[Path]:
    """Write report.json, summary.txt, timing.json and every artifact"""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    plain = Config.from_dict({**config.to_dict(), 'enable_colors': False})
    written = []
    files = {
        REPORT_FILE: JsonReporter(plain).generate_report(report),
        SUMMARY_FILE: TextReporter(plain).generate_report(report),
        TIMING_FILE: json.dumps(report.timing, indent=2, sort_keys=True) + "\n",
    }
    files.update(report.artifacts)
    for name, text in sorted(files.items()):
        path = out / name
        path.write_text(text, encoding='utf-8')
        written.append(path)
    logger.info("Wrote %d files to %s", len(written), out)
    return written


def _run_dirs(run_dir: Path) -> List[Path]:
    if (run_dir / REPORT_FILE).is_file():
        return [run_dir]
    if not run_dir.is_dir():
        raise ArtifactError(f"{run_dir} is not a directory")
    return sorted(p for p in run_dir.iterdir() if (p / REPORT_FILE).is_file())


def bundle_reports(run_dirs: Sequence[Union[str, Path]], out_dir: Union[str, Path]) -> Dict[str, Any]:
    """Gather saved runs into one bundle: index.json, DOT files and a combined summary"""
    runs: List[Path] = []
    for run_dir in run_dirs:
        runs.extend(_run_dirs(Path(run_dir)))
    if not runs:
        raise ArtifactError(f"no {REPORT_FILE} found under {', '.join(str(d) for d in run_dirs)}")

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    index: Dict[str, Any] = {'runs': []}
    summaries = []
    for number, run in enumerate(runs):
        data = json.loads((run / REPORT_FILE).read_text(encoding='utf-8'))
        report = Report.from_dict(data)
        name = f"{number:02d}-{report.command}"
        target = out / name
        target.mkdir(exist_ok=True)
        shutil.copyfile(run / REPORT_FILE, target / REPORT_FILE)
        dots = sorted(p.name for p in run.glob("*.dot"))
        for dot in dots:
            shutil.copyfile(run / dot, target / dot)
        index['runs'].append({
            'name': name,
            'source': str(run),
            'command': report.command,
            'digest': report.digest(),
            'verdicts': [f"{v.claim}: {v.status}" for v in report.verdicts],
            'dot_files': dots,
        })
        summary = run / SUMMARY_FILE
        if summary.is_file():
            summaries.append(f"== {name} ==\n" + summary.read_text(encoding='utf-8'))
    (out / "index.json").write_text(json.dumps(index, indent=2, sort_keys=True) + "\n", encoding='utf-8')
    (out / SUMMARY_FILE).write_text("\n".join(summaries), encoding='utf-8')
    logger.info("Bundled %d runs into %s", len(runs), out)
    return index
