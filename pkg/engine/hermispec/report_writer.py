"""
Report Writer for command output.

This module renders command results as aligned text tables (through pandas)
or as stable JSON with sorted keys, and stamps every report with the SHA-256
digest of its canonical JSON so that repeated runs can be compared.
"""

import hashlib
import json

import pandas as pd

from .graph_io import validate_document

# Keys whose values change from run to run; left out of the digest
VOLATILE_KEYS = ("elapsed_s", "timestamp", "log")


def _canonical_json_string(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _strip_volatile(data):
    if isinstance(data, dict):
        return {k: _strip_volatile(v) for k, v in data.items() if k not in VOLATILE_KEYS}
    if isinstance(data, list):
        return [_strip_volatile(v) for v in data]
    return data


def calculate_report_hash(report):
    """
    Hex SHA-256 of a report's canonical JSON, without volatile fields or the hash itself.

    Args:
        report: Report dictionary

    Returns:
        str: Hex digest
    """
    content = {k: v for k, v in report.items() if k != "report_sha256"}
    return hashlib.sha256(_canonical_json_string(_strip_volatile(content)).encode("utf-8")).hexdigest()


class ReportWriter:
    """Collects a command result and its tables, then renders text or JSON."""

    def __init__(self, command, result=None, status="ok"):
        self.command = command
        self.result = result if result is not None else {}
        self.status = status
        self.sections = {}
        self.log = None

    def add_section(self, name, rows):
        """
        Add a table.

        Args:
            name: Section title
            rows: List of flat dictionaries, one per table row

        Returns:
            list: The stored rows
        """
        self.sections[name] = [dict(row) for row in rows]
        return self.sections[name]

    def attach_log(self, entries):
        self.log = list(entries)

    def to_dict(self):
        report = {"command": self.command, "status": self.status, "result": self.result}
        if self.sections:
            report["sections"] = self.sections
        if self.log is not None:
            report["log"] = self.log
        report["report_sha256"] = calculate_report_hash(report)
        return report

    def to_json(self):
        """
        Stable JSON (sorted keys, two-space indent), validated against the report schema.

        Raises:
            GraphParseError: If the report does not match its schema
        """
        report = self.to_dict()
        validate_document(report, "report")
        return json.dumps(report, sort_keys=True, indent=2)

    def to_text(self, summary_lines=()):
        """Summary lines followed by one aligned table per section."""
        blocks = [line for line in summary_lines]
        for name, rows in self.sections.items():
            blocks.append("")
            blocks.append(f"== {name} ==")
            if rows:
                blocks.append(pd.DataFrame(rows).to_string(index=False))
            else:
                blocks.append("(none)")
        if self.log:
            blocks.append("")
            blocks.append("== log ==")
            frame = pd.DataFrame(
                [{"timestamp": e["timestamp"], "step": e["step_type"], "message": e["message"]} for e in self.log])
            blocks.append(frame.to_string(index=False))
        return "\n".join(blocks)
