"""Structured command output rendered as text or JSON.

A Report is the command echo, a digest of the input, and a list of
records; each record is a titled list of key/value items.  Values are
exact strings (angle literals, fractions, integer pairs); a float
approximation may ride along but never replaces the exact form.  Both
renderings are deterministic, so identical inputs give byte-identical
output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Item:
    key: str
    exact: str
    approx: float | None = None


@dataclass(frozen=True)
class Record:
    title: str
    items: tuple[Item, ...]


@dataclass(frozen=True)
class Report:
    command: str
    input_digest: str
    records: tuple[Record, ...]


def render_text(report: Report) -> str:
    lines = [f"# command: {report.command}", f"# input: sha256:{report.input_digest}"]
    for rec in report.records:
        lines.append("")
        lines.append(f"[{rec.title}]")
        for item in rec.items:
            if item.approx is None:
                lines.append(f"{item.key} = {item.exact}")
            else:
                lines.append(f"{item.key} = {item.exact} (~{fmt_float(item.approx)})")
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    payload = {
        "command": report.command,
        "input_digest": report.input_digest,
        "records": [
            {
                "title": rec.title,
                "items": [
                    {"key": it.key, "exact": it.exact, "approx": it.approx}
                    for it in rec.items
                ],
            }
            for rec in report.records
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def report_from_json(text: str) -> Report:
    payload = json.loads(text)
    return Report(
        command=payload["command"],
        input_digest=payload["input_digest"],
        records=tuple(
            Record(
                title=rec["title"],
                items=tuple(
                    Item(key=it["key"], exact=it["exact"], approx=it["approx"])
                    for it in rec["items"]
                ),
            )
            for rec in payload["records"]
        ),
    )
