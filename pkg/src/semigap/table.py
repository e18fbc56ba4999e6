"""Interval tables of members, in the explicit-list or set-difference layout.

Intervals ending at or below ``list_threshold`` list their members; later ones
are written as ``[lo,hi] ∖ {gaps}``, or ``all values`` when there are no gaps.
"""
from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass

from .sieve import ScanReport, gaps_in

LIST_THRESHOLD = 400
SETMINUS = "∖"
ALL_VALUES = "all values"
NO_VALUES = "none"

TABLE_SCHEMA = {
    "type": "object",
    "required": ["intervals"],
    "properties": {
        "intervals": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["lo", "hi", "mode", "values"],
                "properties": {
                    "lo": {"type": "integer", "minimum": 1},
                    "hi": {"type": "integer", "minimum": 1},
                    "mode": {"enum": ["list", "complement"]},
                    "values": {"type": "array", "items": {"type": "integer"}},
                },
                "additionalProperties": False,
            },
        }
    },
    "additionalProperties": False,
}


@dataclass(frozen=True)
class TableRow:
    lo: int
    hi: int
    mode: str  # "list": values are members; "complement": values are gaps
    values: tuple[int, ...]

    @property
    def interval(self) -> str:
        return f"[{self.lo},{self.hi}]"

    @property
    def text(self) -> str:
        if self.mode == "list":
            return ", ".join(map(str, self.values)) if self.values else NO_VALUES
        if not self.values:
            return ALL_VALUES
        return f"{self.interval} {SETMINUS} {{{', '.join(map(str, self.values))}}}"

    def members(self) -> set[int]:
        if self.mode == "list":
            return set(self.values)
        return set(range(self.lo, self.hi + 1)) - set(self.values)

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "mode": self.mode, "values": list(self.values)}


def emit_table(report: ScanReport, intervals, list_threshold: int = LIST_THRESHOLD) -> list[TableRow]:
    rows = []
    for lo, hi in intervals:
        gaps = gaps_in(report, lo, hi)
        if hi <= list_threshold:
            rows.append(TableRow(lo, hi, "list", tuple(report.members(lo, hi))))
        else:
            rows.append(TableRow(lo, hi, "complement", tuple(gaps)))
    return rows


_SETDIFF = re.compile(r"^\[(\d+),(\d+)\]\s*" + SETMINUS + r"\s*\{([\d,\s]*)\}$")


def parse_row(text: str, lo: int, hi: int) -> set[int]:
    """Member set of ``[lo, hi]`` described by a row's text."""
    text = text.strip()
    if text == ALL_VALUES:
        return set(range(lo, hi + 1))
    if text == NO_VALUES:
        return set()
    m = _SETDIFF.match(text)
    if m:
        if (int(m[1]), int(m[2])) != (lo, hi):
            raise ValueError(f"row interval [{m[1]},{m[2]}] does not match [{lo},{hi}]")
        gaps = {int(x) for x in m[3].split(",") if x.strip()}
        return set(range(lo, hi + 1)) - gaps
    return {int(x) for x in text.split(",")}


def render_markdown(rows) -> str:
    out = ["| Interval | Members |", "|---|---|"]
    out += [f"| {r.interval} | {r.text} |" for r in rows]
    return "\n".join(out) + "\n"


def render_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lo", "hi", "mode", "values"])
    for r in rows:
        w.writerow([r.lo, r.hi, r.mode, " ".join(map(str, r.values))])
    return buf.getvalue()


def render_json(rows) -> str:
    return json.dumps({"intervals": [r.to_dict() for r in rows]}, indent=2) + "\n"


def render(rows, fmt: str) -> str:
    try:
        return {"md": render_markdown, "csv": render_csv, "json": render_json}[fmt](rows)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}") from None


def rows_from_csv(text: str) -> list[TableRow]:
    rd = csv.DictReader(io.StringIO(text))
    return [TableRow(int(d["lo"]), int(d["hi"]), d["mode"],
                     tuple(int(x) for x in d["values"].split())) for d in rd]


def rows_from_markdown(text: str) -> list[TableRow]:
    """Recover rows from :func:`render_markdown` output (mode is inferred from the text)."""
    rows = []
    for line in text.splitlines()[2:]:
        interval, body = [c.strip() for c in line.strip("|").split("|")]
        lo, hi = map(int, interval.strip("[]").split(","))
        members = parse_row(body, lo, hi)
        if body == ALL_VALUES or SETMINUS in body:
            rows.append(TableRow(lo, hi, "complement",
                                 tuple(sorted(set(range(lo, hi + 1)) - members))))
        else:
            rows.append(TableRow(lo, hi, "list", tuple(sorted(members))))
    return rows
