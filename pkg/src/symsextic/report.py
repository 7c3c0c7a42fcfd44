"""Check reports and their JSON / CSV serializations."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction

FIELDS = ("id", "section", "expected", "computed", "provenance", "status")
PROVENANCES = ("paper", "trivial", "derived")
STATUSES = ("match", "known-discrepancy", "sign-mismatch", "mismatch", "skipped")


@dataclass(frozen=True)
class CheckReport:
    id: str
    section: str
    expected: str
    computed: str
    provenance: str
    status: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def as_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in FIELDS}


def render_value(v) -> str:
    """Exact text form; rationals as 'p/q', never floats unless the value is one."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(render_value(x) for x in v) + ")"
    return str(v)


def emit_json(reports) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2) + "\n"


def emit_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in reports:
        w.writerow([getattr(r, f) for f in FIELDS])
    return buf.getvalue()


def parse_json(text: str) -> list[CheckReport]:
    data = json.loads(text)
    out = []
    for obj in data:
        if tuple(obj) != FIELDS:
            raise ValueError(f"report fields {tuple(obj)} differ from {FIELDS}")
        out.append(CheckReport(**obj))
    return out


def emit_text(reports) -> str:
    if not reports:
        return "no checks selected\n"
    w = max(len(r.id) for r in reports)
    lines = [f"{r.id:<{w}}  {r.status:<17}  expected {r.expected}  computed {r.computed}" for r in reports]
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    lines.append(", ".join(f"{n} {s}" for s, n in sorted(counts.items())))
    return "\n".join(lines) + "\n"
