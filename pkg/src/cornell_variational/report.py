"""Spectrum tables: row computation and text/CSV/JSON rendering."""

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from datetime import datetime, timezone

from . import published
from .exceptions import CornellError
from .observables import PotentialParams
from .optimizer import CriterionKind, optimize
from .reference import solve_eigenvalue
from .trial_basis import QuantumNumbers

ERROR_TOKEN = "ERR"
CSV_HEADER = ("k", "l", "n", "E_num", "E_vfm", "E1", "E2", "d", "v2_num", "v2")
D_FLAG_RELATIVE = 0.10

TABLE_STATES = {
    1: [(0.0, l, n) for l in (0, 1, 2) for n in (0, 1)],
    2: [(k, l, n) for k in (0.2, 1.0) for l in (0, 1, 2) for n in (0, 1)],
}


@dataclass
class SpectrumRow:
    k: float
    l: int
    n: int
    e_num: float = None
    e_vfm: float = None
    e1: float = None
    e2: float = None
    d: float = None
    v2_num: float = None
    v2: float = None
    error: str = None

    @property
    def failed(self):
        return self.error is not None


ROW_FIELDS = tuple(f.name for f in fields(SpectrumRow) if f.name != "error")

ROW_SCHEMA = {
    "type": "object",
    "required": list(ROW_FIELDS),
    "properties": {
        "k": {"type": "number", "minimum": 0},
        "l": {"type": "integer", "minimum": 0},
        "n": {"type": "integer", "minimum": 0},
        **{name: {"type": ["number", "null"]} for name in ROW_FIELDS[3:]},
        "error": {"type": "string"},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["metadata", "rows"],
    "properties": {
        "metadata": {
            "type": "object",
            "required": ["tool", "version", "settings"],
            "properties": {
                "tool": {"type": "string"},
                "version": {"type": "string"},
                "settings": {"type": "object"},
                "generated_at": {"type": "string"},
            },
        },
        "rows": {"type": "array", "items": ROW_SCHEMA},
    },
}


def compute_row(k, l, n, scan=None, quad=None, shooting=None):
    """Variational and reference columns for one state; never raises on numerics."""
    row = SpectrumRow(float(k), int(l), int(n))
    known = published.lookup(k, l, n)
    if known is not None:
        row.e_vfm = known["e_vfm"]
    pot = PotentialParams(float(k))
    qn = QuantumNumbers(int(l), int(n))
    try:
        diag = optimize(pot, qn, CriterionKind.DISCREPANCY_MIN, scan, quad).diagnostics
        ref = solve_eigenvalue(pot, qn, shooting)
    except CornellError as exc:
        row.error = f"{type(exc).__name__}: {exc}"
        return row
    row.e1, row.e2, row.d, row.v2 = diag.e1, diag.e2, diag.d, diag.v2
    row.e_num, row.v2_num = ref.energy, ref.v2
    return row


def _row_job(args):
    return compute_row(*args)


def compute_table(table_id, scan=None, quad=None, shooting=None, jobs=None):
    """All rows of table ``table_id`` (1 or 2), in fixed order.

    Rows are computed in a process pool of ``jobs`` workers (default: CPU
    count); ``jobs=1`` runs in-process.
    """
    if table_id not in TABLE_STATES:
        raise ValueError(f"table id must be 1 or 2, got {table_id!r}")
    tasks = [(k, l, n, scan, quad, shooting) for k, l, n in TABLE_STATES[table_id]]
    jobs = jobs or os.cpu_count() or 1
    if jobs == 1:
        return [_row_job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(_row_job, tasks))


def discrepancy_flags(rows):
    """States whose ``d`` differs from the published value by more than 10 %."""
    flagged = []
    for row in rows:
        known = published.lookup(row.k, row.l, row.n)
        if row.failed or known is None:
            continue
        if abs(row.d - known["d"]) > D_FLAG_RELATIVE * known["d"]:
            flagged.append((row.k, row.l, row.n))
    return flagged


def _fmt(value, spec):
    if value is None:
        return ""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return format(value, spec)


def render_text(rows, table_id=None):
    with_k = table_id != 1
    cols = (["k"] if with_k else []) + ["l", "n", "E_num"] + (["E_vfm"] if with_k else [])
    cols += ["E1", "E2", "d", "v2_num", "v2"]
    flagged = set(discrepancy_flags(rows))
    lines = ["  ".join(f"{c:>10}" for c in cols)]
    for row in rows:
        head = ([_fmt(row.k, "g")] if with_k else []) + [str(row.l), str(row.n)]
        if row.failed:
            body = [ERROR_TOKEN] * (len(cols) - len(head))
        else:
            body = [_fmt(row.e_num, ".4f")] + ([_fmt(row.e_vfm, ".4f")] if with_k else [])
            body += [_fmt(row.e1, ".4f"), _fmt(row.e2, ".4f"), _fmt(row.d, ".4e"),
                     _fmt(row.v2_num, ".4f"), _fmt(row.v2, ".4f")]
        line = "  ".join(f"{c:>10}" for c in head + body)
        if (row.k, row.l, row.n) in flagged:
            line += "  *"
        lines.append(line)
    for row in rows:
        if row.failed:
            lines.append(f"# k={row.k:g} l={row.l} n={row.n}: {row.error}")
    if flagged:
        lines.append("# * d deviates from the published value by more than 10%")
    return "\n".join(lines) + "\n"


def _csv_cell(value):
    if value is None:
        return ""
    return repr(value) if isinstance(value, float) else str(value)


def render_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        values = [getattr(row, name) for name in ROW_FIELDS]
        cells = [_csv_cell(v) for v in values]
        if row.failed:
            cells = cells[:3] + [ERROR_TOKEN if name != "e_vfm" else cells[4]
                                 for name in ROW_FIELDS[3:]]
        writer.writerow(cells)
    return buf.getvalue()


def build_metadata(settings, version, timestamp=True, extra=None):
    meta = {"tool": "cornell-variational", "version": version, "settings": settings}
    if extra:
        meta.update(extra)
    if timestamp:
        meta["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return meta


def _json_default(value):
    raise TypeError(f"not JSON serializable: {value!r}")


def _row_dict(row):
    data = asdict(row)
    if data["error"] is None:
        del data["error"]
    for key, value in data.items():
        if isinstance(value, float) and not math.isfinite(value):
            data[key] = None
    return data


def render_json(rows, metadata):
    doc = {"metadata": metadata, "rows": [_row_dict(r) for r in rows]}
    return json.dumps(doc, indent=2, default=_json_default) + "\n"
