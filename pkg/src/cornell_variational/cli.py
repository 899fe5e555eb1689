"""Command-line interface.

Usage::

    cornell-variational compute --k 1 --l 1 --n 1 --criterion discrepancy
    cornell-variational table 2 --format csv --out table2.csv
    cornell-variational reference --k 0 --l 1 --n 0
    cornell-variational compare-criteria

Exit codes: 0 success, 1 some table rows failed, 2 invalid configuration,
3 numerical failure.
"""

import csv
import io
import json
import sys
from dataclasses import asdict

import click

from . import __version__, published
from .exceptions import CornellError
from .observables import PotentialParams
from .optimizer import CriterionKind, ScanSettings, optimize
from .quadrature import QuadratureSettings
from .reference import ShootingSettings, solve_eigenvalue
from .report import build_metadata, compute_table, render_csv, render_json, render_text
from .trial_basis import QuantumNumbers

EXIT_ROW_FAILURE = 1
EXIT_NUMERICAL = 3


def _state_options(fn):
    fn = click.option("--n", "n", type=click.IntRange(min=0), default=0, show_default=True,
                      help="Radial excitation.")(fn)
    fn = click.option("--l", "l", type=click.IntRange(min=0), default=0, show_default=True,
                      help="Orbital quantum number.")(fn)
    fn = click.option("--k", "k", type=click.FloatRange(min=0), default=0.0, show_default=True,
                      help="Coulomb strength.")(fn)
    return fn


def _output_options(fn):
    fn = click.option("--no-timestamp", is_flag=True,
                      help="Omit the generation time from JSON metadata.")(fn)
    fn = click.option("--out", "out", type=click.Path(dir_okay=False, writable=True),
                      help="Write to this file instead of stdout.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]),
                      default="text", show_default=True)(fn)
    return fn


def _variational_options(fn):
    fn = click.option("--quad-rel-tol", type=float, default=1e-10, show_default=True)(fn)
    fn = click.option("--b-step", type=float, default=0.05, show_default=True)(fn)
    fn = click.option("--b-max", type=float, default=4.0, show_default=True)(fn)
    fn = click.option("--b-min", type=float, default=0.25, show_default=True)(fn)
    return fn


def _shooting_options(fn):
    return click.option("--step", "shoot_step", type=float, default=1e-3, show_default=True,
                        help="Numerov step for the reference solver.")(fn)


def _settings(b_min, b_max, b_step, quad_rel_tol, shoot_step=None):
    try:
        scan = ScanSettings(b_min, b_max, b_step)
        quad = QuadratureSettings(rel_tol=quad_rel_tol)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    return scan, quad, _shooting(shoot_step)


def _shooting(shoot_step):
    if shoot_step is None:
        return None
    try:
        return ShootingSettings(step=shoot_step)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _settings_dict(scan, quad, shooting):
    out = {"scan": asdict(scan), "quadrature": asdict(quad)}
    if shooting is not None:
        out["shooting"] = {k: v for k, v in asdict(shooting).items() if k != "e_bracket"}
    return out


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _numerical_failure(exc):
    click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
    sys.exit(EXIT_NUMERICAL)


@click.group()
@click.version_option(__version__, prog_name="cornell-variational")
def cli():
    """Variational and reference bound states of the Cornell potential."""


def _diag_record(criterion, diag):
    return {"criterion": criterion.value, "b": diag.b, "a": diag.a, "e1": diag.e1,
            "e2": diag.e2, "d": diag.d, "v2": diag.v2}


@cli.command()
@_state_options
@click.option("--criterion", type=click.Choice([c.value for c in CriterionKind]),
              default="discrepancy", show_default=True)
@_variational_options
@_output_options
def compute(k, l, n, criterion, b_min, b_max, b_step, quad_rel_tol, fmt, out, no_timestamp):
    """Optimize one state and print b, a, E1, E2, d and <v^2>."""
    scan, quad, _ = _settings(b_min, b_max, b_step, quad_rel_tol)
    kind = CriterionKind.parse(criterion)
    try:
        result = optimize(PotentialParams(k), QuantumNumbers(l, n), kind, scan, quad)
    except CornellError as exc:
        _numerical_failure(exc)
    diag = result.diagnostics
    record = {"k": k, "l": l, "n": n, **_diag_record(kind, diag)}
    if fmt == "json":
        meta = build_metadata(_settings_dict(scan, quad, None), __version__, not no_timestamp)
        record["stationary_points"] = [list(p) for p in result.stationary_points]
        text = json.dumps({"metadata": meta, "result": record}, indent=2) + "\n"
    elif fmt == "csv":
        text = _csv(("k", "l", "n", "criterion", "b", "a", "E1", "E2", "d", "v2"),
                    [[k, l, n, kind.value, diag.b, diag.a, diag.e1, diag.e2, diag.d, diag.v2]])
    else:
        text = (
            f"k={k:g} l={l} n={n} criterion={kind.value}\n"
            f"b    = {diag.b:.4f}\n"
            f"a    = {diag.a:.4f}\n"
            f"E1   = {diag.e1:.4f}\n"
            f"E2   = {diag.e2:.4f}\n"
            f"d    = {diag.d:.4e}\n"
            f"<v2> = {diag.v2:.4f}\n"
        )
    _emit(text, out)


@cli.command()
@click.argument("table_id", type=click.IntRange(1, 2), metavar="{1|2}")
@_variational_options
@_shooting_options
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="Worker processes (default: CPU count).")
@_output_options
def table(table_id, b_min, b_max, b_step, quad_rel_tol, shoot_step, jobs, fmt, out, no_timestamp):
    """Recompute every row of spectrum table 1 (k=0) or 2 (k=0.2, 1)."""
    scan, quad, shooting = _settings(b_min, b_max, b_step, quad_rel_tol, shoot_step)
    rows = compute_table(table_id, scan, quad, shooting, jobs)
    if fmt == "json":
        meta = build_metadata(
            _settings_dict(scan, quad, shooting), __version__, not no_timestamp,
            extra={"table": table_id,
                   "e_vfm_source": "published energies of an independent variational "
                                   "method; comparison data, not computed"},
        )
        text = render_json(rows, meta)
    elif fmt == "csv":
        text = render_csv(rows)
    else:
        text = render_text(rows, table_id)
    _emit(text, out)
    if any(row.failed for row in rows):
        sys.exit(EXIT_ROW_FAILURE)


@cli.command()
@_state_options
@_shooting_options
@_output_options
def reference(k, l, n, shoot_step, fmt, out, no_timestamp):
    """Solve one level with the Numerov shooting method."""
    shooting = _shooting(shoot_step)
    try:
        res = solve_eigenvalue(PotentialParams(k), QuantumNumbers(l, n), shooting)
    except CornellError as exc:
        _numerical_failure(exc)
    record = {"k": k, "l": l, "n": n, "e_num": res.energy, "v2_num": res.v2,
              "nodes": res.nodes, "grid_points": res.grid_points}
    if fmt == "json":
        meta = build_metadata({"shooting": asdict(shooting)}, __version__, not no_timestamp)
        text = json.dumps({"metadata": meta, "result": record}, indent=2) + "\n"
    elif fmt == "csv":
        text = _csv(("k", "l", "n", "E_num", "v2_num", "nodes", "grid_points"),
                    [list(record.values())])
    else:
        text = (f"k={k:g} l={l} n={n}\nE_num    = {res.energy:.4f}\n"
                f"<v2>_num = {res.v2:.4f}\nnodes    = {res.nodes}\n")
    _emit(text, out)


@cli.command("compare-criteria")
@click.option("--k", "k", type=click.FloatRange(min=0), default=published.COMPARISON_STATE[0],
              show_default=True)
@click.option("--l", "l", type=click.IntRange(min=0), default=published.COMPARISON_STATE[1],
              show_default=True)
@click.option("--n", "n", type=click.IntRange(min=0), default=published.COMPARISON_STATE[2],
              show_default=True)
@_variational_options
@_shooting_options
@_output_options
def compare_criteria(k, l, n, b_min, b_max, b_step, quad_rel_tol, shoot_step, fmt, out,
                     no_timestamp):
    """Discrepancy minimum versus minimal sensitivity for one state."""
    scan, quad, shooting = _settings(b_min, b_max, b_step, quad_rel_tol, shoot_step)
    pot, qn = PotentialParams(k), QuantumNumbers(l, n)
    try:
        records = [_diag_record(kind, optimize(pot, qn, kind, scan, quad).diagnostics)
                   for kind in CriterionKind]
        ref = solve_eigenvalue(pot, qn, shooting)
    except CornellError as exc:
        _numerical_failure(exc)
    if fmt == "json":
        meta = build_metadata(_settings_dict(scan, quad, shooting), __version__,
                              not no_timestamp)
        doc = {"metadata": meta, "state": {"k": k, "l": l, "n": n},
               "reference": {"e_num": ref.energy, "v2_num": ref.v2}, "criteria": records}
        text = json.dumps(doc, indent=2) + "\n"
    elif fmt == "csv":
        text = _csv(("criterion", "b", "a", "E1", "E2", "d", "v2", "E_num", "v2_num"),
                    [[*rec.values(), ref.energy, ref.v2] for rec in records])
    else:
        lines = [f"k={k:g} l={l} n={n}   E_num={ref.energy:.4f}  <v2>_num={ref.v2:.4f}",
                 f"{'criterion':>12}  {'b':>7}  {'a':>7}  {'E1':>7}  {'E2':>7}  "
                 f"{'d':>10}  {'<v2>':>7}"]
        for rec in records:
            lines.append(f"{rec['criterion']:>12}  {rec['b']:7.4f}  {rec['a']:7.4f}  "
                         f"{rec['e1']:7.4f}  {rec['e2']:7.4f}  {rec['d']:10.4e}  "
                         f"{rec['v2']:7.4f}")
        text = "\n".join(lines) + "\n"
    _emit(text, out)


def main():
    cli(prog_name="cornell-variational")


if __name__ == "__main__":
    main()
