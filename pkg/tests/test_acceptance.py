"""Acceptance criteria, each checked at its stated tolerance.

Every test prints (and the terminal summary repeats) one PASS/FAIL line.
"""

import time

import numpy as np
import pytest

from cornell_variational import published
from cornell_variational.observables import (
    PotentialParams,
    energy_at_scale,
    local_discrepancy,
    mean_squared_velocity,
    reduced_integrals,
    state_diagnostics,
    virial_scale,
)
from cornell_variational.optimizer import CriterionKind, ScanSettings, optimize
from cornell_variational.quadrature import integrate_semi_infinite
from cornell_variational.reference import ShootingSettings, solve_eigenvalue
from cornell_variational.report import compute_table
from cornell_variational.trial_basis import QuantumNumbers, g_derivatives, g_value

E_TOL = 5e-4
V2_TOL = 2e-3
D_REL = 0.10
ORACLE_E_TOL = 2e-4
ORACLE_V2_TOL = 2e-3
PARAM_TOL = 2e-3

ALL_STATES = [key for table in published.TABLES.values() for key in table]


@pytest.fixture(scope="module")
def tables():
    out, seconds = {}, {}
    for tid in (1, 2):
        start = time.perf_counter()
        out[tid] = compute_table(tid)
        seconds[tid] = time.perf_counter() - start
    out["seconds"] = seconds
    return out


@pytest.fixture(scope="module")
def optima():
    return {key: optimize(PotentialParams(key[0]), QuantumNumbers(key[1], key[2])).diagnostics
            for key in ALL_STATES}


@pytest.fixture(scope="module")
def comparison():
    k, l, n = published.COMPARISON_STATE
    pot, qn = PotentialParams(k), QuantumNumbers(l, n)
    return {kind.value: optimize(pot, qn, kind).diagnostics for kind in CriterionKind}


def _close(failures, label, got, want, tol):
    if got is None or not abs(got - want) <= tol:
        failures.append(f"{label}={got!r} vs {want} (tol {tol:g})")


def _row_failures(rows):
    failures = []
    for row in rows:
        tag = f"k={row.k:g},l={row.l},n={row.n}"
        if row.failed:
            failures.append(f"{tag}: {row.error}")
            continue
        ref = published.lookup(row.k, row.l, row.n)
        _close(failures, f"{tag} E1", row.e1, ref["e1"], E_TOL)
        _close(failures, f"{tag} E2", row.e2, ref["e2"], E_TOL)
        _close(failures, f"{tag} v2", row.v2, ref["v2"], V2_TOL)
        _close(failures, f"{tag} d", row.d, ref["d"], D_REL * ref["d"])
    return failures


def test_criterion_1_table_1(tables, acceptance_report):
    failures = _row_failures(tables[1])
    if tables["seconds"][1] >= 60.0:
        failures.append(f"runtime {tables['seconds'][1]:.1f} s >= 60 s")
    acceptance_report("criterion 1: table 1 (k=0, 6 states) E1/E2/v2/d, under 1 minute",
                      failures)


def test_criterion_2_table_2(tables, acceptance_report):
    failures = _row_failures(tables[2])
    hard = next(r for r in tables[2] if (r.k, r.l, r.n) == (1.0, 0, 0))
    _close(failures, "k=1,l=0,n=0 E1", hard.e1, 1.4009, 1e-3)
    acceptance_report("criterion 2: table 2 (k=0.2 and k=1, 12 states) E1/E2/v2/d",
                      failures)


def _comparison_failures(diag, ref, keys):
    failures = []
    tols = {"a": PARAM_TOL, "b": PARAM_TOL, "e1": E_TOL, "e2": E_TOL, "v2": V2_TOL}
    for key in keys:
        _close(failures, key, getattr(diag, key), ref[key], tols[key])
    return failures


def test_criterion_3_discrepancy_min(comparison, acceptance_report):
    failures = _comparison_failures(comparison["discrepancy"],
                                    published.CRITERION_COMPARISON["discrepancy"],
                                    ("a", "b", "e1", "e2", "v2"))
    acceptance_report("criterion 3a: closing comparison, discrepancy minimum", failures)


def test_criterion_3_minimal_sensitivity(comparison, acceptance_report):
    failures = _comparison_failures(comparison["energy"],
                                    published.CRITERION_COMPARISON["energy"],
                                    ("a", "b", "e1", "v2"))
    acceptance_report("criterion 3b: closing comparison, minimal sensitivity a/b/E1/v2",
                      failures)


def test_criterion_3_minimal_sensitivity_e2(comparison, acceptance_report):
    failures = _comparison_failures(comparison["energy"],
                                    published.CRITERION_COMPARISON["energy"], ("e2",))
    acceptance_report("criterion 3c: closing comparison, minimal sensitivity E2", failures)


def test_criterion_4_oracle(tables, acceptance_report):
    failures = []
    for rows in (tables[1], tables[2]):
        for row in rows:
            tag = f"k={row.k:g},l={row.l},n={row.n}"
            if row.failed:
                failures.append(f"{tag}: {row.error}")
                continue
            ref = published.lookup(row.k, row.l, row.n)
            _close(failures, f"{tag} E_num", row.e_num, ref["e_num"], ORACLE_E_TOL)
            _close(failures, f"{tag} v2_num", row.v2_num, ref["v2_num"], ORACLE_V2_TOL)
    airy = solve_eigenvalue(PotentialParams(0.0), QuantumNumbers(0, 0)).energy
    _close(failures, "Airy E", airy, 2.3381, ORACLE_E_TOL)
    acceptance_report("criterion 4: reference solver, 18 E_num and v2_num values + Airy zero",
                      failures)


# ---------------------------------------------------------------- criterion 5


def _richardson(f, x, h1=1e-4, h2=1e-5):
    c = lambda h: (f(x + h) - f(x - h)) / (2 * h)  # noqa: E731
    r2 = (h1 / h2) ** 2
    return (r2 * c(h2) - c(h1)) / (r2 - 1)


def _property_failures(optima):
    failures = []

    # d(b) >= 0 across scans
    for k in (0.0, 0.2, 1.0):
        for l, n in ((0, 0), (1, 1), (2, 1)):
            pot, qn = PotentialParams(k), QuantumNumbers(l, n)
            for b in ScanSettings().grid():
                d = state_diagnostics(pot, qn, float(b)).d
                if not d >= 0:
                    failures.append(f"d<0 at k={k},l={l},n={n},b={b:.2f}")

    # int D^2 dr (in r, from the local residual) against <H^2>/<H>^2 - 1
    for (k, l, n), diag in optima.items():
        pot, qn = PotentialParams(k), QuantumNumbers(l, n)
        integral = integrate_semi_infinite(
            lambda r: local_discrepancy(pot, qn, diag.b, r) ** 2, diag.b, scale=diag.a).value
        ratio = diag.e2**2 / diag.e1**2 - 1.0
        for label, value in (("int D^2", integral), ("d", diag.d)):
            if abs(value - ratio) > 1e-8:
                failures.append(f"identity {label} k={k},l={l},n={n}: {value - ratio:.2e}")

    # virial stationarity on a 3 x 2 x 5 (l, n, b) grid
    for k in (0.2, 1.0):
        pot = PotentialParams(k)
        for l in (0, 1, 2):
            for n in (0, 1):
                for b in (0.7, 1.0, 1.5, 2.0, 3.0):
                    ri = reduced_integrals(QuantumNumbers(l, n), b)
                    a = virial_scale(pot, ri)
                    h = 1e-5 * a
                    slope = (energy_at_scale(pot, ri, a + h)
                             - energy_at_scale(pot, ri, a - h)) / (2 * h)
                    e = energy_at_scale(pot, ri, a)
                    if abs(slope) > 1e-8 * max(1.0, abs(e)):
                        failures.append(f"dE/da={slope:.1e} at k={k},l={l},n={n},b={b}")

    # pure-Coulomb exactness
    for k in (0.2, 1.0):
        pot = PotentialParams(k, linear_on=False)
        for l in (0, 1, 2):
            for n in (0, 1):
                diag = state_diagnostics(pot, QuantumNumbers(l, n), 1.0)
                exact = -(k**2) / (4 * (n + l + 1) ** 2)
                if diag.d > 1e-8 or abs(diag.e1 - exact) > 1e-9:
                    failures.append(f"Coulomb k={k},l={l},n={n}: d={diag.d:.1e}, "
                                    f"dE={diag.e1 - exact:.1e}")

    # <v^2> = -int psi psi'' dr
    for l, n, b in ((0, 0, 1.2), (1, 1, 1.6769), (2, 1, 2.3)):
        qn = QuantumNumbers(l, n)
        pot = PotentialParams(1.0)
        diag = state_diagnostics(pot, qn, b)
        norm = integrate_semi_infinite(lambda x: g_value(qn, b, x) ** 2, b).value
        curv = integrate_semi_infinite(
            lambda x: -g_value(qn, b, x) * g_derivatives(qn, b, x)[2], b).value
        by_parts = diag.a**2 * curv / norm
        v2 = mean_squared_velocity(pot, qn, b)
        if abs(v2 - by_parts) > 1e-8 * abs(by_parts):
            failures.append(f"v2 by parts l={l},n={n}: {v2} vs {by_parts}")

    # derivative finite-difference checks
    for l in (0, 1, 2):
        for n in (0, 1, 2):
            for b in (0.6, 1.0, 1.7, 2.5):
                qn = QuantumNumbers(l, n)
                xs = np.linspace(0.05, 3.0 ** (1 / b) + 1.0, 20)
                _, g1, g2 = g_derivatives(qn, b, xs)
                fd1 = np.array([_richardson(lambda t: g_value(qn, b, t), x) for x in xs])
                fd2 = np.array([_richardson(lambda t: g_derivatives(qn, b, t)[1], x)
                                for x in xs])
                for name, exact, approx in (("G'", g1, fd1), ("G''", g2, fd2)):
                    scale = np.maximum(np.abs(exact), np.abs(exact).max())
                    worst = float(np.max(np.abs(exact - approx) / scale))
                    if worst > 1e-6:
                        failures.append(f"{name} l={l},n={n},b={b}: {worst:.1e}")

    # Numerov step-halving order on three table cases
    for k, l, n in ((0.0, 0, 0), (0.2, 1, 1), (1.0, 2, 0)):
        pot, qn = PotentialParams(k), QuantumNumbers(l, n)
        es = [solve_eigenvalue(pot, qn, ShootingSettings(step=h, r_start=h / 10,
                                                         energy_tol=1e-13)).energy
              for h in (0.04, 0.02, 0.01)]
        if abs(es[0] - es[1]) > 64 * abs(es[1] - es[2]):
            failures.append(f"Numerov order k={k},l={l},n={n}: {es}")
    return failures


def test_criterion_5_properties(optima, acceptance_report):
    acceptance_report("criterion 5: property suite (no published data)",
                      _property_failures(optima))


def test_criterion_6_ground_state_bound(tables, acceptance_report):
    failures = []
    for rows in (tables[1], tables[2]):
        for row in rows:
            if row.n != 0:
                continue
            if row.failed or not row.e1 >= row.e_num - 1e-6:
                failures.append(f"k={row.k:g},l={row.l}: E1={row.e1} < E_num={row.e_num}")
    acceptance_report("criterion 6: E1 >= E_num - 1e-6 for every n=0 table state", failures)
