import numpy as np
import pytest
from scipy.integrate import trapezoid
from scipy.linalg import eigh_tridiagonal
from scipy.special import ai_zeros

from cornell_variational.exceptions import BracketExhausted
from cornell_variational.observables import PotentialParams
from cornell_variational.optimizer import optimize
from cornell_variational.reference import (
    ShootingSettings,
    count_nodes,
    outer_turning_point,
    shoot,
    solve_eigenvalue,
    solve_with_wavefunction,
    wavefunction_on_grid,
)
from cornell_variational.trial_basis import QuantumNumbers, TrialParams, trial_wavefunction


class TestEigenvalues:
    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_airy_zeros(self, n):
        # for k = 0, l = 0 the levels are minus the zeros of Ai
        res = solve_eigenvalue(PotentialParams(0.0), QuantumNumbers(0, n))
        assert res.energy == pytest.approx(-ai_zeros(n + 1)[0][n], abs=1e-7)
        assert res.nodes == n

    def test_airy_ground_state_printed(self):
        res = solve_eigenvalue(PotentialParams(0.0), QuantumNumbers(0, 0))
        assert res.energy == pytest.approx(2.3381, abs=2e-4)

    def test_cornell_d_wave(self):
        res = solve_eigenvalue(PotentialParams(1.0), QuantumNumbers(2, 0))
        assert res.energy == pytest.approx(3.8506, abs=2e-4)
        assert res.v2 == pytest.approx(0.4340, abs=2e-3)

    @pytest.mark.parametrize("l,n", [(0, 0), (1, 0), (0, 1)])
    def test_pure_coulomb(self, l, n):
        pot = PotentialParams(1.0, linear_on=False)
        res = solve_eigenvalue(pot, QuantumNumbers(l, n), ShootingSettings(r_max_margin=40.0))
        assert res.energy == pytest.approx(-1.0 / (4 * (n + l + 1) ** 2), abs=1e-7)

    @pytest.mark.parametrize("k,l,n", [(0.0, 0, 0), (0.2, 1, 1), (1.0, 0, 0)])
    def test_step_halving_changes_energy_little(self, k, l, n):
        pot, qn = PotentialParams(k), QuantumNumbers(l, n)
        e1 = solve_eigenvalue(pot, qn, ShootingSettings(step=1e-3)).energy
        e2 = solve_eigenvalue(pot, qn, ShootingSettings(step=5e-4, r_start=5e-5)).energy
        assert abs(e1 - e2) < 1e-7

    @pytest.mark.parametrize("k,l,n", [(0.0, 0, 0), (0.2, 1, 1), (1.0, 2, 0)])
    def test_fourth_order_convergence(self, k, l, n):
        pot, qn = PotentialParams(k), QuantumNumbers(l, n)
        energies = [
            solve_eigenvalue(pot, qn, ShootingSettings(step=h, r_start=h / 10,
                                                       energy_tol=1e-13)).energy
            for h in (0.08, 0.04, 0.02, 0.01)
        ]
        diffs = np.abs(np.diff(energies))
        for coarse, fine in zip(diffs[:-1], diffs[1:]):
            assert coarse <= 64 * fine
        # the observed ratio sits near 2**4
        assert 8.0 < diffs[0] / diffs[1] < 32.0


def finite_difference_levels(k, l, count, radius=25.0):
    """Lowest levels from three-point finite differences, Richardson-extrapolated in h."""
    def levels(h):
        r = h * np.arange(1, int(radius / h))
        diag = 2 / h**2 + l * (l + 1) / r**2 - k / r + r
        off = -np.ones(r.size - 1) / h**2
        return eigh_tridiagonal(diag, off, select="i", select_range=(0, count - 1))[0]

    coarse, mid, fine = (levels(h) for h in (0.004, 0.002, 0.001))
    r1, r2 = (4 * mid - coarse) / 3, (4 * fine - mid) / 3
    return (16 * r2 - r1) / 15


class TestAgainstFiniteDifferences:
    @pytest.mark.parametrize("k,l", [(0.2, 1), (1.0, 0), (1.0, 2)])
    def test_levels(self, k, l):
        expected = finite_difference_levels(k, l, 2)
        for n in (0, 1):
            res = solve_eigenvalue(PotentialParams(k), QuantumNumbers(l, n))
            assert res.energy == pytest.approx(expected[n], abs=1e-6)


class TestWavefunction:
    @pytest.mark.parametrize("k,l,n", [(0.0, 0, 1), (0.2, 2, 1), (1.0, 1, 0)])
    def test_unit_norm_and_nodes(self, k, l, n):
        r, psi = wavefunction_on_grid(PotentialParams(k), QuantumNumbers(l, n))
        assert r[0] == 0.0 and psi[0] == 0.0
        assert trapezoid(psi * psi, r) == pytest.approx(1.0, abs=1e-8)
        assert count_nodes(psi[psi != 0.0]) == n

    def test_overlap_with_optimal_trial_state(self):
        pot, qn = PotentialParams(0.2), QuantumNumbers(2, 0)
        r, psi = wavefunction_on_grid(pot, qn)
        diag = optimize(pot, qn).diagnostics
        trial = trial_wavefunction(qn, TrialParams(diag.a, diag.b), np.maximum(r, 1e-300))
        overlap = trapezoid(psi * trial, r)
        assert overlap**2 >= 0.9999

    @pytest.mark.parametrize("k,l,n", [(0.0, 0, 0), (0.2, 1, 1), (1.0, 2, 1), (1.0, 0, 0)])
    def test_virial_theorem(self, k, l, n):
        # <T> = (k/2)<1/r> + (1/2)<r> for V = -k/r + r
        pot, qn = PotentialParams(k), QuantumNumbers(l, n)
        res, r, psi = solve_with_wavefunction(pot, qn)
        rho = psi * psi
        inv_r = np.divide(rho, r, out=np.zeros_like(r), where=r > 0)
        inv_r2 = np.divide(rho, r * r, out=np.zeros_like(r), where=r > 0)
        kinetic = res.v2 + l * (l + 1) * trapezoid(inv_r2, r)
        virial = kinetic - 0.5 * k * trapezoid(inv_r, r) - 0.5 * trapezoid(rho * r, r)
        assert abs(virial) <= 1e-5

    def test_energy_matches_expectation(self):
        pot, qn = PotentialParams(1.0), QuantumNumbers(1, 1)
        res, r, psi = solve_with_wavefunction(pot, qn)
        rho = psi * psi
        inv = np.divide(rho, r, out=np.zeros_like(r), where=r > 0)
        inv2 = np.divide(rho, r * r, out=np.zeros_like(r), where=r > 0)
        e = res.v2 + 2 * trapezoid(inv2, r) - trapezoid(inv, r) + trapezoid(rho * r, r)
        assert e == pytest.approx(res.energy, abs=1e-5)


class TestPlumbing:
    def test_turning_point_linear(self):
        assert outer_turning_point(PotentialParams(0.0), 0, 2.5) == pytest.approx(2.5)

    def test_turning_point_cornell(self):
        pot = PotentialParams(1.0)
        r = outer_turning_point(pot, 1, 3.0)
        assert 2 / r**2 - 1 / r + r == pytest.approx(3.0, abs=1e-10)

    def test_series_start_is_regular(self):
        r, psi = shoot(PotentialParams(1.0), 2, 3.0, ShootingSettings())
        assert psi[0] == pytest.approx(r[0] ** 3, rel=1e-3)

    def test_bracket_exhausted(self):
        with pytest.raises(BracketExhausted):
            solve_eigenvalue(PotentialParams(0.0), QuantumNumbers(0, 0),
                             ShootingSettings(e_bracket=(30.0, 30.1)))

    @pytest.mark.parametrize("kwargs", [
        {"r_start": 0.0},
        {"r_start": 1.0, "step": 0.01},
        {"energy_tol": 0.0},
        {"e_bracket": (2.0, 1.0)},
    ])
    def test_invalid_settings(self, kwargs):
        with pytest.raises(ValueError):
            ShootingSettings(**kwargs)

    def test_default_bracket(self):
        assert ShootingSettings().bracket(PotentialParams(1.0)) == (-1.5, 25.0)
        assert ShootingSettings().bracket(PotentialParams(1.0, linear_on=False)) == (-1.5, 0.0)
