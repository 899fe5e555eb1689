"""scikit-learn style front ends for the variational and shooting solvers.

Both estimators are configured entirely through constructor parameters,
so ``get_params``/``set_params``/``clone`` work as usual.  ``fit`` ignores
its ``X`` argument (the problem is defined by the parameters alone) and
``predict`` maps radii to wavefunction amplitudes.
"""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_nonnegative, check_nonnegative_int, check_positive, check_radii
from .observables import PotentialParams, apply_hamiltonian, local_discrepancy
from .optimizer import CriterionKind, ScanSettings, optimize
from .quadrature import QuadratureSettings
from .reference import ShootingSettings, solve_with_wavefunction
from .trial_basis import QuantumNumbers, TrialParams, trial_wavefunction


class VariationalSolver(BaseEstimator):
    """Virial-constrained Laguerre trial state for one Cornell level.

    Parameters
    ----------
    k : float
        Coulomb strength.
    l, n : int
        Orbital and radial quantum numbers.
    criterion : {"discrepancy", "energy"}
        Minimize the integral discrepancy, or take a stationary point of the
        energy (minimal sensitivity).
    linear : bool
        Include the confining ``+r`` term.  ``False`` gives the pure Coulomb
        problem, for which ``b = 1`` is exact.
    b_min, b_max, b_step, refine_tol : float
        Scan window, coarse step and refinement tolerance for ``b``.
    quad_rel_tol, quad_abs_tol : float
        Quadrature tolerances.

    Attributes
    ----------
    b_, a_ : float
        Optimal shape and the virial scale at that shape.
    energy_ : float
        ``<H>``.
    energy_rms_ : float
        ``sqrt(<H**2>)``.
    discrepancy_ : float
        Integral discrepancy.
    v2_ : float
        ``<v**2>``.
    stationary_points_ : list of (b, objective)
    result_ : VariationalResult
    """

    def __init__(self, k=0.0, l=0, n=0, criterion="discrepancy", linear=True,
                 b_min=0.25, b_max=4.0, b_step=0.05, refine_tol=1e-6,
                 quad_rel_tol=1e-10, quad_abs_tol=1e-13):
        self.k = k
        self.l = l
        self.n = n
        self.criterion = criterion
        self.linear = linear
        self.b_min = b_min
        self.b_max = b_max
        self.b_step = b_step
        self.refine_tol = refine_tol
        self.quad_rel_tol = quad_rel_tol
        self.quad_abs_tol = quad_abs_tol

    def _problem(self):
        pot = PotentialParams(check_nonnegative(self.k, "k"), bool(self.linear))
        qn = QuantumNumbers(check_nonnegative_int(self.l, "l"), check_nonnegative_int(self.n, "n"))
        return pot, qn

    def _quad(self):
        return QuadratureSettings(check_positive(self.quad_rel_tol, "quad_rel_tol"),
                                  check_positive(self.quad_abs_tol, "quad_abs_tol"))

    def fit(self, X=None, y=None):
        """Optimize ``b`` for the configured state.  ``X`` and ``y`` are ignored."""
        pot, qn = self._problem()
        scan = ScanSettings(self.b_min, self.b_max, self.b_step, self.refine_tol)
        criterion = CriterionKind.parse(self.criterion)
        self.result_ = optimize(pot, qn, criterion, scan, self._quad())
        diag = self.result_.diagnostics
        self.b_ = float(diag.b)
        self.a_ = float(diag.a)
        self.energy_ = float(diag.e1)
        self.energy_rms_ = float(diag.e2)
        self.discrepancy_ = float(diag.d)
        self.v2_ = float(diag.v2)
        self.stationary_points_ = list(self.result_.stationary_points)
        return self

    def predict(self, X):
        """Normalized trial wavefunction at radii ``X``."""
        check_is_fitted(self, "result_")
        r = check_radii(X)
        _, qn = self._problem()
        return trial_wavefunction(qn, TrialParams(self.a_, self.b_), r, settings=self._quad())

    def apply_hamiltonian(self, X):
        """``(H psi)(r)`` of the fitted trial state at radii ``X``."""
        check_is_fitted(self, "result_")
        pot, qn = self._problem()
        return apply_hamiltonian(pot, qn, TrialParams(self.a_, self.b_), check_radii(X),
                                 self._quad())

    def local_discrepancy(self, X):
        """``(H psi)(r)/<H> - psi(r)`` at radii ``X``."""
        check_is_fitted(self, "result_")
        pot, qn = self._problem()
        return local_discrepancy(pot, qn, self.b_, check_radii(X), self._quad())

    def score(self, X=None, y=None):
        """Negative integral discrepancy (higher is better)."""
        check_is_fitted(self, "result_")
        return -self.discrepancy_


class NumerovSolver(BaseEstimator):
    """Shooting/Numerov eigensolver for one level, used as the numerical oracle.

    Attributes
    ----------
    energy_ : float
    v2_ : float
    nodes_ : int
    grid_ : ndarray
        Radial grid, starting at the origin.
    psi_ : ndarray
        Normalized eigenfunction on ``grid_``.
    """

    def __init__(self, k=0.0, l=0, n=0, linear=True, r_start=1e-4, step=1e-3,
                 r_max_margin=15.0, energy_tol=1e-9):
        self.k = k
        self.l = l
        self.n = n
        self.linear = linear
        self.r_start = r_start
        self.step = step
        self.r_max_margin = r_max_margin
        self.energy_tol = energy_tol

    def fit(self, X=None, y=None):
        """Solve for the configured level.  ``X`` and ``y`` are ignored."""
        pot = PotentialParams(check_nonnegative(self.k, "k"), bool(self.linear))
        qn = QuantumNumbers(check_nonnegative_int(self.l, "l"), check_nonnegative_int(self.n, "n"))
        settings = ShootingSettings(
            r_start=check_positive(self.r_start, "r_start"),
            step=check_positive(self.step, "step"),
            r_max_margin=check_positive(self.r_max_margin, "r_max_margin"),
            energy_tol=check_positive(self.energy_tol, "energy_tol"),
        )
        result, self.grid_, self.psi_ = solve_with_wavefunction(pot, qn, settings)
        self.energy_ = result.energy
        self.v2_ = result.v2
        self.nodes_ = result.nodes
        return self

    def predict(self, X):
        """Eigenfunction at radii ``X`` by linear interpolation (zero past the grid)."""
        check_is_fitted(self, "psi_")
        r = check_radii(X)
        return np.interp(r, self.grid_, self.psi_, right=0.0)


__all__ = ["NumerovSolver", "VariationalSolver"]
