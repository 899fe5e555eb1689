"""Variational bound states of the Cornell potential.

Trial states ``N sqrt(a) G(b, a r)`` built from Laguerre polynomials have
their scale fixed by the virial condition and their shape chosen by
minimizing the integral discrepancy ``<H**2>/<H>**2 - 1``.  A Numerov
shooting solver provides independent reference eigenvalues.
"""

from .estimators import NumerovSolver, VariationalSolver
from .exceptions import CornellError
from .observables import (
    PotentialParams,
    StateDiagnostics,
    discrepancy,
    energy,
    energy_squared,
    local_discrepancy,
    mean_squared_velocity,
    state_diagnostics,
    virial_scale,
)
from .optimizer import CriterionKind, ScanSettings, VariationalResult, optimize
from .quadrature import QuadratureSettings, integrate_semi_infinite
from .reference import EigenResult, ShootingSettings, solve_eigenvalue, wavefunction_on_grid
from .trial_basis import QuantumNumbers, TrialParams

__version__ = "0.1.0"

__all__ = [
    "CornellError",
    "CriterionKind",
    "EigenResult",
    "NumerovSolver",
    "PotentialParams",
    "QuadratureSettings",
    "QuantumNumbers",
    "ScanSettings",
    "ShootingSettings",
    "StateDiagnostics",
    "TrialParams",
    "VariationalResult",
    "VariationalSolver",
    "discrepancy",
    "energy",
    "energy_squared",
    "integrate_semi_infinite",
    "local_discrepancy",
    "mean_squared_velocity",
    "optimize",
    "solve_eigenvalue",
    "state_diagnostics",
    "virial_scale",
    "wavefunction_on_grid",
]
