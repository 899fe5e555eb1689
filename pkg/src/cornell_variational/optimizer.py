"""Selection of the shape parameter ``b``.

Two criteria are available:

* ``DISCREPANCY_MIN`` picks the absolute minimum of the integral
  discrepancy ``d(b)`` over the scan window.
* ``MINIMAL_SENSITIVITY`` picks a stationary point of the energy
  ``E(b)``.  Several may exist and nothing singles one out, so all are
  reported and the one with the smallest discrepancy is returned as a
  convention of this tool.

In both cases ``a`` follows from the virial condition at the chosen ``b``.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import NoMinimumInWindow, ObjectiveEvaluationFailed, QuadratureError
from .observables import energy, state_diagnostics

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_TIE = 1e-12
_FD_STEP = 1e-4


class CriterionKind(enum.Enum):
    DISCREPANCY_MIN = "discrepancy"
    MINIMAL_SENSITIVITY = "energy"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            names = ", ".join(repr(c.value) for c in cls)
            raise ValueError(f"unknown criterion {value!r}; expected one of {names}") from None


@dataclass(frozen=True)
class ScanSettings:
    b_min: float = 0.25
    b_max: float = 4.0
    coarse_step: float = 0.05
    refine_tol: float = 1e-6

    def __post_init__(self):
        if not (0 < self.b_min < self.b_max):
            raise ValueError("need 0 < b_min < b_max")
        if not (0 < self.coarse_step < self.b_max - self.b_min):
            raise ValueError("coarse_step must be positive and smaller than the window")
        if self.refine_tol <= 0:
            raise ValueError("refine_tol must be positive")

    def grid(self):
        count = int(math.floor((self.b_max - self.b_min) / self.coarse_step + 1e-9)) + 1
        return self.b_min + self.coarse_step * np.arange(count)


@dataclass(frozen=True)
class VariationalResult:
    criterion: CriterionKind
    diagnostics: object
    stationary_points: list = field(default_factory=list)
    scan_b: tuple = ()
    scan_objective: tuple = ()


def golden_section(f, lower, upper, tol, f_lower=None, f_upper=None):
    """Minimize a unimodal ``f`` on ``[lower, upper]``.

    Returns ``(x, f(x))`` for the best point evaluated, which includes the
    interval ends when their values are supplied.
    """
    best = []
    if f_lower is not None:
        best.append((f_lower, lower))
    if f_upper is not None:
        best.append((f_upper, upper))
    lo, hi = lower, upper
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    best += [(f1, x1), (f2, x2)]
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = f(x1)
            best.append((f1, x1))
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = f(x2)
            best.append((f2, x2))
    fx, x = min(best, key=lambda item: (item[0], item[1]))
    return x, fx


def _guarded(fn):
    def wrapped(b):
        try:
            return fn(b)
        except QuadratureError as exc:
            raise ObjectiveEvaluationFailed(b, exc) from exc
    return wrapped


def _local_minima(values):
    # interior points strictly below the left neighbour and not above the right one
    return [
        i for i in range(1, len(values) - 1)
        if values[i] < values[i - 1] and values[i] <= values[i + 1]
    ]


def _minimize_discrepancy(pot, qn, scan, quad):
    d_of = _guarded(lambda b: state_diagnostics(pot, qn, float(b), quad).d)
    grid = scan.grid()
    values = [d_of(b) for b in grid]
    minima = _local_minima(values)
    if not minima:
        raise NoMinimumInWindow(
            f"d(b) has no interior minimum on [{scan.b_min}, {scan.b_max}] "
            f"for l={qn.l}, n={qn.n}, k={pot.k}"
        )
    refined = []
    for i in minima:
        b, d = golden_section(d_of, grid[i - 1], grid[i + 1], scan.refine_tol,
                              values[i - 1], values[i + 1])
        if values[i] < d:
            b, d = grid[i], values[i]
        refined.append((float(b), float(d)))
    best_d = min(d for _, d in refined)
    b_opt = min(b for b, d in refined if d <= best_d + _TIE)
    diag = _guarded(lambda b: state_diagnostics(pot, qn, b, quad))(b_opt)
    return VariationalResult(
        CriterionKind.DISCREPANCY_MIN, diag, refined, tuple(map(float, grid)), tuple(values)
    )


def _bisect_root(f, lo, hi, f_lo, tol):
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _minimal_sensitivity(pot, qn, scan, quad):
    e_of = _guarded(lambda b: energy(pot, qn, float(b), quad))

    def slope(b):
        return (e_of(b + _FD_STEP) - e_of(b - _FD_STEP)) / (2 * _FD_STEP)

    grid = scan.grid()
    slopes = [slope(b) for b in grid]
    roots = []
    for i in range(len(grid) - 1):
        s0, s1 = slopes[i], slopes[i + 1]
        if s0 == 0:
            roots.append(float(grid[i]))
        elif s0 * s1 < 0:
            roots.append(float(_bisect_root(slope, grid[i], grid[i + 1], s0, scan.refine_tol)))
    if not roots:
        raise NoMinimumInWindow(
            f"E(b) has no stationary point on [{scan.b_min}, {scan.b_max}] "
            f"for l={qn.l}, n={qn.n}, k={pot.k}"
        )
    stationary = [(float(b), float(e_of(b))) for b in roots]
    candidates = [_guarded(lambda b: state_diagnostics(pot, qn, b, quad))(b) for b in roots]
    chosen = min(candidates, key=lambda dg: (dg.d, dg.b))
    return VariationalResult(
        CriterionKind.MINIMAL_SENSITIVITY, chosen, stationary,
        tuple(map(float, grid)), tuple(slopes),
    )


def optimize(pot, qn, criterion=CriterionKind.DISCREPANCY_MIN, scan=None, quad=None):
    """Choose ``b`` by the requested criterion and return full diagnostics.

    Parameters
    ----------
    pot : PotentialParams
    qn : QuantumNumbers
    criterion : CriterionKind or str
        ``"discrepancy"`` or ``"energy"``.
    scan : ScanSettings, optional
    quad : QuadratureSettings, optional

    Returns
    -------
    VariationalResult
        ``scan_objective`` holds ``d(b)`` on the coarse grid for the
        discrepancy criterion and the finite-difference ``dE/db`` for the
        minimal-sensitivity criterion.

    Raises
    ------
    NoMinimumInWindow
    ObjectiveEvaluationFailed
    """
    criterion = CriterionKind.parse(criterion)
    scan = scan or ScanSettings()
    if criterion is CriterionKind.DISCREPANCY_MIN:
        return _minimize_discrepancy(pot, qn, scan, quad)
    return _minimal_sensitivity(pot, qn, scan, quad)
