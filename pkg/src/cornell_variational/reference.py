"""Shooting eigensolver for the radial equation, used as a numerical oracle.

The regular solution is started from its power series at ``r_start`` and
integrated outward with a fixed-step Numerov scheme up to
``r_max = r_turn(E) + margin``.  By Sturm oscillation the number of sign
changes on that grid counts the Dirichlet eigenvalues below ``E``, so the
``n``-th level is located by bisection on the node count.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import brentq, minimize_scalar

from .exceptions import BracketExhausted, NodeMismatch

_SERIES_TERMS = 6
_WIDENINGS = 5


@dataclass(frozen=True)
class ShootingSettings:
    """Grid and search parameters for :func:`solve_eigenvalue`.

    ``e_bracket=None`` means ``(-k**2/2 - 1, 25)`` with the linear term and
    ``(-k**2/2 - 1, 0)`` without it.  ``max_radius`` caps the grid when no
    outer turning point exists (pure Coulomb near threshold).
    """

    r_start: float = 1e-4
    step: float = 1e-3
    r_max_margin: float = 15.0
    energy_tol: float = 1e-9
    e_bracket: tuple = None
    max_radius: float = 200.0

    def __post_init__(self):
        if not (0 < self.r_start < 10 * self.step):
            raise ValueError("need 0 < r_start < 10 * step")
        if self.energy_tol <= 0 or self.r_max_margin <= 0:
            raise ValueError("energy_tol and r_max_margin must be positive")
        if self.e_bracket is not None and not self.e_bracket[0] < self.e_bracket[1]:
            raise ValueError("e_bracket must be ordered (low, high)")

    def bracket(self, pot):
        if self.e_bracket is not None:
            return tuple(map(float, self.e_bracket))
        return (-pot.k**2 / 2.0 - 1.0, 25.0 if pot.linear_on else 0.0)


@dataclass(frozen=True)
class EigenResult:
    energy: float
    nodes: int
    v2: float
    grid_points: int


def effective_potential(pot, l, r):
    lin = 1.0 if pot.linear_on else 0.0
    return l * (l + 1) / r**2 - pot.k / r + lin * r


def outer_turning_point(pot, l, e, max_radius=200.0):
    """Largest ``r`` with ``V_eff(r) = e``, or the well bottom if ``e`` lies below it."""
    veff = lambda r: effective_potential(pot, l, r) - e  # noqa: E731
    hi = abs(e) + pot.k + 2.0
    while veff(hi) <= 0:
        hi *= 2.0
        if hi >= max_radius:
            return max_radius
    if l == 0 and pot.k == 0:
        lo = 1e-12
    else:
        well = minimize_scalar(veff, bounds=(1e-6, hi), method="bounded")
        lo = well.x
    if veff(lo) >= 0:
        return float(lo)
    return float(brentq(veff, lo, hi, xtol=1e-12))


def _series_start(pot, l, e, r):
    # r**(l+1) sum_j c_j r**j, c_j j (2l+j+1) = -(k c_{j-1} + E c_{j-2} - lin c_{j-3})
    lin = 1.0 if pot.linear_on else 0.0
    c = [1.0]
    for j in range(1, _SERIES_TERMS):
        acc = pot.k * c[j - 1]
        if j >= 2:
            acc += e * c[j - 2]
        if j >= 3:
            acc -= lin * c[j - 3]
        c.append(-acc / (j * (2 * l + j + 1)))
    return r ** (l + 1) * np.polyval(c[::-1], r)


def _grid(pot, l, e, settings):
    r_max = min(outer_turning_point(pot, l, e, settings.max_radius) + settings.r_max_margin,
                settings.max_radius)
    count = int(math.ceil((r_max - settings.r_start) / settings.step)) + 1
    return settings.r_start + settings.step * np.arange(count)


def shoot(pot, l, e, settings):
    """Outward Numerov solution at energy ``e``; returns ``(r, psi)``."""
    r = _grid(pot, l, e, settings)
    w = (settings.step**2 / 12.0) * (effective_potential(pot, l, r) - e)
    psi = np.empty_like(r)
    psi[:2] = _series_start(pot, l, e, r[:2])
    wl = w.tolist()
    out = psi.tolist()
    p_prev, p_cur = out[0], out[1]
    for i in range(1, len(wl) - 1):
        p_next = (2.0 * (1.0 + 5.0 * wl[i]) * p_cur - (1.0 - wl[i - 1]) * p_prev) / (1.0 - wl[i + 1])
        out[i + 1] = p_next
        p_prev, p_cur = p_cur, p_next
    return r, np.asarray(out)


def count_nodes(psi):
    sign = np.signbit(psi)
    return int(np.count_nonzero(sign[1:] != sign[:-1]))


def _nodes_at(pot, l, e, settings):
    return count_nodes(shoot(pot, l, e, settings)[1])


def _bracket(pot, qn, settings):
    lo, hi = settings.bracket(pot)
    for _ in range(_WIDENINGS + 1):
        n_lo = _nodes_at(pot, qn.l, lo, settings)
        n_hi = _nodes_at(pot, qn.l, hi, settings)
        if n_lo <= qn.n < n_hi:
            return lo, hi
        width = hi - lo
        if n_lo > qn.n:
            lo -= width
        if n_hi <= qn.n:
            hi += width
    raise BracketExhausted(
        f"no bracket for l={qn.l}, n={qn.n}, k={pot.k} after {_WIDENINGS} widenings"
    )


def _trim_tail(r, psi, r_turn):
    # beyond the turning point the neglected growing solution takes over;
    # cut at the smallest |psi| there and zero the rest
    outside = np.nonzero(r >= r_turn)[0]
    if outside.size == 0:
        return psi
    cut = outside[0] + int(np.argmin(np.abs(psi[outside])))
    psi = psi.copy()
    psi[cut + 1:] = 0.0
    return psi


def solve_with_wavefunction(pot, qn, settings=None):
    """Return ``(EigenResult, r, psi)`` for level ``(l, n)``."""
    settings = settings or ShootingSettings()
    lo, hi = _bracket(pot, qn, settings)
    while hi - lo > settings.energy_tol:
        mid = 0.5 * (lo + hi)
        if _nodes_at(pot, qn.l, mid, settings) <= qn.n:
            lo = mid
        else:
            hi = mid
    energy = 0.5 * (lo + hi)
    r, psi = shoot(pot, qn.l, lo, settings)
    psi = _trim_tail(r, psi, outer_turning_point(pot, qn.l, lo, settings.max_radius))
    # the regular solution vanishes at the origin; keeping that node matters
    # for <v**2> when l = 0, where psi'(0) != 0
    r = np.concatenate([[0.0], r])
    psi = np.concatenate([[0.0], psi])
    psi /= math.sqrt(trapezoid(psi * psi, r))
    nodes = count_nodes(psi[psi != 0.0])
    if nodes != qn.n:
        raise NodeMismatch(f"expected {qn.n} nodes, found {nodes}; reduce the step")
    dpsi = np.gradient(psi, r, edge_order=2)
    v2 = float(trapezoid(dpsi * dpsi, r))
    return EigenResult(float(energy), nodes, v2, int(r.size)), r, psi


def solve_eigenvalue(pot, qn, settings=None):
    """Eigenvalue, node count and ``<v**2>`` of level ``(l, n)``.

    Raises
    ------
    BracketExhausted
        The search interval could not be widened enough.
    NodeMismatch
        The converged state has the wrong number of nodes.
    """
    return solve_with_wavefunction(pot, qn, settings)[0]


def wavefunction_on_grid(pot, qn, settings=None):
    """Normalized eigenfunction samples ``(r, psi)`` of level ``(l, n)``.

    The grid starts with the origin node ``(0, 0)`` followed by the
    shooting grid; the tail beyond the last retained point is zero.
    """
    _, r, psi = solve_with_wavefunction(pot, qn, settings)
    return r, psi
