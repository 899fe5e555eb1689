"""Expectation values of the trial states for the Cornell Hamiltonian.

The Hamiltonian is ``H = -d2/dr2 + l(l+1)/r**2 - k/r + r`` (dimensionless).
Everything that depends on the shape ``b`` is reduced to integrals over
``x = a r``; the scale ``a`` then enters through exact scaling laws::

    <T> = a**2 t/norm,   <1/r> = a c/norm,   <r> = s/(a norm)

and is fixed by the virial condition ``a**3 = k u2 a**2 + u3`` with
``u2 = c/(2t)``, ``u3 = s/(2t)``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateCubic, ZeroEnergyDenominator
from .quadrature import integrate_semi_infinite
from .trial_basis import TrialParams, g_derivatives, g_value, reduced_kinetic

_ZERO_ENERGY = 1e-12


@dataclass(frozen=True)
class PotentialParams:
    """Coulomb strength ``k``; ``linear_on=False`` drops the confining ``+r`` term."""

    k: float
    linear_on: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.k) and self.k >= 0):
            raise ValueError(f"k must be a nonnegative finite number, got {self.k!r}")


@dataclass(frozen=True)
class ReducedIntegrals:
    """Shape integrals over ``x`` for fixed ``(l, n, b)``.

    ``t`` is the kinetic plus centrifugal integral, ``c`` the ``1/x`` moment,
    ``s`` the ``x`` moment, ``norm`` the plain norm and ``grad`` the
    integral of ``G'**2``.
    """

    t: float
    c: float
    s: float
    norm: float
    grad: float

    @property
    def u2(self):
        return self.c / (2.0 * self.t)

    @property
    def u3(self):
        return self.s / (2.0 * self.t)


@dataclass(frozen=True)
class StateDiagnostics:
    e1: float
    e2: float
    d: float
    v2: float
    a: float
    b: float


def reduced_integrals(qn, b, settings=None):
    def integrand(x):
        g, g1, _ = g_derivatives(qn, b, x)
        kin = reduced_kinetic(qn, b, x)
        g2 = g * g
        return np.vstack([g * kin, g2 / x, g2 * x, g2, g1 * g1])

    t, c, s, norm, grad = integrate_semi_infinite(integrand, b, settings).value
    return ReducedIntegrals(float(t), float(c), float(s), float(norm), float(grad))


def _linear_weight(pot):
    return 1.0 if pot.linear_on else 0.0


def _cubic_residual(a, p, q):
    return a**3 - p * a**2 - q


def virial_scale(pot, ri):
    """Positive root of ``a**3 = k u2 a**2 + u3`` by Cardano's formula.

    Both cube-root arguments are nonnegative for ``k, u2, u3 >= 0``, but
    ``shift - root`` cancels when ``k u2`` is small against ``u3``, so the
    closed form only seeds a Newton polish.  If the closed form is far off
    (residual above 1e-6 of the term sizes) Newton restarts from a bound
    above the root.
    """
    p = pot.k * ri.u2
    q = ri.u3 * _linear_weight(pot)
    if p <= 0 and q <= 0:
        raise DegenerateCubic("k = 0 without the linear term leaves no bound scale")
    shift = p**3 / 27.0 + q / 2.0
    root = math.sqrt(p**3 * q / 27.0 + q * q / 4.0)
    a = p / 3.0 + np.cbrt(shift + root) + np.cbrt(max(shift - root, 0.0))
    size = a**3 + p * a * a + q
    if math.isfinite(a) and a > 2 * p / 3 and abs(_cubic_residual(a, p, q)) <= 1e-6 * size:
        return _newton_cubic(p, q, float(a))
    return _newton_cubic(p, q)


def _newton_cubic(p, q, a=None):
    if a is None:
        # the cubic is convex and increasing beyond this upper bound, so Newton is monotone
        a = p + q ** (1.0 / 3.0)
    for _ in range(100):
        step = _cubic_residual(a, p, q) / (3 * a * a - 2 * p * a)
        a -= step
        if abs(step) <= 1e-15 * a:
            break
    return float(a)


def energy_at_scale(pot, ri, a):
    """``<H>`` of the trial state with shape integrals ``ri`` at scale ``a``."""
    return (
        a * a * ri.t / ri.norm
        - pot.k * a * ri.c / ri.norm
        + _linear_weight(pot) * ri.s / (a * ri.norm)
    )


def _reduced_hamiltonian(pot, qn, b, a, x):
    # (H psi)(r) = N sqrt(a) * this, with x = a r
    g = g_value(qn, b, x)
    return (
        a * a * reduced_kinetic(qn, b, x)
        - pot.k * a * g / x
        + _linear_weight(pot) * x * g / a
    )


def apply_hamiltonian(pot, qn, tp, r, settings=None, norm=None):
    """``(H psi)(r)`` for the normalized trial state with parameters ``tp``."""
    r = np.asarray(r, dtype=float)
    if norm is None:
        norm = 1.0 / math.sqrt(reduced_integrals(qn, tp.b, settings).norm)
    return norm * math.sqrt(tp.a) * _reduced_hamiltonian(pot, qn, tp.b, tp.a, tp.a * r)


def _h2_diverges(qn, b):
    # for l = 0 the kinetic part of H psi behaves as r**(b-1) near the origin
    return qn.l == 0 and b <= 0.5


def _virial_state(pot, qn, b, settings):
    ri = reduced_integrals(qn, b, settings)
    a = virial_scale(pot, ri)
    return ri, a, energy_at_scale(pot, ri, a)


def state_diagnostics(pot, qn, b, settings=None):
    """All diagnostics of the virial-constrained trial state at shape ``b``.

    The discrepancy is integrated as the squared norm of the local residual
    ``H psi / E - psi``; this equals ``<H**2>/<H>**2 - 1`` but does not
    suffer from subtracting two nearly equal numbers.
    """
    ri, a, e1 = _virial_state(pot, qn, b, settings)
    if abs(e1) < _ZERO_ENERGY:
        raise ZeroEnergyDenominator(f"<H> = {e1!r} at b={b!r}")
    v2 = a * a * ri.grad / ri.norm
    if _h2_diverges(qn, b):
        return StateDiagnostics(e1, math.inf, math.inf, v2, a, b)

    def integrand(x):
        hg = _reduced_hamiltonian(pot, qn, b, a, x)
        resid = hg / e1 - g_value(qn, b, x)
        return np.vstack([hg * hg, resid * resid])

    h2, d = integrate_semi_infinite(integrand, b, settings).value / ri.norm
    return StateDiagnostics(e1, math.sqrt(h2), float(d), v2, a, b)


def energy(pot, qn, b, settings=None):
    """Energy expectation of the one-parameter trial state at ``a = a0(b)``."""
    return _virial_state(pot, qn, b, settings)[2]


def energy_squared(pot, qn, b, settings=None):
    """Root of ``<H**2>``, integrated in the symmetric form ``int (H psi)**2``."""
    if _h2_diverges(qn, b):
        return math.inf
    ri, a, _ = _virial_state(pot, qn, b, settings)

    def integrand(x):
        return _reduced_hamiltonian(pot, qn, b, a, x) ** 2

    h2 = integrate_semi_infinite(integrand, b, settings).value / ri.norm
    return math.sqrt(h2)


def discrepancy(pot, qn, b, settings=None):
    """Integral discrepancy ``<H**2>/<H>**2 - 1`` (nonnegative)."""
    return state_diagnostics(pot, qn, b, settings).d


def local_discrepancy(pot, qn, b, r, settings=None):
    """Pointwise residual ``(H psi)(r) / <H> - psi(r)``."""
    ri, a, e1 = _virial_state(pot, qn, b, settings)
    if abs(e1) < _ZERO_ENERGY:
        raise ZeroEnergyDenominator(f"<H> = {e1!r} at b={b!r}")
    x = a * np.asarray(r, dtype=float)
    scale = math.sqrt(a / ri.norm)
    return scale * (_reduced_hamiltonian(pot, qn, b, a, x) / e1 - g_value(qn, b, x))


def mean_squared_velocity(pot, qn, b, settings=None):
    """``<v**2> = int (d psi/dr)**2 dr`` at ``a = a0(b)``."""
    ri, a, _ = _virial_state(pot, qn, b, settings)
    return a * a * ri.grad / ri.norm


def r_space_diagnostics(pot, qn, tp, settings=None):
    """Same diagnostics as :func:`state_diagnostics`, integrated directly in ``r``.

    Uses the given ``(a, b)`` without the virial constraint and no scaling
    laws; kept as an independent cross-check of the reduced path.
    """
    a, b = tp.a, tp.b
    norm = integrate_semi_infinite(
        lambda r: g_value(qn, b, a * r) ** 2, b, settings, scale=a
    ).value * a
    amp = 1.0 / math.sqrt(norm)

    def fields(r):
        x = a * r
        psi = amp * math.sqrt(a) * g_value(qn, b, x)
        _, g1, g2 = g_derivatives(qn, b, x)
        dpsi = amp * a**1.5 * g1
        d2psi = amp * a**2.5 * g2
        pot_term = qn.l * (qn.l + 1) / r**2 - pot.k / r + _linear_weight(pot) * r
        return psi, dpsi, -d2psi + pot_term * psi

    def moments(r):
        psi, dpsi, hpsi = fields(r)
        return np.vstack([psi * hpsi, hpsi * hpsi, dpsi * dpsi])

    e1, h2, v2 = integrate_semi_infinite(moments, b, settings, scale=a).value

    def residual(r):
        psi, _, hpsi = fields(r)
        return (hpsi / e1 - psi) ** 2

    d = integrate_semi_infinite(residual, b, settings, scale=a).value
    return StateDiagnostics(float(e1), math.sqrt(h2), float(d), float(v2), a, b)


def coulomb_scale(pot, qn):
    """Exact hydrogen-like scale ``k / (2 (n+l+1))`` for the pure Coulomb problem."""
    return pot.k / (2.0 * (qn.n + qn.l + 1))


def coulomb_energy(pot, qn):
    """Exact pure Coulomb eigenvalue ``-k**2 / (4 (n+l+1)**2)``."""
    return -(pot.k**2) / (4.0 * (qn.n + qn.l + 1) ** 2)


__all__ = [
    "PotentialParams",
    "ReducedIntegrals",
    "StateDiagnostics",
    "TrialParams",
    "apply_hamiltonian",
    "coulomb_energy",
    "coulomb_scale",
    "discrepancy",
    "energy",
    "energy_at_scale",
    "energy_squared",
    "local_discrepancy",
    "mean_squared_velocity",
    "r_space_diagnostics",
    "reduced_integrals",
    "state_diagnostics",
    "virial_scale",
]
