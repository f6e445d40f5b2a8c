"""Semiclassical steady state and linearized fluctuation dynamics.

The three coupled modes (microresonator, optical cavity, microwave cavity)
are driven to a semiclassical fixed point; quantum fluctuations around it
obey a linear Langevin system whose drift and diffusion matrices are built
here in the quadrature ordering of :data:`cvradar.linalg.QUADRATURE_ORDER`.

Quadrature convention: X = (a + a*)/sqrt(2), Y = (a - a*)/(i sqrt(2)),
vacuum variance 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError
from .linalg import QUADRATURE_ORDER
from .params import DerivedCouplings, SystemParams, thermal_occupation

SQRT2 = math.sqrt(2.0)

PLACEMENT_CORRECTED = "corrected"
PLACEMENT_VERBATIM = "verbatim"
CONVENTIONS = (PLACEMENT_CORRECTED, PLACEMENT_VERBATIM)

# Residual bound of the steady state, relative to max(|E_c|, |E_w|).
STEADY_STATE_RTOL = 1e-10


@dataclass(frozen=True)
class SteadyState:
    """Semiclassical fixed point of the driven tripartite system."""

    a_s: complex  # optical cavity amplitude
    c_s: complex  # microwave cavity amplitude
    x_s: float    # microresonator position quadrature
    p_s: float    # microresonator momentum quadrature


@dataclass(frozen=True)
class DriftMatrix:
    """6x6 drift of the linearized dynamics, plus its placement convention."""

    entries: np.ndarray
    convention: str
    labels: tuple[str, ...] = field(default=QUADRATURE_ORDER)

    def __post_init__(self):
        m = np.array(np.asarray(self.entries, dtype=float))
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)


@dataclass(frozen=True)
class DiffusionMatrix:
    """6x6 diagonal, positive-semidefinite noise-strength matrix."""

    entries: np.ndarray
    labels: tuple[str, ...] = field(default=QUADRATURE_ORDER)

    def __post_init__(self):
        m = np.array(np.asarray(self.entries, dtype=float))
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)


def steady_state_residual(
    d: DerivedCouplings,
    p: SystemParams,
    ss: SteadyState,
    delta_c: float,
    delta_w: float,
) -> np.ndarray:
    """Magnitudes of the four fixed-point equations evaluated at ``ss``."""
    a, c, x, ps = ss.a_s, ss.c_s, ss.x_s, ss.p_s
    dw1 = delta_w - d.g2 * delta_w * x
    r1 = -(1j * delta_c + p.kappa_c) * a - 1j * d.g1 * ps + d.drive_Ec
    r2 = -(1j * delta_w + p.kappa_w) * c + 1j * dw1 * d.g2 * x * c + d.drive_Ew
    r3 = p.omega_m * ps + 2.0 * d.g1 * a.real
    r4 = -p.gamma_m * ps - p.omega_m * x + delta_w * d.g2 * abs(c) ** 2
    return np.array([abs(r1), abs(r2), abs(r3), abs(r4)])


def solve_steady_state(
    d: DerivedCouplings,
    p: SystemParams,
    delta_c: float,
    delta_w: float,
    damping: float = 0.5,
    rel_tol: float = 1e-12,
    max_iter: int = 10_000,
) -> SteadyState:
    """Solve the four coupled fixed-point equations by damped iteration.

    Each pass recomputes the momentum from the position equation, the
    position from the force balance, and the two cavity amplitudes from
    their drive balances, then blends old and proposed values with weight
    ``damping``.  The converged point, not the iteration path, is the
    contract: results for damping anywhere in (0, 1] agree to the residual
    tolerance.

    Raises
    ------
    ConvergenceError
        If the relative update does not fall below ``rel_tol`` within
        ``max_iter`` passes; carries the last residual magnitude.
    """
    if not 0.0 < damping <= 1.0:
        raise ValueError(f"damping must lie in (0, 1], got {damping}")
    a = 0.0j
    c = 0.0j
    x = 0.0
    ps = 0.0
    denom_a = p.kappa_c + 1j * delta_c
    for _ in range(max_iter):
        ps_prop = -2.0 * d.g1 * a.real / p.omega_m
        x_prop = (delta_w * d.g2 * abs(c) ** 2 - p.gamma_m * ps_prop) / p.omega_m
        a_prop = (d.drive_Ec - 1j * d.g1 * ps_prop) / denom_a
        dw1 = delta_w - d.g2 * delta_w * x_prop
        c_prop = d.drive_Ew / (p.kappa_w + 1j * (delta_w - dw1 * d.g2 * x_prop))

        a_next = a + damping * (a_prop - a)
        c_next = c + damping * (c_prop - c)
        x_next = x + damping * (x_prop - x)
        ps_next = ps + damping * (ps_prop - ps)

        change = max(
            abs(a_next - a), abs(c_next - c), abs(x_next - x), abs(ps_next - ps)
        )
        scale = max(abs(a_next), abs(c_next), abs(x_next), abs(ps_next), 1.0)
        a, c, x, ps = a_next, c_next, x_next, ps_next
        if change <= rel_tol * scale:
            break
    else:
        ss = SteadyState(a_s=a, c_s=c, x_s=x, p_s=ps)
        residual = float(steady_state_residual(d, p, ss, delta_c, delta_w).max())
        raise ConvergenceError(
            f"steady state did not converge in {max_iter} iterations "
            f"(last residual {residual:.3e})",
            residual=residual,
        )

    ss = SteadyState(a_s=a, c_s=c, x_s=x, p_s=ps)
    residual = float(steady_state_residual(d, p, ss, delta_c, delta_w).max())
    bound = STEADY_STATE_RTOL * max(abs(d.drive_Ec), abs(d.drive_Ew))
    if bound > 0.0 and residual >= bound:
        raise ConvergenceError(
            f"steady-state residual {residual:.3e} exceeds bound {bound:.3e}",
            residual=residual,
        )
    return ss


def drift_coefficients(
    d: DerivedCouplings, p: SystemParams, ss: SteadyState, delta_w: float
) -> dict[str, complex]:
    """Effective microwave-sector coefficients entering the drift matrix.

    ``g_m`` is complex for a complex stationary microwave amplitude; its real
    and imaginary parts are the couplings of the mechanical momentum to the
    microwave X and Y quadratures.  The stationary position is real by
    construction, so its imaginary part cannot shift the damping in practice.
    """
    q_s = complex(ss.x_s)
    return {
        "g_m": SQRT2 * d.g2 * delta_w * ss.c_s,
        "g_11": -SQRT2 * d.g2 * delta_w * ss.c_s.imag,
        "g_22": SQRT2 * d.g2 * delta_w * ss.c_s.real,
        "kappa_w1": p.kappa_w + d.g2 * delta_w * q_s.imag,
        "delta_w1": delta_w - d.g2 * delta_w * q_s.real,
    }


def build_drift_matrix(
    d: DerivedCouplings,
    p: SystemParams,
    ss: SteadyState,
    delta_c: float,
    delta_w: float,
    convention: str = PLACEMENT_CORRECTED,
) -> DriftMatrix:
    """Assemble the 6x6 drift matrix of the fluctuation dynamics.

    The two conventions differ only in where the momentum-microwave coupling
    ``g_m`` sits: ``verbatim`` keeps it on the optical Y column (row 2,
    column 4), ``corrected`` moves it to the microwave X column (row 2,
    column 5) to match the momentum fluctuation equation.  A complex
    stationary microwave amplitude enters through its real and imaginary
    parts in ``g_22`` and ``g_11``; the ``g_m`` entry uses the real part.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")
    co = drift_coefficients(d, p, ss, delta_w)
    kappa_w1 = complex(co["kappa_w1"]).real
    delta_w1 = complex(co["delta_w1"]).real
    g_m = co["g_m"].real
    g_11 = complex(co["g_11"]).real
    g_22 = complex(co["g_22"]).real
    root2_g1 = SQRT2 * d.g1

    a = np.zeros((6, 6))
    a[0, 1] = p.omega_m
    a[0, 2] = root2_g1
    a[1, 0] = -p.omega_m
    a[1, 1] = -p.gamma_m
    if convention == PLACEMENT_VERBATIM:
        a[1, 3] = g_m
    else:
        a[1, 4] = g_m
    a[2, 2] = -p.kappa_c
    a[2, 3] = delta_c
    a[3, 1] = -root2_g1
    a[3, 2] = -delta_c
    a[3, 3] = -p.kappa_c
    a[4, 0] = g_11
    a[4, 4] = -kappa_w1
    a[4, 5] = delta_w1
    a[5, 0] = g_22
    a[5, 4] = -delta_w1
    a[5, 5] = -kappa_w1
    return DriftMatrix(entries=a, convention=convention)


def build_diffusion_matrix(p: SystemParams, d: DerivedCouplings) -> DiffusionMatrix:
    """Diagonal noise-strength matrix of the linearized dynamics.

    Cavity rows carry ``kappa (2 N(omega) + 1)`` from the input-noise
    correlators under the vacuum-variance-1/2 convention; the mechanical
    momentum row carries the Markovian Brownian-noise strength
    ``gamma_m (2 N(omega_m) + 1)``; the position row has no direct noise.
    """
    if p.temperature_T < 0.0:
        raise ValueError(f"temperature must be non-negative, got {p.temperature_T}")
    n_m = thermal_occupation(p.omega_m, p.temperature_T)
    n_c = thermal_occupation(d.omega_c, p.temperature_T)
    n_w = thermal_occupation(d.omega_w, p.temperature_T)
    diag = np.array(
        [
            0.0,
            p.gamma_m * (2.0 * n_m + 1.0),
            p.kappa_c * (2.0 * n_c + 1.0),
            p.kappa_c * (2.0 * n_c + 1.0),
            p.kappa_w * (2.0 * n_w + 1.0),
            p.kappa_w * (2.0 * n_w + 1.0),
        ]
    )
    return DiffusionMatrix(entries=np.diag(diag))
