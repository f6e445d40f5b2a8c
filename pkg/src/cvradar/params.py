"""Physical constants, source parameters and the derived coupling rates.

Every quantity is a plain SI scalar; units are stated field by field.  The
defaults describe the nominal operating point of the tripartite
(optical cavity / microwave cavity / microresonator) source: interval-valued
entries sit at the values used for the reference curves, and the handful of
quantities with no tabulated value (``drive_Vd``, ``cap_slope``) carry
documented, scenario-overridable defaults.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA constants; fixed, never configured."""

    hbar: float = 1.054571817e-34   # reduced Planck constant (J s)
    k_B: float = 1.380649e-23       # Boltzmann constant (J/K)
    c0: float = 299792458.0         # speed of light (m/s)
    eps0: float = 8.8541878128e-12  # vacuum permittivity (F/m)


CODATA = PhysicalConstants()

_OMEGA_M = TWO_PI * 1.0e6  # nominal microresonator angular frequency (rad/s)


@dataclass(frozen=True)
class SystemParams:
    """Inputs of the tripartite source.

    ``drive_Vd`` is complex: its magnitude sets the microwave drive strength
    and its phase propagates into the stationary microwave amplitude,
    realizing the complex-amplitude operating points.
    """

    alpha_c: float = 0.26              # OC-MR coupling coefficient (dimensionless)
    lambda_c: float = 808e-9           # optical drive wavelength (m)
    gamma_m: float = 120.0             # MR damping rate (1/s)
    mass_m: float = 18e-12             # MR mass (kg)
    inductance_L: float = 15e-12       # microwave circuit inductance (H)
    kappa_c: float = 0.02 * _OMEGA_M   # OC damping rate (rad/s)
    kappa_w: float = 0.02 * _OMEGA_M   # MC damping rate (rad/s)
    omega_m: float = _OMEGA_M          # MR angular frequency (rad/s)
    cap_x0: float = 590e-12            # variable capacitance at rest, C(x0) (F)
    cap_d: float = 20e-12              # fixed coupling capacitance C_d (F)
    cap_slope: float = 590e-12 / 1e-6  # capacitance slope C'(x0) (F/m); micron-gap default
    power_Pc: float = 30e-3            # optical drive power (W)
    drive_Vd: complex = 0.02 + 0.0j    # microwave drive voltage amplitude (V)
    temperature_T: float = 0.2         # bath temperature (K)
    detuning_ratio_x: float = 1.0      # reference detuning in sweep-normalizer units


@dataclass(frozen=True)
class DerivedCouplings:
    """Rates and circuit quantities computed from :class:`SystemParams`."""

    omega_c: float     # optical angular frequency (rad/s)
    omega_w: float     # microwave LC resonance frequency (rad/s)
    cap_t: float       # total capacitance C_d + C(x0) (F)
    cap_p: float       # C'(x0) / (C(x0) + C_d)^2 (1/(F m))
    g1: float          # OC-MR coupling rate (rad/s)
    g2: float          # MC-MR coupling coefficient (dimensionless)
    drive_Ec: float    # OC drive rate (1/s)
    drive_Ew: complex  # MC drive rate (1/s); phase equals the phase of drive_Vd


def thermal_occupation(omega: float, temperature: float) -> float:
    """Mean thermal photon number of a mode at angular frequency ``omega``.

    Evaluates ``1 / (exp(hbar*omega / k_B*T) - 1)`` through ``expm1`` so the
    result stays accurate for exponents down to the underflow threshold, and
    switches to the ``exp(-x)`` tail for exponents too large for ``expm1``.

    Parameters
    ----------
    omega : float
        Mode angular frequency (rad/s); must be positive.
    temperature : float
        Bath temperature (K); must be non-negative.  ``T = 0`` returns 0.
    """
    if omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    if temperature < 0.0:
        raise ValueError(f"temperature must be non-negative, got {temperature}")
    if temperature == 0.0:
        return 0.0
    x = CODATA.hbar * omega / (CODATA.k_B * temperature)
    if x > 709.0:  # expm1 overflows beyond ~709.78
        return math.exp(-x)
    return 1.0 / math.expm1(x)


def derive_couplings(p: SystemParams) -> DerivedCouplings:
    """Compute all derived rates for a parameter set.

    The optical drive is referenced to the cavity resonance, so the drive
    rate uses ``omega_c`` as the laser frequency; the microwave resonance is
    the LC frequency of the circuit.  Deterministic: identical inputs give
    bit-identical outputs.
    """
    omega_c = TWO_PI * CODATA.c0 / p.lambda_c
    cap_t = p.cap_d + p.cap_x0
    omega_w = 1.0 / math.sqrt(p.inductance_L * cap_t)
    cap_p = p.cap_slope / (p.cap_x0 + p.cap_d) ** 2
    g1 = math.sqrt(p.alpha_c**2 * p.omega_m / (2.0 * CODATA.eps0 * p.mass_m * omega_c))
    g2 = cap_p * cap_t * math.sqrt(CODATA.hbar / (p.mass_m * p.omega_m))
    drive_Ec = math.sqrt(2.0 * p.power_Pc * p.kappa_c / (CODATA.hbar * omega_c))
    drive_Ew = p.drive_Vd * p.cap_d * math.sqrt(omega_w / (2.0 * CODATA.hbar * cap_t))
    return DerivedCouplings(
        omega_c=omega_c,
        omega_w=omega_w,
        cap_t=cap_t,
        cap_p=cap_p,
        g1=g1,
        g2=g2,
        drive_Ec=drive_Ec,
        drive_Ew=drive_Ew,
    )


_POSITIVE_FIELDS = (
    "alpha_c",
    "lambda_c",
    "gamma_m",
    "mass_m",
    "inductance_L",
    "kappa_c",
    "kappa_w",
    "omega_m",
    "cap_x0",
    "cap_d",
    "cap_slope",
    "power_Pc",
)

# Tabulated operating intervals enforced in strict mode.
_ALPHA_C_RANGE = (0.025, 0.26)
_MASS_RANGE = (18e-12, 22e-12)     # kg
_KAPPA_RANGE = (0.01, 0.03)        # in units of omega_m


def validate_params(p: SystemParams, strict: bool = False) -> list[str]:
    """Check a parameter set; returns a list of violation messages.

    Never raises.  An empty list means all invariants hold.  ``strict``
    additionally enforces the tabulated operating intervals for ``alpha_c``,
    ``mass_m``, ``kappa_c`` and ``kappa_w``.
    """
    violations: list[str] = []
    for name in _POSITIVE_FIELDS:
        value = getattr(p, name)
        if not value > 0.0:
            violations.append(f"{name}: must be positive, got {value}")
    if not abs(p.drive_Vd) > 0.0:
        violations.append(f"drive_Vd: magnitude must be positive, got {p.drive_Vd}")
    if not p.temperature_T > 0.0:
        violations.append(f"temperature_T: must be positive, got {p.temperature_T}")
    if not math.isfinite(p.detuning_ratio_x):
        violations.append(f"detuning_ratio_x: must be finite, got {p.detuning_ratio_x}")
    if strict:
        lo, hi = _ALPHA_C_RANGE
        if not lo <= p.alpha_c <= hi:
            violations.append(f"alpha_c: {p.alpha_c} outside strict range [{lo}, {hi}]")
        lo, hi = _MASS_RANGE
        if not lo <= p.mass_m <= hi:
            violations.append(f"mass_m: {p.mass_m} outside strict range [{lo}, {hi}] kg")
        if p.omega_m > 0.0:
            lo, hi = _KAPPA_RANGE
            for name in ("kappa_c", "kappa_w"):
                ratio = getattr(p, name) / p.omega_m
                if not lo <= ratio <= hi:
                    violations.append(
                        f"{name}: {ratio:.4g}*omega_m outside strict range "
                        f"[{lo}, {hi}]*omega_m"
                    )
    return violations
