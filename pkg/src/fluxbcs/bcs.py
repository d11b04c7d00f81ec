"""BCS relations between gap, critical temperature, coupling and cutoff.

The central formula is the transcendental critical-temperature law
k_B T_c = 1.13 * hbar*omega_c / (2 sinh(hbar*omega_c / g)), together with
its inversion for the coupling g.  Two parametrizations of the cutoff are
compared: the conventional choice hbar*omega_c = Debye energy, and the
strong-coupling identification hbar*omega_c ~ g ~ gap ~ 2 k_B T_c, under
which the law degenerates to the straight line k_B T_c = g/2.

Cutoff and electron-count bookkeeping use the spinless density of Bloch
states at the Fermi surface, N(0) = V m/(2 pi^2 hbar^2) (3 pi^2 kappa)^(1/3);
no spin factor of 2 is applied anywhere, so K = 2 hbar*omega_c N(0) counts
exactly the states inside the pairing window.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .physcore import CODATA2018, Energy, Temperature, kelvin_to_energy
from .series import CurveSeries, sample_grid

# Weak-coupling BCS numbers.
TC_PREFACTOR = 1.13
GAP_TO_TC_RATIO = 1.76

# Beyond this argument, 1/(2 sinh x) and exp(-x) agree to ~1e-26 while
# math.sinh itself overflows near 710.
_SINH_BRANCH = 30.0


class Hypothesis(enum.Enum):
    """Cutoff parametrization used when generating comparison curves."""

    STRONG_COUPLING = "strong-coupling"
    DEBYE_CUTOFF = "debye-cutoff"


@dataclass(frozen=True)
class Material:
    """Registry entry: electron density (optional), T_c and Debye temperature."""

    name: str
    kappa_el_cm3: Optional[float]
    T_c: Temperature
    Theta_D: Temperature

    def __post_init__(self):
        if not self.name:
            raise ValueError("material name must be non-empty")
        if self.kappa_el_cm3 is not None and self.kappa_el_cm3 <= 0.0:
            raise ValueError("electron density must be positive when present")
        if self.T_c.kelvin <= 0.0:
            raise ValueError("T_c must be positive")
        if self.Theta_D.kelvin <= self.T_c.kelvin:
            raise ValueError("Debye temperature must exceed T_c")


@dataclass(frozen=True)
class BcsParams:
    """A consistent (cutoff, coupling, gap, T_c) quadruple."""

    omega_c: Energy
    g: Energy
    Delta0: Energy
    T_c: Temperature

    def __post_init__(self):
        for name in ("omega_c", "g", "Delta0"):
            if getattr(self, name).joules <= 0.0:
                raise ValueError(f"{name} must be positive")
        if self.T_c.kelvin <= 0.0:
            raise ValueError("T_c must be positive")

    @classmethod
    def strong_coupling(cls, t_c: Temperature) -> "BcsParams":
        """Parameter set at the strong-coupling point omega_c = g = 2 k_B T_c."""
        pair_scale = kelvin_to_energy(Temperature(2.0 * t_c.kelvin))
        return cls(
            omega_c=pair_scale,
            g=pair_scale,
            Delta0=gap_from_tc(t_c),
            T_c=t_c,
        )


def gap_from_tc(t_c: Temperature) -> Energy:
    """Zero-temperature gap 1.76 k_B T_c."""
    if t_c.kelvin <= 0.0:
        raise ValueError("T_c must be positive")
    return Energy(GAP_TO_TC_RATIO * CODATA2018.k_B * t_c.kelvin)


def _half_inv_sinh(x: float) -> float:
    """1 / (2 sinh x) for x > 0, overflow-safe for large x."""
    if x > _SINH_BRANCH:
        return math.exp(-x)
    return 0.5 / math.sinh(x)


def tc_from_coupling(omega_c: Energy, g: Energy) -> Temperature:
    """Critical temperature 1.13 * omega_c / (2 sinh(omega_c/g)) / k_B.

    Strictly increasing in g at fixed cutoff.  For very weak coupling the
    result underflows smoothly to 0 K instead of overflowing.
    """
    if omega_c.joules <= 0.0 or g.joules <= 0.0:
        raise ValueError("cutoff and coupling must be positive")
    ratio = omega_c.joules / g.joules
    return Temperature(
        TC_PREFACTOR * omega_c.joules * _half_inv_sinh(ratio) / CODATA2018.k_B
    )


def tc_strong_coupling(g: Energy) -> Temperature:
    """Critical temperature g / (2 k_B) of the strong-coupling parametrization."""
    if g.joules <= 0.0:
        raise ValueError("coupling must be positive")
    return Temperature(g.joules / (2.0 * CODATA2018.k_B))


def max_reachable_tc(omega_c: Energy) -> Temperature:
    """Largest T_c the transcendental law reaches with coupling g <= omega_c."""
    return tc_from_coupling(omega_c, omega_c)


def invert_coupling(t_c: Temperature, omega_c: Energy) -> Energy:
    """Coupling g = omega_c / asinh(1.13 * omega_c / (2 k_B T_c)).

    The inversion is restricted to the physical domain g <= omega_c (the
    coupling never exceeds the cutoff), which caps the reachable T_c at
    1.13 * omega_c / (2 sinh 1) / k_B; beyond that the request is rejected.
    Round-trips through tc_from_coupling to better than 1e-10 relative.
    """
    if t_c.kelvin <= 0.0:
        raise ValueError("T_c must be positive")
    if omega_c.joules <= 0.0:
        raise ValueError("cutoff must be positive")
    y = TC_PREFACTOR * omega_c.joules / (2.0 * CODATA2018.k_B * t_c.kelvin)
    if y < math.sinh(1.0):
        limit = max_reachable_tc(omega_c)
        raise ValueError(
            f"T_c = {t_c.kelvin:g} K is unreachable for this cutoff: couplings "
            f"g <= hbar*omega_c reach at most {limit.kelvin:g} K"
        )
    return Energy(omega_c.joules / math.asinh(y))


def density_of_states(kappa_el_cm3: float, volume_m3: float) -> float:
    """Spinless Fermi-level density of states of the sample, per joule.

    kappa_el_cm3 is the conduction-electron density per cm^3; volume is the
    sample volume in m^3.
    """
    if kappa_el_cm3 <= 0.0:
        raise ValueError("electron density must be positive")
    if volume_m3 <= 0.0:
        raise ValueError("volume must be positive")
    c = CODATA2018
    kappa_m3 = kappa_el_cm3 * 1e6
    fermi_wavenumber = (3.0 * math.pi ** 2 * kappa_m3) ** (1.0 / 3.0)
    return volume_m3 * c.m_e / (2.0 * math.pi ** 2 * c.hbar ** 2) * fermi_wavenumber


def cutoff_from_k(pair_states: float, n0_per_joule: float) -> Energy:
    """Cutoff energy hbar*omega_c = K / (2 N(0))."""
    if pair_states <= 0.0 or n0_per_joule <= 0.0:
        raise ValueError("pair-state count and density of states must be positive")
    return Energy(pair_states / (2.0 * n0_per_joule))


def k_from_cutoff(omega_c: Energy, n0_per_joule: float) -> float:
    """Number of electronic states K = 2 hbar*omega_c N(0) inside the window."""
    if omega_c.joules <= 0.0 or n0_per_joule <= 0.0:
        raise ValueError("cutoff and density of states must be positive")
    return 2.0 * omega_c.joules * n0_per_joule


def thermally_active_electrons(temperature: Temperature, n0_per_joule: float) -> float:
    """Electrons within the thermal window, 4 k_B T N(0).

    At T = T_c with cutoff 2 k_B T_c this equals k_from_cutoff bit-exactly
    (both reduce to the same product), which is the recombination picture:
    exactly the thermally active electrons pair up below T_c.
    """
    if n0_per_joule <= 0.0:
        raise ValueError("density of states must be positive")
    return 4.0 * CODATA2018.k_B * temperature.kelvin * n0_per_joule


def tc_curve(
    omega_d: Energy,
    hypothesis: Hypothesis,
    g_lo: float,
    g_hi: float,
    step: float,
) -> CurveSeries:
    """Normalized T_c(g) samples, x = g/E_D and y = k_B T_c / E_D.

    Under the strong-coupling hypothesis the curve is exactly y = x/2 (no
    round-trip through kelvin, so the halving is bit-exact); under the
    Debye-cutoff hypothesis it is the transcendental law with
    hbar*omega_c = E_D.
    """
    if omega_d.joules <= 0.0:
        raise ValueError("Debye energy must be positive")
    grid = sample_grid(g_lo, g_hi, step)
    points = []
    for x in grid:
        if x <= 0.0:
            raise ValueError("coupling grid must be strictly positive")
        if hypothesis is Hypothesis.STRONG_COUPLING:
            y = 0.5 * x
        else:
            t = tc_from_coupling(omega_d, Energy(x * omega_d.joules))
            y = CODATA2018.k_B * t.kelvin / omega_d.joules
        points.append((x, y))
    return CurveSeries(x_label="g_over_ED", y_label="kbTc_over_ED", points=tuple(points))
