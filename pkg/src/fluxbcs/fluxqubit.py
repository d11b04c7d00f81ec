"""Loop geometry and the two-level flux-qubit spectrum model.

The chain implemented here runs in both directions: a pair-state count K and
a loop perimeter give the loop energy scale E_L = K h^2 / (4 m_e l^2); an
E_L extracted from resonance data gives back K, and with the sample volume
the Cooper-pair density.  The transition frequency of the two-level system
is f = sqrt([E_L (1 - 2 mu)]^2 + E_J^2) / h with mu the external flux bias
(in flux-quantum units) shifted by the fitted offset delta.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .physcore import CODATA2018, Energy, Frequency
from .series import CurveSeries, sample_grid

# Above ~100 nm the current density can no longer be taken as uniform
# across the line cross-section.
_UNIFORMITY_THICKNESS_M = 100e-9


@dataclass(frozen=True)
class Geometry:
    """Loop perimeter and line cross-section, all in meters."""

    perimeter: float
    line_width: float
    line_thickness: float

    def __post_init__(self):
        for name in ("perimeter", "line_width", "line_thickness"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"Geometry.{name} must be strictly positive")
        if self.line_thickness > _UNIFORMITY_THICKNESS_M:
            warnings.warn(
                f"line thickness {self.line_thickness * 1e9:.0f} nm exceeds "
                "100 nm; uniform current density is no longer a safe assumption",
                UserWarning,
                stacklevel=2,
            )

    @classmethod
    def square(cls, side: float, line_width: float, line_thickness: float) -> "Geometry":
        """Square loop of the given side length (perimeter = 4 * side)."""
        return cls(4.0 * side, line_width, line_thickness)


@dataclass(frozen=True)
class QubitParams:
    """The fitted spectrum triple: loop energy, Josephson energy, flux offset."""

    EL: Energy
    EJ: Energy
    delta: float = 0.0

    def __post_init__(self):
        if self.EL.joules <= 0.0:
            raise ValueError("EL must be positive")
        if self.EJ.joules < 0.0:
            raise ValueError("EJ must be non-negative")
        if not (math.isfinite(self.delta) and abs(self.delta) < 0.5):
            raise ValueError("delta must satisfy |delta| < 0.5")


@dataclass(frozen=True)
class FluxBias:
    """External flux in flux-quantum units."""

    mu_ext: float

    def __post_init__(self):
        if not math.isfinite(self.mu_ext):
            raise ValueError("mu_ext must be finite")


def _bias_value(bias) -> float:
    return bias.mu_ext if isinstance(bias, FluxBias) else float(bias)


def loop_energy(pair_states: float, geometry: Geometry) -> Energy:
    """Loop energy scale K h^2 / (4 m_e l^2) for K paired electronic states."""
    if pair_states <= 0:
        raise ValueError("pair-state count must be positive")
    c = CODATA2018
    return Energy(pair_states * c.h ** 2 / (4.0 * c.m_e * geometry.perimeter ** 2))


def k_from_loop_energy(el: Energy, geometry: Geometry) -> float:
    """Invert loop_energy: K = 4 m_e l^2 E_L / h^2."""
    if el.joules <= 0.0:
        raise ValueError("loop energy must be positive")
    c = CODATA2018
    return 4.0 * c.m_e * geometry.perimeter ** 2 * el.joules / c.h ** 2


def sample_volume(geometry: Geometry) -> float:
    """Material volume of the loop in m^3 (perimeter x width x thickness)."""
    return geometry.perimeter * geometry.line_width * geometry.line_thickness


def cooper_pair_density(pair_states: float, volume_m3: float) -> float:
    """Cooper-pair density K / (2 V), returned per cm^3."""
    if pair_states <= 0:
        raise ValueError("pair-state count must be positive")
    if volume_m3 <= 0:
        raise ValueError("volume must be positive")
    return pair_states / (2.0 * (volume_m3 * 1e6))


def qubit_frequency(params: QubitParams, bias) -> Frequency:
    """Transition frequency at the given bias (FluxBias or plain float).

    Always >= EJ/h, with equality exactly at the half-flux point
    mu_ext + delta = 1/2.
    """
    mu = _bias_value(bias) + params.delta
    asym = params.EL.joules * (1.0 - 2.0 * mu)
    return Frequency(math.hypot(asym, params.EJ.joules) / CODATA2018.h)


def spectrum_curve(
    params: QubitParams, mu_min: float, mu_max: float, step: float
) -> CurveSeries:
    """Sample the transition frequency over a bias range, y in GHz.

    The curve is V-shaped: decreasing, then increasing, with its unique
    minimum EJ/h at mu_ext = 1/2 - delta.
    """
    grid = sample_grid(mu_min, mu_max, step)
    points = tuple((mu, qubit_frequency(params, mu).gigahertz) for mu in grid)
    return CurveSeries(x_label="mu_ext", y_label="f_ghz", points=points)
