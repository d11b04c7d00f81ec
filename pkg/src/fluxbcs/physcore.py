"""Physical constants and unit-safe quantity types.

Everything downstream works in SI doubles through the three wrapper types
below; GHz, Kelvin and micrometers appear only at I/O boundaries.  The
wrappers are deliberately minimal: they carry one float, validate it, and
support just enough arithmetic for the formulas in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class Energy:
    """An energy in joules."""

    joules: float

    def __post_init__(self):
        object.__setattr__(self, "joules", _require_finite("Energy", self.joules))

    def __add__(self, other: "Energy") -> "Energy":
        return Energy(self.joules + other.joules)

    def __sub__(self, other: "Energy") -> "Energy":
        return Energy(self.joules - other.joules)

    def __neg__(self) -> "Energy":
        return Energy(-self.joules)

    def __abs__(self) -> "Energy":
        return Energy(abs(self.joules))

    def __mul__(self, scalar: float) -> "Energy":
        return Energy(self.joules * scalar)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # Energy / Energy is a dimensionless ratio; Energy / scalar stays an Energy.
        if isinstance(other, Energy):
            return self.joules / other.joules
        return Energy(self.joules / other)


@dataclass(frozen=True, order=True)
class Frequency:
    """A frequency in hertz.

    Spectrum operations only ever produce non-negative frequencies, but the
    type itself admits negative values so that fit residuals (differences of
    frequencies) remain representable.
    """

    hertz: float

    def __post_init__(self):
        object.__setattr__(self, "hertz", _require_finite("Frequency", self.hertz))

    @classmethod
    def from_gigahertz(cls, value: float) -> "Frequency":
        return cls(value * 1e9)

    @property
    def gigahertz(self) -> float:
        return self.hertz / 1e9

    def __add__(self, other: "Frequency") -> "Frequency":
        return Frequency(self.hertz + other.hertz)

    def __sub__(self, other: "Frequency") -> "Frequency":
        return Frequency(self.hertz - other.hertz)

    def __neg__(self) -> "Frequency":
        return Frequency(-self.hertz)

    def __abs__(self) -> "Frequency":
        return Frequency(abs(self.hertz))

    def __mul__(self, scalar: float) -> "Frequency":
        return Frequency(self.hertz * scalar)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Frequency):
            return self.hertz / other.hertz
        return Frequency(self.hertz / other)


@dataclass(frozen=True, order=True)
class Temperature:
    """An absolute temperature in kelvin (non-negative)."""

    kelvin: float

    def __post_init__(self):
        value = _require_finite("Temperature", self.kelvin)
        if value < 0.0:
            raise ValueError(f"Temperature must be non-negative, got {value!r}")
        object.__setattr__(self, "kelvin", value)


@dataclass(frozen=True)
class Constants:
    """CODATA-2018 constants; h, e and k_B are exact by definition.

    ``hbar`` and ``Phi_0`` are always derived from ``h`` and ``e`` so the
    identities hbar == h/2pi and Phi_0 == h/2e hold bit-exactly.
    """

    h: float = 6.62607015e-34       # J s
    e: float = 1.602176634e-19      # C
    k_B: float = 1.380649e-23       # J / K
    m_e: float = 9.1093837015e-31   # kg
    hbar: float = field(init=False)
    Phi_0: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "hbar", self.h / (2.0 * math.pi))
        object.__setattr__(self, "Phi_0", self.h / (2.0 * self.e))


CODATA2018 = Constants()


def energy_to_frequency(energy: Energy) -> Frequency:
    """E / h."""
    return Frequency(energy.joules / CODATA2018.h)


def frequency_to_energy(frequency: Frequency) -> Energy:
    """h * f."""
    return Energy(frequency.hertz * CODATA2018.h)


def energy_to_kelvin(energy: Energy) -> Temperature:
    """E / k_B."""
    return Temperature(energy.joules / CODATA2018.k_B)


def kelvin_to_energy(temperature: Temperature) -> Energy:
    """k_B * T."""
    return Energy(temperature.kelvin * CODATA2018.k_B)
