"""Exact enumeration of the hard-core-boson occupation model at toy scale.

A configuration assigns 0 or 1 pairs to each slot (k, mu) with
k = 1..K and mu = -M..M.  The total flux quantum number is
F = sum(mu * n[k, mu]) and the magnetic energy at external bias mu_ext is
E_L (F - mu_ext)^2, so the energy of a configuration depends only on its
flux sector.  Enumeration is deliberately capped at desk scale
(K <= 12, M <= 3): the module exists to validate the sector structure and
the bookkeeping behind the Josephson coupling, not to reach experimental
pair counts.

The 2x2 Hamiltonian at the bottom provides an independent numerical route
(dense eigensolver) to the same transition frequency the closed-form
spectrum model computes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .physcore import CODATA2018, Energy, Frequency

MAX_K = 12
MAX_M = 3


@dataclass(frozen=True, order=True)
class Configuration:
    """Occupation table n[k][mu]; rows are k = 1..K, columns mu = -M..M.

    Ordering is lexicographic on the flattened table, which makes reports
    of degenerate minimizers deterministic.
    """

    m_max: int
    occupations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        width = 2 * self.m_max + 1
        if self.m_max < 0:
            raise ValueError("m_max must be non-negative")
        if not self.occupations:
            raise ValueError("occupation table must have at least one row")
        for row in self.occupations:
            if len(row) != width:
                raise ValueError(f"each row must have {width} entries (mu = -M..M)")
            if any(n not in (0, 1) for n in row):
                raise ValueError("occupations must be 0 or 1 (hard-core constraint)")

    @property
    def k_count(self) -> int:
        return len(self.occupations)

    @property
    def pair_count(self) -> int:
        return sum(sum(row) for row in self.occupations)

    @property
    def mu_values(self) -> range:
        return range(-self.m_max, self.m_max + 1)

    def occupancy(self, k: int, mu: int) -> int:
        """Occupation of slot (k, mu) with k 1-based and mu in -M..M."""
        return self.occupations[k - 1][mu + self.m_max]

    @classmethod
    def from_occupied(
        cls, k_count: int, m_max: int, occupied: Iterable[tuple[int, int]]
    ) -> "Configuration":
        """Build a configuration from (k, mu) slots that hold a pair."""
        width = 2 * m_max + 1
        table = [[0] * width for _ in range(k_count)]
        for k, mu in occupied:
            if not (1 <= k <= k_count and -m_max <= mu <= m_max):
                raise ValueError(f"slot (k={k}, mu={mu}) outside the table")
            if table[k - 1][mu + m_max]:
                raise ValueError(f"slot (k={k}, mu={mu}) occupied twice")
            table[k - 1][mu + m_max] = 1
        return cls(m_max, tuple(tuple(row) for row in table))


@dataclass(frozen=True)
class FluxSector:
    """Integer total flux quantum number of a configuration."""

    F: int


def enumerate_configurations(k_count: int, m_max: int, pairs: int) -> list[Configuration]:
    """All distinct occupation tables with exactly `pairs` entries set.

    The result has binomial(K*(2M+1), pairs) elements, generated in a
    deterministic order.
    """
    if k_count < 1 or k_count > MAX_K:
        raise ValueError(f"k_count must be in 1..{MAX_K}, got {k_count}")
    if m_max < 0 or m_max > MAX_M:
        raise ValueError(f"m_max must be in 0..{MAX_M}, got {m_max}")
    width = 2 * m_max + 1
    slots = k_count * width
    if pairs < 0 or pairs > slots:
        raise ValueError(f"pairs must be in 0..{slots} for a {k_count}x{width} table")
    configs = []
    for chosen in combinations(range(slots), pairs):
        table = [[0] * width for _ in range(k_count)]
        for slot in chosen:
            table[slot // width][slot % width] = 1
        configs.append(Configuration(m_max, tuple(tuple(row) for row in table)))
    return configs


def total_flux(configuration: Configuration) -> FluxSector:
    """F = sum over slots of mu * n[k, mu]."""
    m = configuration.m_max
    return FluxSector(
        sum(
            (col - m) * n
            for row in configuration.occupations
            for col, n in enumerate(row)
        )
    )


def magnetic_energy(configuration: Configuration, mu_ext: float, el: Energy) -> Energy:
    """E_L (F - mu_ext)^2 for the configuration's flux sector."""
    if not math.isfinite(mu_ext):
        raise ValueError("mu_ext must be finite")
    f = total_flux(configuration).F
    return Energy(el.joules * (f - mu_ext) ** 2)


def _movable_k(configuration: Configuration, nu: int) -> list[int]:
    # A pair keeps its k when its circulation increases from nu to nu+1,
    # so a move needs slot (k, nu) occupied and (k, nu+1) free.
    if not (-configuration.m_max <= nu < configuration.m_max):
        raise ValueError(
            f"flux index nu must be in {-configuration.m_max}..{configuration.m_max - 1}"
        )
    return [
        k
        for k in range(1, configuration.k_count + 1)
        if configuration.occupancy(k, nu) == 1 and configuration.occupancy(k, nu + 1) == 0
    ]


def _moved(configuration: Configuration, k: int, nu_from: int, nu_to: int) -> Configuration:
    m = configuration.m_max
    table = [list(row) for row in configuration.occupations]
    table[k - 1][nu_from + m] = 0
    table[k - 1][nu_to + m] = 1
    return Configuration(m, tuple(tuple(row) for row in table))


def population_shift(configuration: Configuration, nu: int) -> Configuration:
    """Move one pair from flux index nu to nu + 1, raising F by exactly 1.

    Among the movable pairs the one with the smallest k is taken, which
    keeps the operation deterministic.  Raises when no pair sits at nu, or
    when every pair at nu is blocked at nu + 1.
    """
    if not any(
        configuration.occupancy(k, nu) == 1
        for k in range(1, configuration.k_count + 1)
    ):
        raise ValueError(f"no occupied slot at flux index {nu}")
    movable = _movable_k(configuration, nu)
    if not movable:
        raise ValueError(f"no free slot at flux index {nu + 1} for any pair at {nu}")
    return _moved(configuration, movable[0], nu, nu + 1)


def inverse_population_shift(configuration: Configuration, nu: int) -> Configuration:
    """Move one pair from flux index nu + 1 back to nu, lowering F by 1."""
    candidates = [
        k
        for k in range(1, configuration.k_count + 1)
        if configuration.occupancy(k, nu + 1) == 1 and configuration.occupancy(k, nu) == 0
    ]
    if not candidates:
        raise ValueError(f"no pair at flux index {nu + 1} with a free slot at {nu}")
    return _moved(configuration, candidates[0], nu + 1, nu)


def enumerate_population_shifts(configuration: Configuration, nu: int) -> list[Configuration]:
    """All configurations reachable by moving one pair from nu to nu + 1."""
    return [_moved(configuration, k, nu, nu + 1) for k in _movable_k(configuration, nu)]


@dataclass(frozen=True)
class ExcitedAmplitudes:
    """Transition amplitudes xi[(nu, k)] into singly-excited configurations.

    Amplitude magnitudes carry units of sqrt(energy); the summed squared
    magnitude is the Josephson coupling energy.
    """

    amplitudes: Mapping[tuple[int, int], complex]

    def squared_norm(self) -> float:
        return sum(abs(xi) ** 2 for xi in self.amplitudes.values())


def normalize_excited_state(amplitudes: ExcitedAmplitudes) -> ExcitedAmplitudes:
    """Scale all amplitudes by one positive factor so the squared norm is 1."""
    norm = math.sqrt(amplitudes.squared_norm())
    if norm == 0.0:
        raise ValueError("cannot normalize: all transition amplitudes vanish")
    return ExcitedAmplitudes(
        {key: xi / norm for key, xi in amplitudes.items()}
    )


def josephson_energy(amplitudes: ExcitedAmplitudes) -> Energy:
    """Coupling energy sum |xi|^2 of the raw (unnormalized) amplitudes."""
    return Energy(amplitudes.squared_norm())


@dataclass(frozen=True)
class TwoLevelHamiltonian:
    """2x2 restriction [[-eps/2, c/2], [c/2, eps/2]] of the qubit Hamiltonian.

    eps is the diagonal asymmetry E_L (1 - 2 mu) and c the off-diagonal
    coupling E_J; the traceless convention makes the splitting exactly
    sqrt(eps^2 + c^2).
    """

    eps: Energy
    coupling: Energy

    @property
    def matrix(self) -> np.ndarray:
        half_eps = 0.5 * self.eps.joules
        half_c = 0.5 * self.coupling.joules
        return np.array([[-half_eps, half_c], [half_c, half_eps]])


def two_level_splitting(hamiltonian: TwoLevelHamiltonian) -> Frequency:
    """Eigenvalue splitting (lambda_max - lambda_min)/h via a dense solver.

    Serves as the numerical cross-check of the closed-form spectrum model;
    it deliberately avoids the sqrt formula.
    """
    eigenvalues = np.linalg.eigvalsh(hamiltonian.matrix)
    return Frequency((eigenvalues[1] - eigenvalues[0]) / CODATA2018.h)


@dataclass(frozen=True)
class SectorReport:
    """Brute-force summary of the enumeration at one external bias."""

    total_configurations: int
    sector_minima: dict[int, Energy]
    ground_flux: int
    ground_energy: Energy
    ground_configurations: tuple[Configuration, ...]

    @property
    def degeneracy(self) -> int:
        return len(self.ground_configurations)


def sector_analysis(
    k_count: int, m_max: int, pairs: int, mu_ext: float, el: Energy
) -> SectorReport:
    """Enumerate all configurations and report per-flux-sector minima.

    Degenerate ground configurations (exact float ties) are all reported,
    ordered lexicographically by occupation table; at the half-flux point
    this includes both the F=0 and F=1 sectors.
    """
    configs = enumerate_configurations(k_count, m_max, pairs)
    sector_minima: dict[int, Energy] = {}
    energies = []
    for config in configs:
        energy = magnetic_energy(config, mu_ext, el)
        energies.append(energy)
        f = total_flux(config).F
        if f not in sector_minima or energy.joules < sector_minima[f].joules:
            sector_minima[f] = energy
    ground_energy = min(sector_minima.values(), key=lambda e: e.joules)
    minimizers = sorted(
        c for c, e in zip(configs, energies) if e.joules == ground_energy.joules
    )
    ground_flux = min(total_flux(c).F for c in minimizers)
    return SectorReport(
        total_configurations=len(configs),
        sector_minima=dict(sorted(sector_minima.items())),
        ground_flux=ground_flux,
        ground_energy=ground_energy,
        ground_configurations=tuple(minimizers),
    )
