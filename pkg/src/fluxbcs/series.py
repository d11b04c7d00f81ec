"""Ordered (x, y) sample series, the common record for figure-data export."""

from __future__ import annotations

import math
from dataclasses import dataclass


def sample_grid(lo: float, hi: float, step: float) -> list[float]:
    """Evenly spaced samples lo, lo+step, ... covering [lo, hi].

    Points are generated as lo + i*step (no cumulative summation) so the
    grid is reproducible and free of drift.  The end point is included when
    (hi - lo) is an integer multiple of step.
    """
    for name, value in (("lo", lo), ("hi", hi), ("step", step)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite")
    if hi <= lo:
        raise ValueError(f"empty or inverted range [{lo}, {hi}]")
    if step <= 0.0:
        raise ValueError(f"step must be positive, got {step}")
    if step > hi - lo:
        raise ValueError(f"step {step} is larger than the range [{lo}, {hi}]")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(count)]


@dataclass(frozen=True)
class CurveSeries:
    """Labelled, strictly x-ordered samples of a single curve."""

    x_label: str
    y_label: str
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.x_label or not self.y_label:
            raise ValueError("curve labels must be non-empty")
        xs = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("curve x values must be strictly increasing")
        object.__setattr__(
            self, "points", tuple((float(x), float(y)) for x, y in self.points)
        )

    @property
    def x(self) -> tuple[float, ...]:
        return tuple(p[0] for p in self.points)

    @property
    def y(self) -> tuple[float, ...]:
        return tuple(p[1] for p in self.points)

    def __len__(self) -> int:
        return len(self.points)
