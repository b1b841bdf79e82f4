"""TDMA-TIN achievability for the 3x2 Gaussian X channel.

The scheme activates one embedded two-user interference channel at a time:
transmitter i1 serves receiver j1, transmitter i2 serves receiver j2
(i1 != i2, j1 != j2), the third transmitter stays silent, and each receiver
treats the one remaining cross signal as noise. Time sharing over the six
possible pairings is linear in the time fractions, so the optimal schedule
runs a single best pairing full-time. The resulting sum rate of a pairing is

    log2(1 + rho**a[j1][i1] / (1 + rho**a[j1][i2]))
      + log2(1 + rho**a[j2][i2] / (1 + rho**a[j2][i1]))

and its high-SNR slope (GDoF) is

    (a[j1][i1] - a[j1][i2])^+ + (a[j2][i2] - a[j2][i1])^+.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import AlphaMatrix
from .errors import ValidationError


@dataclass(frozen=True)
class IcConfig:
    """One embedded two-user pairing: Tx i1 -> Rx j1 and Tx i2 -> Rx j2.

    Canonical form fixes j1 = 1; the tuple with both pairs swapped denotes
    the same interference channel and the same sum rate, so six canonical
    configurations cover all pairings.
    """

    i1: int
    i2: int
    j1: int
    j2: int

    def __post_init__(self):
        if self.i1 not in (1, 2, 3) or self.i2 not in (1, 2, 3) or self.i1 == self.i2:
            raise ValidationError(f"i1, i2 must be distinct in {{1,2,3}}, got ({self.i1}, {self.i2})")
        if (self.j1, self.j2) != (1, 2):
            raise ValidationError("canonical configurations have (j1, j2) = (1, 2)")

    def label(self) -> str:
        return f"{self.i1}{self.i2}{self.j1}{self.j2}"

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.i1, self.i2, self.j1, self.j2)


@dataclass(frozen=True)
class AchievabilityResult:
    """Best value over the six pairings and the pairing attaining it."""

    value: float
    argmax: IcConfig


IC_CONFIGS: tuple[IcConfig, ...] = tuple(
    IcConfig(i1, i2, 1, 2) for i1 in (1, 2, 3) for i2 in (1, 2, 3) if i2 != i1
)


def enumerate_ic_configs() -> tuple[IcConfig, ...]:
    """The six canonical pairings, in lexicographic (i1, i2) order."""
    return IC_CONFIGS


def tin_sum_rate(rho: float, alpha: AlphaMatrix, cfg: IcConfig) -> float:
    """Sum rate in bits of one pairing with interference treated as noise."""
    a = alpha.a
    des1 = rho ** a[cfg.j1 - 1][cfg.i1 - 1]
    cross1 = rho ** a[cfg.j1 - 1][cfg.i2 - 1]
    des2 = rho ** a[cfg.j2 - 1][cfg.i2 - 1]
    cross2 = rho ** a[cfg.j2 - 1][cfg.i1 - 1]
    return math.log2(1.0 + des1 / (1.0 + cross1)) + math.log2(1.0 + des2 / (1.0 + cross2))


def tdma_tin_rate(rho: float, alpha: AlphaMatrix) -> AchievabilityResult:
    """Best TIN sum rate over the six pairings.

    Ties break to the lexicographically first (i1, i2).
    """
    best = -math.inf
    best_cfg = IC_CONFIGS[0]
    for cfg in IC_CONFIGS:
        r = tin_sum_rate(rho, alpha, cfg)
        if r > best:
            best, best_cfg = r, cfg
    return AchievabilityResult(best, best_cfg)


def tdma_tin_gdof_config(alpha: AlphaMatrix, cfg: IcConfig) -> float:
    """GDoF of one pairing: (a[j1][i1]-a[j1][i2])^+ + (a[j2][i2]-a[j2][i1])^+."""
    a = alpha.a
    x = a[cfg.j1 - 1][cfg.i1 - 1] - a[cfg.j1 - 1][cfg.i2 - 1]
    y = a[cfg.j2 - 1][cfg.i2 - 1] - a[cfg.j2 - 1][cfg.i1 - 1]
    return (x if x > 0.0 else 0.0) + (y if y > 0.0 else 0.0)


def tdma_tin_gdof(alpha: AlphaMatrix) -> AchievabilityResult:
    """Best pairing GDoF; ties break to the lexicographically first (i1, i2)."""
    best = -math.inf
    best_cfg = IC_CONFIGS[0]
    for cfg in IC_CONFIGS:
        d = tdma_tin_gdof_config(alpha, cfg)
        if d > best:
            best, best_cfg = d, cfg
    return AchievabilityResult(best, best_cfg)
