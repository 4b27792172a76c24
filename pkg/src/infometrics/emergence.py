"""Exponential structure-information relation and emergent capacity."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError


@dataclass(frozen=True)
class StonierParams:
    I0: float
    S: float
    K_stonier: float = 1.0

    def __post_init__(self):
        if not self.I0 >= 0:
            raise DomainError(f"I0 must be >= 0, got {self.I0}")
        if not self.K_stonier > 0:
            raise DomainError(f"K must be > 0, got {self.K_stonier}")
        if not self.S >= 0:
            raise DomainError(f"S must be >= 0, got {self.S}")


@dataclass(frozen=True)
class EmergenceInput:
    size_m: float
    eta: float

    def __post_init__(self):
        if not self.size_m > 0:
            raise DomainError(f"system size m must be > 0, got {self.size_m}")
        if not 0 < self.eta <= 1:
            raise DomainError(f"normalized entropy eta must lie in (0, 1], got {self.eta}")


def stonier_information(p: StonierParams) -> float:
    """I0 * exp(-S/K); K is a free positive scale (default 1)."""
    return p.I0 * math.exp(-p.S / p.K_stonier)


def capacity_exponent(eta: float) -> float:
    """eta * log2(1/eta), continuous extension 0 at eta = 0."""
    if eta == 0:
        return 0.0
    return -eta * math.log2(eta)


def emergent_capacity(e: EmergenceInput) -> float:
    return e.size_m * math.exp(capacity_exponent(e.eta))


def capacity_gain(eta: float) -> float:
    return emergent_capacity(EmergenceInput(1.0, eta))


def capacity_peak(grid_points: int = 1000, xtol: float = 1e-15) -> tuple[float, float]:
    """Interior maximizer of the capacity gain on (0, 1) and the gain there.

    The gain is flat at its peak, so comparing function values cannot resolve
    eta beyond ~1e-8. Instead a grid scan brackets the sign change of the
    exponent's derivative, -(ln eta + 1)/ln 2, and Brent's method refines it.
    """
    grid = np.linspace(0.0, 1.0, grid_points + 1)[1:-1]
    slope = -(np.log(grid) + 1.0)
    crossings = np.nonzero((slope[:-1] > 0) & (slope[1:] <= 0))[0]
    if len(crossings) != 1:
        raise RuntimeError("expected exactly one interior maximum")
    i = crossings[0]
    eta = brentq(lambda x: -(math.log(x) + 1.0), grid[i], grid[i + 1], xtol=xtol)
    return eta, capacity_gain(eta)
