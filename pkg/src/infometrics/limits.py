"""Physical upper bounds on computation: operation rate, storage, and I/O rate."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 1.054571817e-34  # J s
    k_B: float = 1.380649e-23  # J/K
    c: float = 299792458.0  # m/s


CODATA_2018 = PhysicalConstants()


@dataclass(frozen=True)
class PhysicalSystem:
    energy_E: float = 0.0  # J above ground state
    entropy_S: float = 0.0  # J/K
    radius_R: float | None = None  # m
    mass: float | None = None  # kg

    def __post_init__(self):
        for name in ("energy_E", "entropy_S", "mass"):
            v = getattr(self, name)
            if v is not None and not v >= 0:
                raise DomainError(f"{name} must be >= 0, got {v}")
        if self.radius_R is not None and not self.radius_R > 0:
            raise DomainError(f"radius_R must be > 0, got {self.radius_R}")


def max_ops_per_sec(sys: PhysicalSystem, const: PhysicalConstants = CODATA_2018) -> float:
    """Margolus-Levitin bound 2E / (pi hbar)."""
    return 2.0 * sys.energy_E / (math.pi * const.hbar)


def max_bits(sys: PhysicalSystem, const: PhysicalConstants = CODATA_2018) -> float:
    return sys.entropy_S / (const.k_B * math.log(2))


def max_io_rate(sys: PhysicalSystem, const: PhysicalConstants = CODATA_2018) -> float:
    """c S / (k_B R), bits per second.

    Note the missing ln 2 relative to ``max_bits``: this is the bound in the
    form usually quoted, an order-of-magnitude estimate.
    """
    if sys.radius_R is None or not sys.radius_R > 0:
        raise DomainError(f"radius_R must be > 0, got {sys.radius_R}")
    return const.c * sys.entropy_S / (const.k_B * sys.radius_R)


def mass_energy(mass: float, const: PhysicalConstants = CODATA_2018) -> float:
    if not mass >= 0:
        raise DomainError(f"mass must be >= 0, got {mass}")
    return mass * const.c**2
