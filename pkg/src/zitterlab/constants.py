"""Unit systems and physical constants.

SI values are CODATA 2018. In atomic units hbar = m = e = 4*pi*eps0 = 1 and
c = 137.035999.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class UnitSystem(str, Enum):
    ATOMIC = "AtomicUnits"
    SI = "SI"
    NATURAL = "Natural"


# CODATA 2018
HBAR_SI = 1.054571817e-34  # J s
C_SI = 299792458.0  # m / s
M_E_SI = 9.1093837015e-31  # kg
E_SI = 1.602176634e-19  # C
EPS0_SI = 8.8541878128e-12  # F / m
H_SI = 2 * math.pi * HBAR_SI
FINE_STRUCTURE = 7.2973525693e-3

BOHR_SI = 5.29177210903e-11  # m
AU_TIME_SI = 2.4188843265857e-17  # s
AU_VELOCITY_SI = 2.18769126364e6  # m / s
HARTREE_SI = 4.3597447222071e-18  # J
HARTREE_EV = 27.211386245988
EV_SI = E_SI  # J per eV

C_AU = 137.035999


@dataclass(frozen=True)
class PhysConsts:
    system: UnitSystem
    hbar: float
    c: float
    m: float
    e: float
    eps0: float

    def __post_init__(self):
        for name in ("hbar", "c", "m", "e", "eps0"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be finite and positive, got {value!r}")

    @property
    def alpha(self) -> float:
        return self.e**2 / (4 * math.pi * self.eps0 * self.hbar * self.c)

    @property
    def rest_energy(self) -> float:
        return self.m * self.c**2

    @property
    def compton(self) -> float:
        """Reduced Compton wavelength hbar/(m c)."""
        return self.hbar / (self.m * self.c)

    @property
    def zb_frequency(self) -> float:
        """Angular frequency 2 m c^2 / hbar of the rest-frame jitter."""
        return 2 * self.m * self.c**2 / self.hbar

    def with_mass(self, m: float) -> "PhysConsts":
        return PhysConsts(self.system, self.hbar, self.c, m, self.e, self.eps0)

    def to_dict(self) -> dict:
        return {
            "system": self.system.value,
            "hbar": self.hbar,
            "c": self.c,
            "m": self.m,
            "e": self.e,
            "eps0": self.eps0,
        }


ATOMIC = PhysConsts(UnitSystem.ATOMIC, 1.0, C_AU, 1.0, 1.0, 1.0 / (4 * math.pi))
SI = PhysConsts(UnitSystem.SI, HBAR_SI, C_SI, M_E_SI, E_SI, EPS0_SI)
# Heaviside-Lorentz flavoured: hbar = c = m = eps0 = 1, e fixed by alpha
NATURAL = PhysConsts(
    UnitSystem.NATURAL, 1.0, 1.0, 1.0, math.sqrt(4 * math.pi * FINE_STRUCTURE), 1.0
)

_PRESETS = {UnitSystem.ATOMIC: ATOMIC, UnitSystem.SI: SI, UnitSystem.NATURAL: NATURAL}


def preset(system) -> PhysConsts:
    return _PRESETS[UnitSystem(system)]
