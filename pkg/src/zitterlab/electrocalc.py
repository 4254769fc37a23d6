"""Closed-form self-interaction estimates and atomic/SI unit conversions.

The chain is: the light-like self-potential of a jittering point charge,
the resulting energy shift alpha m c^2, the same number from a charged shell
of diameter hbar/mc, and the Darwin-type smearing correction for s states.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .constants import (
    ATOMIC,
    AU_TIME_SI,
    AU_VELOCITY_SI,
    BOHR_SI,
    EV_SI,
    HARTREE_SI,
    M_E_SI,
    C_SI,
    PhysConsts,
    UnitSystem,
)
from .errors import NonPositiveRadius, NotSState, UnsupportedDimension


class EnergyUnit(str, Enum):
    HARTREE = "Hartree"
    EV = "eV"
    JOULE = "Joule"


# one unit expressed in joules
_JOULES = {EnergyUnit.HARTREE: HARTREE_SI, EnergyUnit.EV: EV_SI, EnergyUnit.JOULE: 1.0}
_REST_ENERGY_SI = M_E_SI * C_SI**2


@dataclass(frozen=True)
class EnergyResult:
    value: float
    unit: EnergyUnit
    formula_id: str
    comparison: float | None = None  # e.g. the conventional Darwin value

    def __post_init__(self):
        object.__setattr__(self, "unit", EnergyUnit(self.unit))
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite energy {self.value!r}")

    def to(self, unit) -> "EnergyResult":
        unit = EnergyUnit(unit)
        factor = _JOULES[self.unit] / _JOULES[unit]
        comp = None if self.comparison is None else self.comparison * factor
        return EnergyResult(self.value * factor, unit, self.formula_id, comp)


def _energy(value, k: PhysConsts, formula_id, comparison=None) -> EnergyResult:
    if k.system is UnitSystem.ATOMIC:
        return EnergyResult(value, EnergyUnit.HARTREE, formula_id, comparison)
    if k.system is UnitSystem.SI:
        return EnergyResult(value, EnergyUnit.JOULE, formula_id, comparison)
    # natural units measure energy in electron rest energies
    scale = _REST_ENERGY_SI / EV_SI / k.rest_energy
    comp = None if comparison is None else comparison * scale
    return EnergyResult(value * scale, EnergyUnit.EV, formula_id, comp)


def self_potential(k: PhysConsts = ATOMIC) -> float:
    """Potential felt by the electron from its own light-like partner: -mce/(4 pi eps0 hbar)."""
    return -k.m * k.c * k.e / (4 * math.pi * k.eps0 * k.hbar)


def zb_self_energy(k: PhysConsts = ATOMIC) -> EnergyResult:
    """alpha m c^2, the energy raised by the self-potential."""
    return _energy(k.alpha * k.rest_energy, k, "alpha*m*c^2")


def electromagnetic_mass(k: PhysConsts = ATOMIC) -> float:
    return k.m * (1 + k.alpha)


def shell_model_energy(radius: float, k: PhysConsts = ATOMIC) -> EnergyResult:
    """Field energy outside a uniformly charged shell, e^2/(8 pi eps0 R)."""
    if not radius > 0:
        raise NonPositiveRadius(f"radius must be positive, got {radius!r}")
    return _energy(k.e**2 / (8 * math.pi * k.eps0 * radius), k, "e^2/(8*pi*eps0*R)")


def bohr_radius(k: PhysConsts = ATOMIC) -> float:
    return 4 * math.pi * k.eps0 * k.hbar**2 / (k.m * k.e**2)


def darwin_shift_s_state(Z: int, n: int, k: PhysConsts = ATOMIC, l: int = 0) -> EnergyResult:
    """(hbar^2 / 6 m^2 c^2) <laplacian V> for a hydrogen-like s state.

    With V = -Z e^2/(4 pi eps0 r), laplacian V = (Z e^2/eps0) delta^3(r) and
    |psi_n00(0)|^2 = Z^3/(pi n^3 a0^3). ``comparison`` carries the textbook
    value with 1/8 in place of 1/6.
    """
    if l != 0:
        raise NotSState(f"only s states have a contact term, got l={l}")
    if int(Z) != Z or Z < 1 or int(n) != n or n < 1:
        raise ValueError("Z and n must be positive integers")
    if Z * k.alpha >= 1:
        raise ValueError(f"Z alpha = {Z * k.alpha:.3g} must be below 1")
    a0 = bohr_radius(k)
    contact = Z**3 / (math.pi * n**3 * a0**3)
    lap = Z * k.e**2 / k.eps0 * contact
    base = k.hbar**2 / (k.m**2 * k.c**2) * lap
    return _energy(base / 6, k, "hbar^2/(6 m^2 c^2) <lap V>", comparison=base / 8)


class Dimension(str, Enum):
    LENGTH = "Length"
    TIME = "Time"
    VELOCITY = "Velocity"
    ENERGY = "Energy"


# SI value of one atomic unit
_AU_IN_SI = {
    Dimension.LENGTH: BOHR_SI,
    Dimension.TIME: AU_TIME_SI,
    Dimension.VELOCITY: AU_VELOCITY_SI,
    Dimension.ENERGY: HARTREE_SI,
}


@dataclass(frozen=True)
class UnitQuantity:
    value: float
    dimension: Dimension
    system: UnitSystem

    def __post_init__(self):
        try:
            object.__setattr__(self, "dimension", Dimension(self.dimension))
        except ValueError:
            raise UnsupportedDimension(f"unknown dimension {self.dimension!r}") from None
        object.__setattr__(self, "system", UnitSystem(self.system))


def unit_convert(q: UnitQuantity, target) -> UnitQuantity:
    target = UnitSystem(target)
    systems = {UnitSystem.ATOMIC, UnitSystem.SI}
    if q.system not in systems or target not in systems:
        raise UnsupportedDimension("only atomic units and SI are convertible")
    if q.system is target:
        return q
    factor = _AU_IN_SI[q.dimension]
    value = q.value * factor if target is UnitSystem.SI else q.value / factor
    return UnitQuantity(value, q.dimension, target)


def round_sig(x: float, digits: int = 2) -> float:
    if x == 0 or not math.isfinite(x):
        return x
    return round(x, digits - 1 - math.floor(math.log10(abs(x))))


def nominal_speed_si(distance_au: float = 0.10, time_au: float = 8e-4,
                     digits: int | None = 2) -> float:
    """Speed in m/s from a distance and a time quoted in atomic units.

    With ``digits`` set, each converted operand is rounded to that many
    significant figures before dividing, the way a hand calculation quoting
    "5.3e-12 m over 1.9e-20 s" would do it. ``digits=None`` divides the
    exact conversions.
    """
    d = unit_convert(UnitQuantity(distance_au, Dimension.LENGTH, UnitSystem.ATOMIC), "SI").value
    t = unit_convert(UnitQuantity(time_au, Dimension.TIME, UnitSystem.ATOMIC), "SI").value
    if digits is not None:
        d, t = round_sig(d, digits), round_sig(t, digits)
    return d / t


class ComptonVariant(str, Enum):
    H_OVER_MC = "h_over_mc"
    HBAR_OVER_MC = "hbar_over_mc"
    HBAR_OVER_2MC = "hbar_over_2mc"


def compton_wavelength(variant="hbar_over_mc", k: PhysConsts = ATOMIC) -> UnitQuantity:
    variant = ComptonVariant(variant)
    value = {
        ComptonVariant.H_OVER_MC: 2 * math.pi * k.compton,
        ComptonVariant.HBAR_OVER_MC: k.compton,
        ComptonVariant.HBAR_OVER_2MC: k.compton / 2,
    }[variant]
    if k.system is UnitSystem.NATURAL:
        raise UnsupportedDimension("lengths are reported in atomic units or SI only")
    return UnitQuantity(value, Dimension.LENGTH, k.system)


def calculator_table(k: PhysConsts = ATOMIC) -> list[dict]:
    """Every quantity of this module for one unit system, as labelled rows."""
    rows = []

    def add(name, value, unit, formula):
        rows.append({"quantity": name, "value": value, "unit": unit, "formula": formula})

    energy_unit = _energy(1.0, k, "").unit.value
    length_unit = {UnitSystem.ATOMIC: "a.u.", UnitSystem.SI: "m"}.get(k.system, "hbar/mc")
    add("fine_structure", k.alpha, "1", "e^2/(4 pi eps0 hbar c)")
    add("self_potential", self_potential(k), "potential", "-m c e/(4 pi eps0 hbar)")
    se = zb_self_energy(k)
    add("zb_self_energy", se.value, energy_unit, se.formula_id)
    add("zb_self_energy_eV", se.to(EnergyUnit.EV).value, "eV", se.formula_id)
    add("electromagnetic_mass_ratio", electromagnetic_mass(k) / k.m, "1", "1 + alpha")
    sh = shell_model_energy(k.compton / 2, k)
    add("shell_model_energy", sh.value, energy_unit, sh.formula_id + " at R = hbar/2mc")
    dw = darwin_shift_s_state(1, 1, k)
    add("darwin_1s", dw.value, energy_unit, dw.formula_id)
    add("darwin_1s_conventional", dw.comparison, energy_unit, "1/8 prefactor")
    add("darwin_1s_eV", dw.to(EnergyUnit.EV).value, "eV", dw.formula_id)
    for v in ComptonVariant:
        lam = 2 * math.pi * k.compton if v is ComptonVariant.H_OVER_MC else (
            k.compton if v is ComptonVariant.HBAR_OVER_MC else k.compton / 2)
        add(f"compton_{v.value}", lam, length_unit, v.value.replace("_", " "))
    add("zb_angular_frequency", k.zb_frequency, "1/time", "2 m c^2/hbar")
    return rows
