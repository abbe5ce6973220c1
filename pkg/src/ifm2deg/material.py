"""Ballistic-transport scales of a 2DEG."""

import math

from .model import ELEMENTARY_CHARGE, HBAR, GAAS, InvalidSpecError, MaterialParams

__all__ = [
    "relaxation_time",
    "fermi_velocity",
    "mean_free_path",
    "fermi_wavenumber",
    "emitter_current",
    "material_table",
]


def relaxation_time(material: MaterialParams = GAAS) -> float:
    """Momentum relaxation time from the mobility, ``tau = mu m* / e``."""
    return material.mobility * material.m_eff / ELEMENTARY_CHARGE


def fermi_velocity(material: MaterialParams = GAAS) -> float:
    return math.sqrt(2.0 * material.fermi_energy * ELEMENTARY_CHARGE / material.m_eff)


def mean_free_path(material: MaterialParams = GAAS) -> float:
    """Elastic mean free path ``l = v_F tau``."""
    return fermi_velocity(material) * relaxation_time(material)


def fermi_wavenumber(material: MaterialParams = GAAS) -> float:
    return math.sqrt(2.0 * material.m_eff * material.fermi_energy * ELEMENTARY_CHARGE) / HBAR


def emitter_current(emission_period: float) -> float:
    """Mean current of a periodic single-electron source, ``e / period``."""
    if not emission_period > 0:
        raise InvalidSpecError(f"emission period must be positive, got {emission_period!r}")
    return ELEMENTARY_CHARGE / emission_period


def material_table(material: MaterialParams = GAAS):
    """``(name, value, unit)`` rows for the derived transport scales."""
    return [
        ("tau", relaxation_time(material), "s"),
        ("v_F", fermi_velocity(material), "m/s"),
        ("l", mean_free_path(material), "m"),
        ("k_F", fermi_wavenumber(material), "1/m"),
    ]
