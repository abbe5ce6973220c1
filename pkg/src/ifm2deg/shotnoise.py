"""Zero-frequency shot noise at the lower-right output of the chain.

At zero temperature only electrons injected from L into the bias window
``0 < eps < e|V|`` and scattered against empty U states contribute, giving

    S(0) = (e^2 / pi) |S_LL|^2 |S_LU|^2 e|V|        (hbar = 1)

The dimensionless ``normalized`` value is ``pi S(0) / (e^3 |V|)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import chain_transfer
from .model import ELEMENTARY_CHARGE, HBAR, InterferometerSpec, InvalidSpecError, L, U

__all__ = ["NoiseResult", "normalized_noise", "dimensionful_noise", "energy_window_check"]


@dataclass(frozen=True)
class NoiseResult:
    s_ll_sq: float
    s_lu_sq: float
    normalized: float
    bias: float | None = None


def normalized_noise(spec: InterferometerSpec) -> NoiseResult:
    s = chain_transfer(spec).array
    ll = float(s[L, L] ** 2)
    lu = float(s[L, U] ** 2)
    return NoiseResult(ll, lu, ll * lu)


def dimensionful_noise(spec: InterferometerSpec, bias_volts: float) -> float:
    """Spectral density in A^2/Hz, ``e^3 |V| / (pi hbar) * normalized``."""
    if not bias_volts > 0:
        raise InvalidSpecError(f"bias must be positive, got {bias_volts!r}")
    prefactor = ELEMENTARY_CHARGE**3 * bias_volts / (math.pi * HBAR)
    return prefactor * normalized_noise(spec).normalized


def energy_window_check(bias_volts: float, grid_points: int = 100_001) -> float:
    """Integrate ``f_L (1 - f_U)`` at T = 0 over energy, in eV.

    The L reservoir is raised by ``e|V|``; the result should reproduce the
    window width ``|V|`` (eV) up to trapezoid error ``~ 3 |V| / grid_points``.
    """
    if not bias_volts > 0:
        raise InvalidSpecError(f"bias must be positive, got {bias_volts!r}")
    if grid_points < 2:
        raise InvalidSpecError("need at least two grid points")
    window = abs(bias_volts)
    eps = np.linspace(-window, 2.0 * window, grid_points)
    f_l = np.heaviside(window - eps, 0.5)
    f_u = np.heaviside(-eps, 0.5)
    return float(np.trapezoid(f_l * (1.0 - f_u), eps))
