"""WKB map from the tip barrier to the absorber transparency.

Energies are taken in eV and converted to joules once, here.
"""

import math

from .model import ELEMENTARY_CHARGE, HBAR, AbsorberModel

__all__ = ["decay_constant", "tunnelling_ratio", "transparency", "wkb_summary"]


def decay_constant(absorber: AbsorberModel) -> float:
    """``kappa = (2 / hbar) sqrt(2 m* dW)`` in inverse metres."""
    dw_joule = absorber.delta_w * ELEMENTARY_CHARGE
    return 2.0 / HBAR * math.sqrt(2.0 * absorber.m_eff * dw_joule)


def tunnelling_ratio(absorber: AbsorberModel) -> float:
    """``J(s) / J0 = exp(-kappa s)``."""
    return math.exp(-decay_constant(absorber) * absorber.s)


def transparency(absorber: AbsorberModel) -> float:
    """Probability ``eta`` that the electron passes the tip uncaptured.

    The capture probability is identified with the tunnelling ratio, so
    ``eta = 1 - exp(-kappa s)``; ``delta_w = 0`` is a perfect absorber.
    """
    return 1.0 - tunnelling_ratio(absorber)


def wkb_summary(absorber: AbsorberModel) -> dict:
    kappa = decay_constant(absorber)
    ratio = math.exp(-kappa * absorber.s)
    return {
        "kappa": kappa,
        "kappa_s": kappa * absorber.s,
        "tunnelling_ratio": ratio,
        "eta": 1.0 - ratio,
    }
