"""Exact transfer-matrix propagation through the beam-splitter chain."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    InterferometerSpec,
    InvalidSpecError,
    L,
    ModeState,
    TransferMatrix,
    U,
    _check_eta,
    _check_theta,
)

__all__ = [
    "PortProbabilities",
    "beam_splitter_matrix",
    "absorber_matrix",
    "chain_transfer",
    "success_probability",
    "no_object_state",
    "port_probabilities",
    "ev_single_shot",
    "ev_repeated",
]


@dataclass(frozen=True)
class PortProbabilities:
    p_exit_a: float
    p_exit_b: float
    p_absorbed: float

    def as_tuple(self):
        return (self.p_exit_a, self.p_exit_b, self.p_absorbed)


def beam_splitter_matrix(theta: float) -> TransferMatrix:
    """Beam splitter with reflectivity ``cos^2 theta``.

    Returns ``[[cos, sin], [-sin, cos]]`` acting on ``(U, L)`` amplitudes.
    """
    _check_theta(theta)
    c, s = math.cos(theta), math.sin(theta)
    return TransferMatrix([[c, s], [-s, c]])


def absorber_matrix(eta: float) -> TransferMatrix:
    """Non-selective absorber on the upper path, ``diag(sqrt(eta), 1)``."""
    _check_eta(eta)
    return TransferMatrix([[math.sqrt(eta), 0.0], [0.0, 1.0]])


def _chain(spec: InterferometerSpec) -> np.ndarray:
    ba = beam_splitter_matrix(spec.theta).array @ absorber_matrix(spec.eta).array
    s = ba.copy()
    # sequential products keep BA real and avoid its non-normal eigenbasis
    for _ in range(spec.n_stages - 1):
        s = ba @ s
    return s


def chain_transfer(spec: InterferometerSpec) -> TransferMatrix:
    """The full chain ``S = (B A)^N``."""
    return TransferMatrix(_chain(spec))


def _output_from_lower(spec: InterferometerSpec) -> np.ndarray:
    # (BA)^(N-1) B |L>: first splitter, then (absorber, splitter) N-1 times
    b = beam_splitter_matrix(spec.theta).array
    a = absorber_matrix(spec.eta).array
    ba = b @ a
    psi = b[:, L].copy()
    for _ in range(spec.n_stages - 1):
        psi = ba @ psi
    return psi


def success_probability(spec: InterferometerSpec) -> float:
    """Probability that a particle injected at the lower-left port leaves
    through the lower-right port, i.e. the object is detected without being
    hit.

    For a perfect absorber (``eta = 0``) this is ``cos(theta)**(2N)``. With
    ``N = 1`` and ``eta = 0`` the splitter transmits fully and the result is
    zero.
    """
    return float(_output_from_lower(spec)[L] ** 2)


def no_object_state(n_passed: int, theta: float) -> ModeState:
    """Amplitudes after ``n_passed`` splitters when no object is present."""
    if n_passed < 0:
        raise InvalidSpecError(f"number of splitters passed must be >= 0, got {n_passed}")
    return ModeState(math.sin(n_passed * theta), math.cos(n_passed * theta))


def port_probabilities(spec: InterferometerSpec) -> PortProbabilities:
    """Exit and absorption probabilities for lower-left injection.

    The object sits on every upper path leaving a splitter, the last one
    included, so the upper exit carries a final ``sqrt(eta)`` factor on top
    of ``S_UL``. The lower exit is ``S_LL**2`` with no correction.
    """
    s = _chain(spec)
    p_a = spec.eta * s[U, L] ** 2
    p_b = s[L, L] ** 2
    p_abs = 1.0 - p_a - p_b
    # clip rounding residue; conservation holds to ~1e-16
    if -1e-13 < p_abs < 0.0:
        p_abs = 0.0
    return PortProbabilities(float(p_a), float(p_b), float(p_abs))


def _check_reflectivity(r):
    if not (0.0 <= r <= 1.0):
        raise InvalidSpecError(f"reflectivity must lie in [0, 1], got {r!r}")


def ev_single_shot(reflectivity: float) -> PortProbabilities:
    """Single interrogation in a Mach-Zehnder with the object in the
    transmitted arm.

    ``p_exit_a`` is the dark-port click (object detected, not absorbed),
    ``p_exit_b`` the inconclusive bright-port click.
    """
    _check_reflectivity(reflectivity)
    r = reflectivity
    return PortProbabilities(r * (1.0 - r), r * r, 1.0 - r)


def ev_repeated(reflectivity: float) -> float:
    """Detection probability when inconclusive outcomes are retried
    indefinitely: ``R (1 - R) / (1 - R^2) = R / (1 + R)``.

    ``R = 1`` returns the limit 1/2.
    """
    _check_reflectivity(reflectivity)
    return reflectivity / (1.0 + reflectivity)
