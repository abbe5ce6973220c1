"""Parameter surfaces and design-question solvers."""

from __future__ import annotations

import datetime as _dt
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .analytic import success_probability
from .model import DEFAULT_DISTANCE, AbsorberModel, InterferometerSpec, InvalidSpecError, make_interferometer
from .shotnoise import normalized_noise
from .wkb import transparency

__all__ = [
    "SurfaceGrid",
    "NonMonotoneError",
    "noise_surface",
    "probability_surface",
    "min_stages_for_target",
    "required_dw_for_target",
]


class NonMonotoneError(RuntimeError):
    """P(dW) is not non-increasing on the bracket, so bisection is unsafe."""


@dataclass
class SurfaceGrid:
    axis1_name: str
    axis2_name: str
    axis1_values: np.ndarray
    axis2_values: np.ndarray
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.axis1_values = np.asarray(self.axis1_values)
        self.axis2_values = np.asarray(self.axis2_values)
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.axis1_values.size, self.axis2_values.size):
            raise ValueError("values shape must be len(axis1) x len(axis2)")
        for ax in (self.axis1_values, self.axis2_values):
            if ax.size > 1 and not np.all(np.diff(ax) > 0):
                raise ValueError("axis values must be strictly increasing")

    def rows(self):
        """Row-major ``(axis1, axis2, value)`` triples."""
        for i, a in enumerate(self.axis1_values):
            for j, b in enumerate(self.axis2_values):
                yield a.item(), b.item(), self.values[i, j].item()

    def column(self, axis2_value):
        j = int(np.flatnonzero(self.axis2_values == axis2_value)[0])
        return self.values[:, j]


def _metadata(**params):
    return {
        **params,
        "theta_rule": "pi/(2N)",
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        "version": __version__,
    }


def _evaluate_rows(fn, n_values, workers):
    # one task per N row; results reassembled in index order
    if workers is None or workers <= 1:
        return np.array([fn(n) for n in n_values])
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return np.array(list(pool.map(fn, n_values)))


def noise_surface(n_max: int = 50, eta_steps: int = 101, workers: int | None = None) -> SurfaceGrid:
    """Normalised zero-frequency noise over ``N = 1..n_max`` and uniform ``eta`` in [0, 1]."""
    if n_max < 1 or eta_steps < 2:
        raise InvalidSpecError("need n_max >= 1 and eta_steps >= 2")
    ns = np.arange(1, n_max + 1)
    etas = np.linspace(0.0, 1.0, eta_steps)

    def row(n):
        return [normalized_noise(make_interferometer(int(n), float(e))).normalized for e in etas]

    values = _evaluate_rows(row, ns, workers)
    return SurfaceGrid("N", "eta", ns, etas, values, _metadata(n_max=n_max, eta_steps=eta_steps))


def probability_surface(
    n_max: int = 50,
    dw_max: float = 3.0e-4,
    dw_steps: int = 101,
    s: float = DEFAULT_DISTANCE,
    workers: int | None = None,
) -> SurfaceGrid:
    """Success probability over ``N = 1..n_max`` and ``dW`` uniform on [0, dw_max] eV."""
    if n_max < 1 or dw_steps < 2:
        raise InvalidSpecError("need n_max >= 1 and dw_steps >= 2")
    if not dw_max > 0 or not s > 0:
        raise InvalidSpecError("dw_max and s must be positive")
    ns = np.arange(1, n_max + 1)
    dws = np.linspace(0.0, dw_max, dw_steps)
    etas = [transparency(AbsorberModel(float(dw), s)) for dw in dws]

    def row(n):
        return [success_probability(make_interferometer(int(n), e)) for e in etas]

    values = _evaluate_rows(row, ns, workers)
    meta = _metadata(n_max=n_max, dw_max=dw_max, dw_steps=dw_steps, s=s)
    return SurfaceGrid("N", "delta_w", ns, dws, values, meta)


def min_stages_for_target(p_target: float, eta: float, n_cap: int = 1000) -> int | None:
    """Smallest ``N <= n_cap`` whose success probability reaches ``p_target``.

    Scans every N; monotonicity in N is not assumed. Returns ``None`` if no
    N qualifies.
    """
    if not 0.0 < p_target < 1.0:
        raise InvalidSpecError(f"p_target must lie in (0, 1), got {p_target!r}")
    if n_cap < 1:
        raise InvalidSpecError("n_cap must be >= 1")
    for n in range(1, n_cap + 1):
        if success_probability(make_interferometer(n, eta)) >= p_target:
            return n
    return None


def _prob_at(dw, n_stages, s):
    return success_probability(make_interferometer(n_stages, transparency(AbsorberModel(dw, s))))


def required_dw_for_target(
    p_target: float,
    n_stages: int,
    s: float = DEFAULT_DISTANCE,
    tolerance: float = 1e-9,
    dw_hi: float = 3.0e-4,
    check_points: int = 201,
    p_atol: float = 1e-12,
) -> float | None:
    """Largest barrier ``dW`` (eV) in ``[0, dw_hi]`` with ``P(N, dW) >= p_target``.

    Before bisecting, ``P`` is sampled on ``check_points`` uniform points of
    the bracket and must be non-increasing there, otherwise
    ``NonMonotoneError`` is raised. Returns ``None`` if the target is
    missed even at ``dW = 0``, and ``dw_hi`` if it is met over the whole
    bracket. ``P >= p_target - p_atol`` counts as reaching the target, so a
    target taken from the closed form is not lost to rounding.
    """
    if not tolerance > 0:
        raise InvalidSpecError("tolerance must be positive")
    if not dw_hi > 0:
        raise InvalidSpecError("dw_hi must be positive")
    grid = np.linspace(0.0, dw_hi, check_points)
    probs = np.array([_prob_at(float(dw), n_stages, s) for dw in grid])
    # allow rounding-level wiggle on flat stretches
    if np.any(np.diff(probs) > 1e-14):
        k = int(np.argmax(np.diff(probs)))
        raise NonMonotoneError(
            f"P increases between dW={grid[k]:.6g} and dW={grid[k + 1]:.6g} eV; refusing to bisect"
        )
    target = p_target - p_atol
    if probs[0] < target:
        return None
    if probs[-1] >= target:
        return float(dw_hi)
    # bracket from the sampled grid, then bisect inside it
    k = int(np.flatnonzero(probs >= target)[-1])
    lo, hi = float(grid[k]), float(grid[k + 1])
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if _prob_at(mid, n_stages, s) >= target:
            lo = mid
        else:
            hi = mid
    return lo
