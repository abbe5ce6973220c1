"""Seeded Monte Carlo unravelling of the absorbing beam-splitter chain.

Each stage applies a splitter and then lets the object act on the upper
path through two Kraus branches, ``diag(sqrt(1 - eta), 0)`` (absorbed) and
``diag(sqrt(eta), 1)`` (survived, renormalised). Averaged over trajectories
this reproduces the non-selective absorber exactly.

A trajectory consumes one row of ``N + 1`` uniforms: one per absorber
stage, then one for the final which-port detection. An absorbed trajectory
stops reading its row early. Trajectories are grouped into fixed-size
blocks and block ``i`` draws from a Philox stream keyed by
``SeedSequence(seed, spawn_key=(i,))``, so results depend only on
``(spec, n_samples, seed)`` and never on the worker count.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .model import InterferometerSpec, InvalidSpecError

__all__ = [
    "Outcome",
    "TrajectoryOutcome",
    "McEstimate",
    "run_trajectory",
    "simulate_block",
    "estimate_probabilities",
    "partition_noise_mc",
    "partition_noise_stderr",
    "default_workers",
]

BLOCK_SIZE = 1 << 16


class Outcome(enum.IntEnum):
    EXIT_A = 0
    EXIT_B = 1
    ABSORBED = 2


@dataclass(frozen=True)
class TrajectoryOutcome:
    outcome: Outcome
    absorbed_at_stage: int | None = None

    def __post_init__(self):
        if (self.outcome is Outcome.ABSORBED) != (self.absorbed_at_stage is not None):
            raise ValueError("absorbed_at_stage is set iff the outcome is ABSORBED")


@dataclass(frozen=True)
class McEstimate:
    p_exit_a: float
    p_exit_b: float
    p_absorbed: float
    stderr_a: float
    stderr_b: float
    stderr_abs: float
    n_samples: int
    seed: int
    counts: tuple[int, int, int]

    @classmethod
    def from_counts(cls, counts, seed):
        counts = tuple(int(c) for c in counts)
        n = sum(counts)
        ps = [c / n for c in counts]
        errs = [math.sqrt(p * (1.0 - p) / n) for p in ps]
        return cls(*ps, *errs, n_samples=n, seed=int(seed), counts=counts)

    def as_dict(self):
        return {
            "p_exit_a": self.p_exit_a,
            "p_exit_b": self.p_exit_b,
            "p_absorbed": self.p_absorbed,
            "stderr_a": self.stderr_a,
            "stderr_b": self.stderr_b,
            "stderr_abs": self.stderr_abs,
            "n_samples": self.n_samples,
            "seed": self.seed,
        }


def default_workers() -> int:
    env = os.environ.get("IFM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _uniforms(random_stream):
    if isinstance(random_stream, np.random.Generator):
        while True:
            yield float(random_stream.random())
    yield from random_stream


def run_trajectory(spec: InterferometerSpec, random_stream: Iterable[float]) -> TrajectoryOutcome:
    """Follow one particle injected at the lower-left port.

    ``random_stream`` is an iterable of uniforms in ``[0, 1)`` or a numpy
    ``Generator``.
    """
    draws = _uniforms(random_stream)
    c, s = math.cos(spec.theta), math.sin(spec.theta)
    sqrt_eta = math.sqrt(spec.eta)
    loss = 1.0 - spec.eta
    amp_u, amp_l = s, c
    for stage in range(1, spec.n_stages + 1):
        if next(draws) < loss * (amp_u * amp_u):
            return TrajectoryOutcome(Outcome.ABSORBED, stage)
        amp_u = amp_u * sqrt_eta
        norm = math.sqrt(amp_u * amp_u + amp_l * amp_l)
        amp_u, amp_l = amp_u / norm, amp_l / norm
        if stage < spec.n_stages:
            amp_u, amp_l = c * amp_u + s * amp_l, c * amp_l - s * amp_u
    if next(draws) < amp_u * amp_u:
        return TrajectoryOutcome(Outcome.EXIT_A)
    return TrajectoryOutcome(Outcome.EXIT_B)


def simulate_block(spec: InterferometerSpec, uniforms: np.ndarray):
    """Vectorised ``run_trajectory`` over the rows of ``uniforms``.

    Returns ``(outcomes, stages)`` where ``stages`` is 0 for non-absorbed
    trajectories.
    """
    n_rows = uniforms.shape[0]
    if uniforms.shape[1] < spec.n_stages + 1:
        raise ValueError("each trajectory needs n_stages + 1 uniforms")
    c, s = math.cos(spec.theta), math.sin(spec.theta)
    sqrt_eta = math.sqrt(spec.eta)
    loss = 1.0 - spec.eta
    amp_u = np.full(n_rows, s)
    amp_l = np.full(n_rows, c)
    stages = np.zeros(n_rows, dtype=np.int64)
    alive = np.ones(n_rows, dtype=bool)
    for stage in range(1, spec.n_stages + 1):
        hit = alive & (uniforms[:, stage - 1] < loss * (amp_u * amp_u))
        stages[hit] = stage
        alive &= ~hit
        amp_u = amp_u * sqrt_eta
        norm = np.sqrt(amp_u * amp_u + amp_l * amp_l)
        norm[~alive] = 1.0
        amp_u, amp_l = amp_u / norm, amp_l / norm
        if stage < spec.n_stages:
            amp_u, amp_l = c * amp_u + s * amp_l, c * amp_l - s * amp_u
    outcomes = np.full(n_rows, Outcome.ABSORBED, dtype=np.int8)
    exit_a = uniforms[:, spec.n_stages] < amp_u * amp_u
    outcomes[alive & exit_a] = Outcome.EXIT_A
    outcomes[alive & ~exit_a] = Outcome.EXIT_B
    return outcomes, stages


def block_generator(seed: int, block_index: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(block_index,))
    return np.random.Generator(np.random.Philox(ss))


def _block_counts(spec, seed, block_index, size):
    u = block_generator(seed, block_index).random((size, spec.n_stages + 1))
    outcomes, _ = simulate_block(spec, u)
    return np.bincount(outcomes, minlength=3)


def _run_blocks(spec, n_samples, seed, workers):
    if n_samples < 1:
        raise InvalidSpecError(f"n_samples must be >= 1, got {n_samples}")
    if seed < 0:
        raise InvalidSpecError("seed must be non-negative")
    n_blocks, rem = divmod(n_samples, BLOCK_SIZE)
    sizes = [BLOCK_SIZE] * n_blocks + ([rem] if rem else [])
    workers = default_workers() if workers is None else max(1, int(workers))
    jobs = [(spec, seed, i, size) for i, size in enumerate(sizes)]
    if workers == 1 or len(jobs) == 1:
        parts = [_block_counts(*job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _block_counts(*job), jobs))
    return np.sum(parts, axis=0)


def estimate_probabilities(
    spec: InterferometerSpec, n_samples: int, seed: int, workers: int | None = None
) -> McEstimate:
    """Monte Carlo estimate of the three port probabilities.

    Deterministic in ``(spec, n_samples, seed)`` for any ``workers``.
    """
    counts = _run_blocks(spec, n_samples, seed, workers)
    return McEstimate.from_counts(counts, seed)


def partition_noise_mc(theta: float, n_electrons: int, seed: int, workers: int | None = None) -> float:
    """Partition noise of a single lossless splitter.

    Sends ``n_electrons`` independent electrons through one splitter at
    angle ``theta`` and returns the per-electron variance of the count
    reaching the lower output, ``p_hat (1 - p_hat)``. Converges to
    ``cos^2 theta sin^2 theta``.
    """
    spec = InterferometerSpec(1, 1.0, theta)
    counts = _run_blocks(spec, n_electrons, seed, workers)
    p_hat = counts[1] / n_electrons
    return float(p_hat * (1.0 - p_hat))


def partition_noise_stderr(theta: float, n_electrons: int) -> float:
    """Standard error of ``partition_noise_mc`` (delta method)."""
    p = math.cos(theta) ** 2
    return abs(1.0 - 2.0 * p) * math.sqrt(p * (1.0 - p) / n_electrons)
