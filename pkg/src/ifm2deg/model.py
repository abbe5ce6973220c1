"""Domain types shared across the package.

All amplitudes and matrices are real. Mode ordering is ``(U, L)`` everywhere:
index 0 is the upper path *a* (region U), index 1 the lower path *b*
(region L).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# SI constants (exact 2019 SI values for e; CODATA 2018 for hbar, m_e).
ELEMENTARY_CHARGE = 1.602176634e-19  # C
HBAR = 1.054571817e-34  # J s
ELECTRON_MASS = 9.1093837015e-31  # kg

GAAS_MASS_RATIO = 0.067
DEFAULT_DISTANCE = 6.0e-8  # m, AlGaAs cap thickness above the 2DEG

U, L = 0, 1


class InvalidSpecError(ValueError):
    """Raised when a physical parameter is outside its allowed range."""


class BarrierError(InvalidSpecError):
    """Raised when the effective barrier height is negative."""


def _check_eta(eta):
    if not (0.0 <= eta <= 1.0):
        raise InvalidSpecError(f"transparency eta must lie in [0, 1], got {eta!r}")


def _check_theta(theta):
    if not (0.0 <= theta <= math.pi / 2):
        raise InvalidSpecError(f"angle theta must lie in [0, pi/2], got {theta!r}")


@dataclass(frozen=True)
class InterferometerSpec:
    """A chain of ``n_stages`` identical beam splitters with an absorber.

    ``theta`` defaults to ``pi / (2 * n_stages)``, which sends the particle
    to the upper output with certainty when no object is present.
    """

    n_stages: int
    eta: float
    theta: float | None = None

    def __post_init__(self):
        if isinstance(self.n_stages, bool) or int(self.n_stages) != self.n_stages:
            raise InvalidSpecError(f"n_stages must be an integer, got {self.n_stages!r}")
        if self.n_stages < 1:
            raise InvalidSpecError(f"n_stages must be >= 1, got {self.n_stages}")
        object.__setattr__(self, "n_stages", int(self.n_stages))
        _check_eta(self.eta)
        if self.theta is None:
            object.__setattr__(self, "theta", math.pi / (2 * self.n_stages))
        _check_theta(self.theta)

    @property
    def default_theta(self) -> bool:
        return self.theta == math.pi / (2 * self.n_stages)


def make_interferometer(n_stages: int, eta: float) -> InterferometerSpec:
    """Interferometer with the Zeno angle ``theta = pi / (2 N)``."""
    return InterferometerSpec(n_stages, eta)


class TransferMatrix:
    """Real 2x2 map from incoming ``(U, L)`` amplitudes to outgoing ones.

    Row index is the output mode, column index the input mode. The
    underlying array is read-only.
    """

    __slots__ = ("_m",)

    def __init__(self, entries):
        m = np.array(entries, dtype=float)
        if m.shape != (2, 2):
            raise ValueError(f"transfer matrix must be 2x2, got shape {m.shape}")
        m.setflags(write=False)
        self._m = m

    @property
    def array(self) -> np.ndarray:
        return self._m

    def __array__(self, dtype=None, copy=None):
        return self._m if dtype is None else self._m.astype(dtype)

    def __getitem__(self, idx):
        return self._m[idx]

    def __matmul__(self, other):
        if isinstance(other, TransferMatrix):
            return TransferMatrix(self._m @ other._m)
        return self._m @ np.asarray(other)

    def __eq__(self, other):
        if not isinstance(other, TransferMatrix):
            return NotImplemented
        return bool(np.array_equal(self._m, other._m))

    __hash__ = None

    def __repr__(self):
        return f"TransferMatrix({self._m.tolist()!r})"

    @property
    def T(self) -> TransferMatrix:
        return TransferMatrix(self._m.T)

    def singular_values(self) -> np.ndarray:
        return np.linalg.svd(self._m, compute_uv=False)

    def is_orthogonal(self, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self._m.T @ self._m, np.eye(2), rtol=0, atol=atol))


@dataclass(frozen=True)
class ModeState:
    amp_u: float
    amp_l: float

    @property
    def norm_sq(self) -> float:
        return self.amp_u**2 + self.amp_l**2


@dataclass(frozen=True)
class AbsorberModel:
    """Tunnelling-tip absorber.

    ``delta_w`` is the effective barrier ``<Phi> - e|V|/2`` in eV, ``s`` the
    tip-to-2DEG tunnelling distance in metres and ``m_eff`` the carrier mass
    in kg.
    """

    delta_w: float
    s: float = DEFAULT_DISTANCE
    m_eff: float = GAAS_MASS_RATIO * ELECTRON_MASS

    def __post_init__(self):
        if not self.delta_w >= 0:
            raise BarrierError(
                f"effective barrier <Phi> - e|V|/2 must be non-negative, got {self.delta_w!r} eV"
            )
        if not self.s > 0:
            raise InvalidSpecError(f"tunnelling distance must be positive, got {self.s!r}")
        if not self.m_eff > 0:
            raise InvalidSpecError(f"effective mass must be positive, got {self.m_eff!r}")

    @classmethod
    def from_bias(cls, work_function: float, bias: float, **kwargs) -> AbsorberModel:
        """Build from the mean barrier ``<Phi>`` (eV) and tip bias ``V`` (volts)."""
        return cls(work_function - abs(bias) / 2.0, **kwargs)


@dataclass(frozen=True)
class MaterialParams:
    m_eff: float
    fermi_energy: float  # eV
    mobility: float  # m^2 V^-1 s^-1
    work_function_mean: float = 5.0  # eV
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        for attr in ("m_eff", "fermi_energy", "mobility", "work_function_mean"):
            v = getattr(self, attr)
            if not v > 0:
                raise InvalidSpecError(f"{attr} must be strictly positive, got {v!r}")


GAAS = MaterialParams(
    m_eff=GAAS_MASS_RATIO * ELECTRON_MASS,
    fermi_energy=0.014,
    mobility=1.0e2,
    work_function_mean=5.0,
    name="gaas",
)

PRESETS = {"gaas": GAAS}
