"""Interaction-free measurement with a chained beam-splitter interferometer
on a GaAs/AlGaAs two-dimensional electron gas.

Analytic transfer matrices, WKB absorber transparency, zero-frequency shot
noise and a seeded Monte Carlo trajectory engine.
"""

__version__ = "0.1.0"

from .model import (  # noqa: E402
    GAAS,
    PRESETS,
    AbsorberModel,
    BarrierError,
    InterferometerSpec,
    InvalidSpecError,
    MaterialParams,
    ModeState,
    TransferMatrix,
    make_interferometer,
)
from .analytic import (  # noqa: E402
    PortProbabilities,
    absorber_matrix,
    beam_splitter_matrix,
    chain_transfer,
    ev_repeated,
    ev_single_shot,
    no_object_state,
    port_probabilities,
    success_probability,
)
from .wkb import decay_constant, transparency, tunnelling_ratio  # noqa: E402
from .material import (  # noqa: E402
    emitter_current,
    fermi_velocity,
    fermi_wavenumber,
    mean_free_path,
    relaxation_time,
)
from .shotnoise import NoiseResult, dimensionful_noise, energy_window_check, normalized_noise  # noqa: E402
from .trajectory import (  # noqa: E402
    McEstimate,
    Outcome,
    TrajectoryOutcome,
    estimate_probabilities,
    partition_noise_mc,
    run_trajectory,
)
from .sweep import (  # noqa: E402
    NonMonotoneError,
    SurfaceGrid,
    min_stages_for_target,
    noise_surface,
    probability_surface,
    required_dw_for_target,
)
