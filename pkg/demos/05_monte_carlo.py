"""Single-electron trajectories as an independent check on the matrices.

Each electron either survives the absorber or is captured at a definite stage.
Averaging many such histories should reproduce the analytic port probabilities.
"""
import math

from ifm2deg import estimate_probabilities, make_interferometer, port_probabilities, run_trajectory
from ifm2deg.trajectory import block_generator, partition_noise_mc, partition_noise_stderr

spec = make_interferometer(10, 0.8947)
rng = block_generator(7, 0)
print("a few trajectories:", [run_trajectory(spec, rng) for _ in range(4)])

est = estimate_probabilities(spec, 1_000_000, seed=3)
exact = port_probabilities(spec).as_tuple()
for name, p_mc, se, p in zip(
    ("exit a", "exit b", "absorbed"),
    (est.p_exit_a, est.p_exit_b, est.p_absorbed),
    (est.stderr_a, est.stderr_b, est.stderr_abs),
    exact,
):
    print(f"{name:9s} MC {p_mc:.5f} +- {se:.5f}   exact {p:.5f}   z={(p_mc - p) / se:+.2f}")

# Results depend on the seed only, never on the number of threads.
a = estimate_probabilities(make_interferometer(2, 0.0), 300_000, 42, workers=1)
b = estimate_probabilities(make_interferometer(2, 0.0), 300_000, 42, workers=4)
print("1 thread == 4 threads:", a == b)

theta = math.pi / 3
print("partition noise at 60 deg:", partition_noise_mc(theta, 1_000_000, 7),
      "+-", partition_noise_stderr(theta, 1_000_000), "(exact 0.1875)")
