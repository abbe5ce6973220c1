"""Walk through the chained interferometer, from one splitter to many.

With a perfect absorber in the upper arm, each splitter rotates the electron
by a small angle and the absorber projects it back. The success probability
tends to one as the chain grows.
"""
import math

import numpy as np

from ifm2deg import (
    chain_transfer,
    ev_repeated,
    ev_single_shot,
    make_interferometer,
    port_probabilities,
    success_probability,
)

# The textbook single-shot scheme first: a 50/50 splitter pair with a bomb in one arm.
print("single shot, R=1/2 ->", ev_single_shot(0.5).as_tuple())
print("repeated,   R=1/2 ->", ev_repeated(0.5))
print("repeated,   R=0.999 ->", round(ev_repeated(0.999), 6))

# Now the chain. theta defaults to pi / (2N) so an empty interferometer
# moves the electron completely from the lower to the upper mode.
spec = make_interferometer(4, 0.0)
print("\nS = (BA)^N for N=4, eta=0:")
print(chain_transfer(spec).array)

print("\n   N   P(N)      cos^2N(pi/2N)")
for n in (1, 2, 5, 10, 25, 50, 100, 250):
    p = success_probability(make_interferometer(n, 0.0))
    print(f"{n:4d}   {p:.6f}  {math.cos(math.pi / (2 * n)) ** (2 * n):.6f}")

# A partly transparent object leaks amplitude into exit a and into the absorber.
print("\neta    p_exit_a  p_exit_b  p_absorbed   (N=10)")
for eta in np.linspace(0.0, 1.0, 6):
    pp = port_probabilities(make_interferometer(10, float(eta)))
    print(f"{eta:.1f}    {pp.p_exit_a:.4f}    {pp.p_exit_b:.4f}    {pp.p_absorbed:.4f}")
