"""Inverse questions: how long a chain, and how tall a barrier?"""
from ifm2deg import min_stages_for_target, required_dw_for_target, success_probability, make_interferometer

for target in (0.5, 0.9, 0.95, 0.99):
    print(f"P >= {target}: N = {min_stages_for_target(target, 0.0)}")

# A leaky object needs a longer chain, or can never reach the target.
print("P >= 0.9 with eta=0.05:", min_stages_for_target(0.9, 0.05))
print("P >= 0.9 with eta=0.5 :", min_stages_for_target(0.9, 0.5, n_cap=300))

# The tallest barrier that still keeps P(N=50) above a target.
for target in (0.9, 0.8, 0.5):
    dw = required_dw_for_target(target, 50)
    print(f"N=50, P >= {target}: dW up to {dw:.4e} eV")

print("unreachable target at dW=0 ->", required_dw_for_target(0.99, 10))
print("check:", success_probability(make_interferometer(10, 0.0)))
