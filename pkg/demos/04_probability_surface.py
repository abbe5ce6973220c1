"""Success probability as a function of the chain length and barrier height.

At dW=0 the barrier is absent, eta=0, and the curve is the ideal Zeno law.
Raising the barrier lets the electron tunnel back and erodes P.
"""
import numpy as np

from ifm2deg import probability_surface

grid = probability_surface(n_max=50, dw_max=3.0e-4, dw_steps=101, s=6.0e-8)
v = grid.values

for n in (5, 20, 50):
    row = v[n - 1]
    print(f"N={n:2d}: P(dW=0)={row[0]:.4f}  P(1e-4)={row[33]:.4f}  P(3e-4)={row[-1]:.4f}")

steps = np.diff(v[49])
print("N=50 row non-increasing:", bool(np.all(steps <= 0)), " largest step", steps.max())

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    mesh = ax.pcolormesh(grid.axis2_values * 1e4, grid.axis1_values, v, shading="auto")
    ax.set_xlabel("dW [1e-4 eV]")
    ax.set_ylabel("N")
    fig.colorbar(mesh, label="P")
    fig.savefig("probability_surface.png", dpi=150, bbox_inches="tight")
    print("wrote probability_surface.png")
