"""Zero-frequency shot noise at the detector port over the (N, eta) plane.

The normalised noise |S_LL|^2 |S_LU|^2 vanishes for a perfect absorber and
for a fully transparent object, so it carries information only in between.
"""
import numpy as np

from ifm2deg import dimensionful_noise, make_interferometer, noise_surface

grid = noise_surface(n_max=50, eta_steps=101)
v = grid.values
print("grid", v.shape, "range", v.min(), "to", v.max())
print("eta=0 column max:", np.abs(grid.column(0.0)).max())
print("eta=1 column max:", np.abs(grid.column(1.0)).max())

i, j = np.unravel_index(np.argmax(v), v.shape)
print(f"largest noise {v[i, j]:.4f} at N={grid.axis1_values[i]}, eta={grid.axis2_values[j]:.2f}")

spec = make_interferometer(2, 0.5)
print("S(0) for N=2, eta=0.5, V=0.1 mV:", dimensionful_noise(spec, 1e-4), "A^2/Hz")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 4))
    mesh = ax.pcolormesh(grid.axis2_values, grid.axis1_values, v, shading="auto")
    ax.set_xlabel("eta")
    ax.set_ylabel("N")
    fig.colorbar(mesh, label="normalised S(0)")
    fig.savefig("noise_surface.png", dpi=150, bbox_inches="tight")
    print("wrote noise_surface.png")
