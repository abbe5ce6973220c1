"""Where eta comes from: a tunnel barrier between the arm and a side reservoir.

The absorber is a thin barrier of height dW (set by the bias) and width s.
WKB gives the tunnelling ratio exp(-kappa s); the transparency seen by the
interferometer is one minus that.
"""
import numpy as np

from ifm2deg import GAAS, AbsorberModel, decay_constant, transparency
from ifm2deg.material import emitter_current, material_table
from ifm2deg.wkb import wkb_summary

print(f"material: {GAAS.name}, m*/m_e = {GAAS.m_eff / 9.1093837015e-31:.3f}")
for name, value, unit in material_table(GAAS):
    print(f"  {name:4s} = {value:.4g} {unit}")
print(f"  I    = {emitter_current(1e-9):.6g} A for one electron per ns")

# The mean free path is tens of microns, so a micron-scale interferometer is ballistic.

print("\nbarrier dW = 2e-4 eV, s = 60 nm:")
for k, v in wkb_summary(AbsorberModel(2.0e-4, 6.0e-8)).items():
    print(f"  {k:16s} {v:.4g}")

print("\n dW [eV]    kappa [1/m]   eta")
for dw in np.linspace(0.0, 3.0e-4, 7):
    a = AbsorberModel(float(dw))
    print(f"{dw:.1e}    {decay_constant(a):.3e}    {transparency(a):.4f}")

# From the bias side: the barrier is what remains of the work function.
a = AbsorberModel.from_bias(5.0, -9.9996)
print(f"\nwork function 5 eV, bias -9.9996 V -> dW = {a.delta_w:.1e} eV, eta = {transparency(a):.4f}")
