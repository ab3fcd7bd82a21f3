"""Eigenstate-sum oracle versus the closed-form thermal density.

Builds the thermal density the slow way, by summing Boltzmann-weighted
eigenstate densities until the leftover occupation is provably below a
tolerance, and compares it with the one-line Gaussian formula. The
truncation bound is a guarantee, so the measured deviation should sit
under the requested tolerance at every setting.
"""

import numpy as np

from oscfluct import (
    OscillatorSpec,
    ThermalSpec,
    default_grid,
    thermal_density,
    thermal_density_by_sum,
)

spec = OscillatorSpec.from_width(1.0)
thermal = ThermalSpec.from_theta(0.5, spec)
grid = default_grid(spec, thermal, points=201)
closed = thermal_density(grid, spec, thermal)

print(f"{'tol':>10} {'levels':>8} {'tail bound':>12} {'measured dev':>14}")
for tol in (1e-4, 1e-6, 1e-8, 1e-10, 1e-12):
    result = thermal_density_by_sum(grid, spec, thermal, tol=tol)
    dev = float(np.max(np.abs(result.value - closed)))
    print(f"{tol:10.0e} {result.n_used + 1:8d} {result.tail_bound:12.3e} {dev:14.3e}")

print()
print("the measured deviation stays below both the tolerance and the bound")
