"""Position densities across the temperature range.

The thermal density is a Gaussian whose width interpolates between the
ground-state value (cold, theta large) and the classical Boltzmann value
(hot, theta small). This script prints the variance ladder at a few
temperatures and, if matplotlib is installed, saves an overlay figure.
"""

import numpy as np

from oscfluct import (
    OscillatorSpec,
    ThermalSpec,
    classical_density,
    default_grid,
    ground_density,
    quantumness_ratio,
    thermal_density,
    variance,
    variance_classical,
    variance_ground,
)

spec = OscillatorSpec.from_width(1.0)
thetas = (20.0, 2.0, 0.2)

print(f"{'theta':>8} {'<x^2>':>12} {'ground':>12} {'classical':>12} {'ratio':>8}")
for theta in thetas:
    thermal = ThermalSpec.from_theta(theta, spec)
    print(
        f"{theta:8.2f} {variance(spec, thermal):12.6f} "
        f"{variance_ground(spec):12.6f} {variance_classical(spec, thermal):12.6f} "
        f"{quantumness_ratio(spec, thermal):8.2f}"
    )

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed, skipping the figure")
else:
    fig, axes = plt.subplots(1, len(thetas), figsize=(12, 3.6), sharey=False)
    for ax, theta in zip(axes, thetas):
        thermal = ThermalSpec.from_theta(theta, spec)
        x = default_grid(spec, thermal, points=601)
        ax.plot(x, thermal_density(x, spec, thermal), label="thermal")
        ax.plot(x, ground_density(x, spec), "--", label="ground")
        ax.plot(x, classical_density(x, spec, thermal), ":", label="classical")
        ax.set_title(f"theta = {theta:g}")
        ax.set_xlabel("x")
    axes[0].set_ylabel("P(x)")
    axes[0].legend()
    fig.tight_layout()
    fig.savefig("density_regimes.png", dpi=150)
    print("wrote density_regimes.png")
