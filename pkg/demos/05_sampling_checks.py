"""Monte Carlo spot checks for the three sampling regimes.

Draws a million positions per regime from fixed seeds and verifies that
the empirical second moment lands inside its pre-registered three-sigma
band, plus a Kolmogorov-Smirnov check of the microcanonical draw against
the arcsine distribution function.
"""

import numpy as np

from oscfluct import (
    ClassicalOrbit,
    OscillatorSpec,
    ThermalSpec,
    ks_statistic,
    microcanonical_cdf,
    sample_classical_canonical,
    sample_microcanonical,
    sample_quantum_thermal,
    second_moment,
    second_moment_band,
    variance,
    variance_classical,
)

N = 10**6
SEED = 1234

spec = OscillatorSpec.from_width(1.0)
thermal = ThermalSpec.from_theta(1.0, spec)
orbit = ClassicalOrbit.from_amplitude(1.0, spec)

cases = [
    ("quantum thermal", sample_quantum_thermal(N, spec, thermal, seed=SEED),
     variance(spec, thermal)),
    ("classical canonical", sample_classical_canonical(N, spec, thermal, seed=SEED),
     variance_classical(spec, thermal)),
    ("microcanonical", sample_microcanonical(N, orbit, seed=SEED),
     orbit.amplitude**2 / 2.0),
]

print(f"{'regime':>20} {'<x^2> sample':>14} {'expected':>10} {'band':>10} {'ok':>4}")
for name, batch, expected in cases:
    moment = second_moment(batch)
    band = second_moment_band(N, expected, batch.regime)
    ok = abs(moment - expected) <= band
    print(f"{name:>20} {moment:14.6f} {expected:10.6f} {band:10.6f} {str(ok):>4}")

micro = sample_microcanonical(N, orbit, seed=SEED)
ks = ks_statistic(micro, lambda x: microcanonical_cdf(x, orbit))
print(f"\nKS statistic against the arcsine law: {ks:.2e} "
      f"(bound {1.95 / np.sqrt(N):.2e})")
