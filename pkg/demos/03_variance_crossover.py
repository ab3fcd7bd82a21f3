"""Where quantum spread takes over for real bond stretches.

Loads reduced mass and frequency presets for a few diatomic stretches,
then tabulates the mean-square displacement against temperature in
angstrom^2 together with its ground-state floor and classical estimate.
The crossover sits near theta = 2, i.e. T = hbar*omega / (2 k_B); below
it the classical figure badly underestimates the spread.
"""

from pathlib import Path

from oscfluct import (
    MOLECULAR,
    ThermalSpec,
    load_presets,
    quantumness_ratio,
    reduction_scales,
    to_reduced,
    variance,
    variance_classical,
    variance_ground,
)

ANGSTROM = 1e-10

presets = load_presets(str(Path(__file__).with_name("presets.ini")))

for name, preset in presets.items():
    spec = preset.oscillator()
    scales = reduction_scales(spec, MOLECULAR)
    crossover_k = None
    print(f"\n{name}: reduced mass {preset.mass_amu} amu, "
          f"{preset.wavenumber_cm1:g} cm^-1")
    print(f"{'T [K]':>8} {'theta':>10} {'<x^2> [A^2]':>12} {'ground':>10} "
          f"{'classical':>10} {'ratio':>8}")
    for t_kelvin in preset.temperatures_k or ():
        thermal = ThermalSpec.from_temperature(t_kelvin, spec, units=MOLECULAR)
        red_spec, red_thermal = to_reduced(spec, thermal, MOLECULAR)
        var = variance(red_spec, red_thermal) * scales.length**2 / ANGSTROM**2
        var0 = variance_ground(red_spec) * scales.length**2 / ANGSTROM**2
        var_cl = (
            variance_classical(red_spec, red_thermal)
            * scales.length**2
            / ANGSTROM**2
        )
        ratio = quantumness_ratio(red_spec, red_thermal)
        if crossover_k is None and ratio >= 1.0:
            crossover_k = t_kelvin
        print(f"{t_kelvin:8.0f} {red_thermal.theta:10.4f} {var:12.5f} "
              f"{var0:10.5f} {var_cl:10.5f} {ratio:8.3f}")
    if crossover_k is not None:
        print(f"  classical spread overtakes the quantum floor by {crossover_k:.0f} K")
    else:
        print("  quantum-dominated at every tabulated temperature")
