"""Position statistics of a harmonic oscillator in thermal equilibrium.

The library computes the exact quantum position density and variance of
a harmonic oscillator at temperature T, their ground-state and classical
limits, and the fully classical (orbit-average) derivation, and then
cross-validates every closed form against an independent brute-force
route: truncated eigenstate sums, adaptive quadrature, velocity-Verlet
time averages, and Monte Carlo sampling.

Everything numeric runs in reduced units (hbar = k_B = 1); molecular
inputs in amu / cm^-1 / kelvin convert at the boundary in
:mod:`oscfluct.units`. The ``oscfluct`` console script exports the same
quantities as CSV/JSON.
"""

__version__ = "0.1.0"

from .classical import (
    ClassicalOrbit,
    TrajectoryHistogram,
    bin_averaged_density,
    canonical_classical_density,
    microcanonical_cdf,
    microcanonical_density,
    simulate_histogram,
    trajectory,
    verlet_advance,
)
from .eigensystem import (
    EigenLevel,
    classical_turning_point,
    eigen_density,
    eigen_density_naive,
    energy,
    hermite,
    hermite_function,
    hermite_function_series,
    level,
)
from .errors import (
    DomainError,
    HermiteOverflowError,
    QuadratureError,
    TruncationCapError,
    ValidationError,
)
from .oracle import (
    OracleReport,
    TruncatedSumResult,
    equivalence_report,
    moment_by_quadrature,
    thermal_density_by_sum,
)
from .quadrature import adaptive_simpson
from .sampling import (
    Regime,
    SampleBatch,
    ks_statistic,
    sample_classical_canonical,
    sample_microcanonical,
    sample_quantum_thermal,
    second_moment,
    second_moment_band,
)
from .thermal import (
    DensityProfile,
    OccupationWeights,
    ThermalDensity,
    classical_density,
    default_grid,
    density_profile,
    ground_density,
    occupation,
    occupation_weights,
    thermal_density,
    variance,
    variance_classical,
    variance_ground,
)
from .units import (
    ANGSTROM_SI,
    ATOMIC_MASS_SI,
    BOLTZMANN_SI,
    HBAR_SI,
    MOLECULAR,
    PLANCK_SI,
    REDUCED,
    SPEED_OF_LIGHT_SI,
    OscillatorSpec,
    Preset,
    ReductionScales,
    ThermalSpec,
    UnitSystem,
    load_presets,
    quantumness_ratio,
    reduction_scales,
    to_molecular,
    to_reduced,
)

__all__ = [
    "__version__",
    "ANGSTROM_SI",
    "ATOMIC_MASS_SI",
    "BOLTZMANN_SI",
    "HBAR_SI",
    "PLANCK_SI",
    "SPEED_OF_LIGHT_SI",
    "ClassicalOrbit",
    "DensityProfile",
    "DomainError",
    "EigenLevel",
    "HermiteOverflowError",
    "MOLECULAR",
    "OccupationWeights",
    "OracleReport",
    "OscillatorSpec",
    "Preset",
    "QuadratureError",
    "REDUCED",
    "ReductionScales",
    "Regime",
    "SampleBatch",
    "ThermalDensity",
    "ThermalSpec",
    "TrajectoryHistogram",
    "TruncatedSumResult",
    "TruncationCapError",
    "UnitSystem",
    "ValidationError",
    "adaptive_simpson",
    "bin_averaged_density",
    "canonical_classical_density",
    "classical_density",
    "classical_turning_point",
    "default_grid",
    "density_profile",
    "eigen_density",
    "eigen_density_naive",
    "energy",
    "equivalence_report",
    "ground_density",
    "hermite",
    "hermite_function",
    "hermite_function_series",
    "ks_statistic",
    "level",
    "load_presets",
    "microcanonical_cdf",
    "microcanonical_density",
    "moment_by_quadrature",
    "occupation",
    "occupation_weights",
    "quantumness_ratio",
    "reduction_scales",
    "sample_classical_canonical",
    "sample_microcanonical",
    "sample_quantum_thermal",
    "second_moment",
    "second_moment_band",
    "simulate_histogram",
    "thermal_density",
    "thermal_density_by_sum",
    "to_molecular",
    "to_reduced",
    "trajectory",
    "variance",
    "variance_classical",
    "variance_ground",
    "verlet_advance",
]
