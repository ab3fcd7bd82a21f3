"""Thermal-equilibrium position statistics of the oscillator.

The canonical ensemble at coldness theta = beta*hbar*omega weights level
n by P_n = e^(-n*theta) * (1 - e^(-theta)). Summing the eigenstate
densities with those weights collapses to a single Gaussian,

    P_T(x) = (alpha/sqrt(pi)) * sqrt(tanh(theta/2)) * exp(-alpha^2 tanh(theta/2) x^2)

whose variance is <x^2> = coth(theta/2)/(2 alpha^2). This module holds
that closed form, its zero-temperature and classical limits, and the
variance law; the brute-force eigenstate sum that validates it lives in
:mod:`oscfluct.oracle`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import TruncationCapError, ValidationError
from .units import OscillatorSpec, ThermalSpec, require_positive

# np.trapezoid is the numpy 2.x name for np.trapz.
_trapezoid = getattr(np, "trapezoid", None) or np.trapz

OCCUPATION_TAIL_TOL = 1e-12
OCCUPATION_CAP = 10**6
GRID_POINTS_DEFAULT = 1001
GRID_HALF_WIDTH_SIGMAS = 6.0


def _check_positions(x) -> NDArray[np.float64]:
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValidationError("positions must be finite")
    return arr


def occupation(theta: float, n: int) -> float:
    """Occupation probability P_n = e^(-n*theta) * (1 - e^(-theta)).

    Uses expm1 so the prefactor stays accurate for small theta.
    """
    theta = require_positive(theta, "theta")
    if n != int(n) or n < 0:
        raise ValidationError(f"n must be a non-negative integer, got {n!r}")
    return math.exp(-n * theta) * -math.expm1(-theta)


@dataclass(frozen=True, eq=False)
class OccupationWeights:
    """Weights P_0..P_n_max plus the exact geometric tail they exclude.

    The partial sum and the tail are complementary by construction:
    sum(weights) + tail_bound == 1 up to rounding, with
    tail_bound = e^(-(n_max+1)*theta).
    """

    theta: float
    weights: NDArray[np.float64]
    tail_bound: float

    @property
    def n_max(self) -> int:
        return self.weights.size - 1


def occupation_weights(
    theta: float,
    tol: float = OCCUPATION_TAIL_TOL,
    cap: int = OCCUPATION_CAP,
) -> OccupationWeights:
    """Weights through the smallest n_max whose geometric tail is below ``tol``.

    Raises :class:`TruncationCapError` naming the achievable tail when
    theta is so small that n_max would exceed ``cap``.
    """
    theta = require_positive(theta, "theta")
    if not (0.0 < tol <= 1e-3):
        raise ValidationError(f"tol must be in (0, 1e-3], got {tol!r}")
    n_max = max(0, math.ceil(math.log(1.0 / tol) / theta) - 1)
    while math.exp(-(n_max + 1) * theta) >= tol:  # guard the ceil against rounding
        n_max += 1
    if n_max > cap:
        achievable = math.exp(-(cap + 1) * theta)
        raise TruncationCapError(
            f"tail tolerance {tol:g} needs n_max={n_max} > cap {cap} at "
            f"theta={theta:g}; achievable tail at the cap is {achievable:.3e}",
            achievable_tail=achievable,
        )
    n = np.arange(n_max + 1, dtype=np.float64)
    weights = np.exp(-n * theta) * -math.expm1(-theta)
    return OccupationWeights(
        theta=theta, weights=weights, tail_bound=math.exp(-(n_max + 1) * theta)
    )


@dataclass(frozen=True)
class ThermalDensity:
    """The closed-form thermal density as a reusable object.

    ``effective_variance`` is the Gaussian's actual variance
    1/(2 alpha^2 tanh(theta/2)), which interpolates between the
    ground-state value (theta -> inf) and the classical k_B*T/k
    (theta -> 0).
    """

    alpha: float
    theta: float
    effective_variance: float

    @classmethod
    def from_specs(cls, spec: OscillatorSpec, thermal: ThermalSpec) -> "ThermalDensity":
        alpha = spec.width_parameter
        return cls(
            alpha=alpha,
            theta=thermal.theta,
            effective_variance=1.0 / (2.0 * alpha * alpha * math.tanh(0.5 * thermal.theta)),
        )

    def __call__(self, x) -> float | NDArray[np.float64]:
        arr = _check_positions(x)
        stiffness = self.alpha * self.alpha * math.tanh(0.5 * self.theta)
        out = math.sqrt(stiffness / math.pi) * np.exp(-stiffness * arr * arr)
        return out if np.ndim(x) else float(out)


def thermal_density(x, spec: OscillatorSpec, thermal: ThermalSpec) -> float | NDArray[np.float64]:
    """Exact quantum thermal density at position x.

    Numerically stable across theta in [1e-12, 1e4]: tanh handles both
    ends (it saturates to 1 well before any overflow could occur).
    """
    return ThermalDensity.from_specs(spec, thermal)(x)


def ground_density(x, spec: OscillatorSpec) -> float | NDArray[np.float64]:
    """Zero-temperature limit: the ground-state Gaussian (alpha/sqrt(pi)) e^(-alpha^2 x^2)."""
    arr = _check_positions(x)
    alpha = spec.width_parameter
    out = (alpha / math.sqrt(math.pi)) * np.exp(-(alpha * arr) ** 2)
    return out if np.ndim(x) else float(out)


def classical_density(x, spec: OscillatorSpec, thermal: ThermalSpec) -> float | NDArray[np.float64]:
    """High-temperature (Boltzmann) limit: Gaussian with variance k_B*T/k."""
    arr = _check_positions(x)
    beta_k = thermal.beta * spec.spring_constant
    out = math.sqrt(beta_k / (2.0 * math.pi)) * np.exp(-0.5 * beta_k * arr * arr)
    return out if np.ndim(x) else float(out)


def variance(spec: OscillatorSpec, thermal: ThermalSpec) -> float:
    """Exact position variance coth(theta/2)/(2 alpha^2).

    Equals hbar/(2 m omega) * coth(beta hbar omega / 2) in any unit
    system, since alpha^2 = m omega / hbar.
    """
    alpha = spec.width_parameter
    return 1.0 / (2.0 * alpha * alpha * math.tanh(0.5 * thermal.theta))


def variance_ground(spec: OscillatorSpec) -> float:
    """Zero-point variance hbar/(2 m omega) = 1/(2 alpha^2)."""
    alpha = spec.width_parameter
    return 1.0 / (2.0 * alpha * alpha)


def variance_classical(spec: OscillatorSpec, thermal: ThermalSpec) -> float:
    """Equipartition variance k_B*T/k = 1/(beta k) = 1/(alpha^2 theta)."""
    return 1.0 / (thermal.beta * spec.spring_constant)


def default_grid(
    spec: OscillatorSpec,
    thermal: ThermalSpec,
    points: int = GRID_POINTS_DEFAULT,
    span_sigmas: float = GRID_HALF_WIDTH_SIGMAS,
) -> NDArray[np.float64]:
    """Symmetric grid over [-span_sigmas*sigma, +span_sigmas*sigma].

    sigma is the exact thermal standard deviation, so the default
    6-sigma window captures all but ~1e-9 of the probability mass.
    """
    if points != int(points) or points < 2:
        raise ValidationError(f"grid needs at least 2 points, got {points!r}")
    span = require_positive(span_sigmas, "span_sigmas") * math.sqrt(variance(spec, thermal))
    return np.linspace(-span, span, int(points))


@dataclass(frozen=True, eq=False)
class DensityProfile:
    """A density curve sampled on a grid, tagged with its regime.

    ``normalization_residual`` is the trapezoid integral over the stored
    grid minus 1; for well-chosen grids it should be at the 1e-9 scale.
    """

    x: NDArray[np.float64]
    density: NDArray[np.float64]
    regime: str
    normalization_residual: float


def density_profile(x, density, regime: str) -> DensityProfile:
    grid = _check_positions(x)
    values = np.asarray(density, dtype=np.float64)
    if grid.ndim != 1 or grid.shape != values.shape:
        raise ValidationError("profile needs matching 1-D grid and density arrays")
    residual = float(_trapezoid(values, grid)) - 1.0
    return DensityProfile(
        x=grid, density=values, regime=str(regime), normalization_residual=residual
    )
