"""Independent brute-force routes used to validate the closed forms.

Two evaluators live here. The truncated eigenstate sum rebuilds the
thermal density the expensive way, level by level, with a rigorous
truncation bound; agreement with the closed-form Gaussian is the
package's headline cross-check. Generic quadrature moments provide the
same service for the variance law.

Truncation bound: the normalized Hermite functions satisfy the uniform
bound sup |psi_n| <= pi^(-1/4) (Cramer's inequality), so every level
density is bounded by alpha/sqrt(pi) < alpha * 1. The neglected tail of
the weighted sum is therefore at most alpha * sum_{n > n_max} P_n =
alpha * e^(-(n_max+1) theta). The constant 1 is deliberately loose;
weights decay geometrically, so tightness buys nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from .eigensystem import hermite_function_series
from .errors import TruncationCapError, ValidationError
from .quadrature import adaptive_simpson
from .thermal import occupation_weights, thermal_density
from .units import OscillatorSpec, ThermalSpec, require_positive

SUM_TOL_DEFAULT = 1e-12
MOMENT_TOL_DEFAULT = 1e-12


@dataclass(frozen=True, eq=False)
class TruncatedSumResult:
    """Weighted eigenstate sum plus its truncation certificate.

    ``value`` has the shape of the input positions. ``tail_bound`` is an
    upper bound on the absolute density error from stopping at
    ``n_used``; it is below the requested tolerance whenever the call
    succeeded.
    """

    value: float | NDArray[np.float64]
    n_used: int
    tail_bound: float


def thermal_density_by_sum(
    x,
    spec: OscillatorSpec,
    thermal: ThermalSpec,
    tol: float = SUM_TOL_DEFAULT,
) -> TruncatedSumResult:
    """Thermal density via the explicit sum over eigenstate densities.

    One forward recurrence pass per call evaluates every level at every
    position, so cost is O(n_used * len(x)) with no polynomial tables.
    Raises :class:`TruncationCapError` naming the achievable tolerance if
    theta is too small for the requested ``tol`` under the level cap.
    """
    if not (0.0 < tol <= 1e-3):
        raise ValidationError(f"tol must be in (0, 1e-3], got {tol!r}")
    alpha = spec.width_parameter
    try:
        # Density bound alpha * 1 per level turns the density tolerance
        # into a weight-tail tolerance tol/alpha.
        weights = occupation_weights(thermal.theta, tol=min(tol / alpha, 1e-3))
    except TruncationCapError as err:
        achievable = alpha * err.achievable_tail
        raise TruncationCapError(
            f"eigenstate sum cannot reach density tolerance {tol:g} at "
            f"theta={thermal.theta:g}; achievable is {achievable:.3e}",
            achievable_tail=achievable,
        ) from None

    y = np.multiply(alpha, x)
    acc = np.zeros(np.shape(np.atleast_1d(y)), dtype=np.float64)
    for n, psi in enumerate(hermite_function_series(y, weights.n_max)):
        acc += weights.weights[n] * psi * psi
    value = alpha * acc
    return TruncatedSumResult(
        value=value if np.ndim(x) else float(value[0]),
        n_used=weights.n_max,
        tail_bound=alpha * weights.tail_bound,
    )


def moment_by_quadrature(
    density: Callable[[NDArray[np.float64]], NDArray[np.float64]],
    order: int,
    half_width: float,
    tol: float = MOMENT_TOL_DEFAULT,
) -> float:
    """Integral of x^order * density(x) over [-half_width, half_width].

    The density callable must be vectorized, non-negative, and decaying;
    the moment order is restricted to the ones the closed forms predict.
    """
    if order not in (0, 1, 2, 4):
        raise ValidationError(f"order must be one of 0, 1, 2, 4, got {order!r}")
    half_width = require_positive(half_width, "half_width")
    if order == 0:
        integrand = density
    else:
        def integrand(pts: NDArray[np.float64]) -> NDArray[np.float64]:
            return pts**order * np.asarray(density(pts), dtype=np.float64)

    return adaptive_simpson(integrand, -half_width, half_width, tol=tol)


@dataclass(frozen=True, eq=False)
class OracleReport:
    """Grid comparison of the eigenstate sum against the closed form."""

    theta: float
    alpha: float
    n_used: int
    tail_bound: float
    max_abs_deviation: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.max_abs_deviation < self.threshold


def equivalence_report(
    spec: OscillatorSpec,
    thermal: ThermalSpec,
    grid,
    threshold: float = 1e-10,
    sum_tol: float = SUM_TOL_DEFAULT,
) -> OracleReport:
    """Max |sum - closed form| over a position grid, with pass/fail."""
    grid = np.asarray(grid, dtype=np.float64)
    result = thermal_density_by_sum(grid, spec, thermal, tol=sum_tol)
    closed = thermal_density(grid, spec, thermal)
    deviation = float(np.max(np.abs(result.value - closed)))
    return OracleReport(
        theta=thermal.theta,
        alpha=spec.width_parameter,
        n_used=result.n_used,
        tail_bound=result.tail_bound,
        max_abs_deviation=deviation,
        threshold=require_positive(threshold, "threshold"),
    )
