"""Oscillator eigenvalues and numerically stable eigenstate densities.

The textbook density for level n is

    p_n(x) = alpha / (2^n n! sqrt(pi)) * H_n(alpha x)^2 * exp(-alpha^2 x^2)

which is exact but useless in float64 beyond n ~ 150: H_n and 2^n n!
overflow separately long before their ratio does. The stable route used
everywhere here evaluates the *normalized* Hermite functions

    psi_n(y) = H_n(y) exp(-y^2/2) / sqrt(2^n n! sqrt(pi))

through the recurrence

    psi_{n+1} = y sqrt(2/(n+1)) psi_n - sqrt(n/(n+1)) psi_{n-1}

with the Gaussian folded into the n = 0 start. psi_n stays bounded by
pi^(-1/4) for every n, so the recurrence itself never overflows; what can
underflow is the Gaussian start at large |y|. Each grid point therefore
carries a separate log-scale offset, and intermediate magnitudes are kept
inside float64 by exact power-of-two rescaling. Verified usable for n up
to 1e4 and |alpha x| up to 100.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from .errors import HermiteOverflowError, ValidationError
from .units import OscillatorSpec

_LOG_PI_QUARTER = 0.25 * math.log(math.pi)
# Power-of-two rescale bounds: multiplication by these is exact in IEEE754.
_BIG = 2.0**512
_SMALL = 2.0**-512
_LOG_BIG = 512.0 * math.log(2.0)


def _check_order(n: int) -> int:
    if n != int(n) or n < 0:
        raise ValidationError(f"quantum number n must be a non-negative integer, got {n!r}")
    return int(n)


def _check_grid(y) -> NDArray[np.float64]:
    arr = np.asarray(y, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValidationError("argument must be finite")
    return arr


@dataclass(frozen=True)
class EigenLevel:
    """Quantum number and energy of one oscillator level."""

    n: int
    energy: float


def energy(n: int, spec: OscillatorSpec) -> float:
    """E_n = hbar*omega*(n + 1/2), in reduced units (hbar = 1).

    Exact for any n representable in float64; n = 10^6 gives 1000000.5
    with no rounding.
    """
    n = _check_order(n)
    return spec.frequency * (n + 0.5)


def level(n: int, spec: OscillatorSpec) -> EigenLevel:
    return EigenLevel(n=_check_order(n), energy=energy(n, spec))


def classical_turning_point(n: int, spec: OscillatorSpec) -> float:
    """|x| where level n's classical kinetic energy vanishes: sqrt(2n+1)/alpha.

    The density of level n is concentrated inside this radius; grids for
    node counting or normalization need only a ~2/alpha margin beyond it.
    """
    n = _check_order(n)
    return math.sqrt(2.0 * n + 1.0) / spec.width_parameter


def hermite(n: int, y) -> float | NDArray[np.float64]:
    """Physicists' Hermite polynomial H_n(y) by the raw three-term recurrence.

    Intended for small n (<= ~30) where raw values fit float64; overflow
    raises instead of returning inf.
    """
    n = _check_order(n)
    arr = _check_grid(y)
    h_prev = np.ones_like(arr)
    if n == 0:
        out = h_prev
    else:
        h = 2.0 * arr
        with np.errstate(over="ignore", invalid="ignore"):
            for k in range(1, n):
                h, h_prev = 2.0 * arr * h - 2.0 * k * h_prev, h
        out = h
    if not np.all(np.isfinite(out)):
        raise HermiteOverflowError(
            f"H_{n} overflowed float64 on this input; use hermite_function, "
            "which evaluates the bounded normalized form"
        )
    return out if np.ndim(y) else float(out)


def hermite_function_series(y, n_max: int) -> Iterator[NDArray[np.float64]]:
    """Yield psi_0(y), psi_1(y), ..., psi_{n_max}(y) in one forward pass.

    Each yielded array matches the shape of ``y``. Values too small for
    float64 flush to 0. This is the O(n_max) workhorse behind both
    :func:`hermite_function` and the thermal eigenstate sum.
    """
    n_max = _check_order(n_max)
    arr = np.atleast_1d(_check_grid(y)).copy()

    # Scaled representation: psi_n = p * exp(log_offset), pointwise.
    log_offset = -0.5 * arr * arr - _LOG_PI_QUARTER
    p = np.ones_like(arr)
    q = np.zeros_like(arr)
    yield p * np.exp(log_offset)

    for n in range(1, n_max + 1):
        c1 = math.sqrt(2.0 / n)
        c2 = math.sqrt((n - 1.0) / n)
        p, q = c1 * arr * p - c2 * q, p

        mag = np.maximum(np.abs(p), np.abs(q))
        big = mag > _BIG
        if np.any(big):
            p = np.where(big, p * _SMALL, p)
            q = np.where(big, q * _SMALL, q)
            log_offset = np.where(big, log_offset + _LOG_BIG, log_offset)
        small = (mag > 0.0) & (mag < _SMALL)
        if np.any(small):
            p = np.where(small, p * _BIG, p)
            q = np.where(small, q * _BIG, q)
            log_offset = np.where(small, log_offset - _LOG_BIG, log_offset)

        yield p * np.exp(log_offset)


def hermite_function(n: int, y) -> float | NDArray[np.float64]:
    """Normalized Hermite function psi_n(y), bounded by pi^(-1/4) for all n."""
    out = None
    for out in hermite_function_series(y, _check_order(n)):
        pass
    assert out is not None
    return out if np.ndim(y) else float(out[0])


def eigen_density(n: int, x, spec: OscillatorSpec) -> float | NDArray[np.float64]:
    """Position density of eigenstate n: alpha * psi_n(alpha x)^2.

    Finite for n up to at least 1e4 and |alpha x| up to at least 100;
    far-tail values below the float64 floor flush to 0.
    """
    alpha = spec.width_parameter
    val = hermite_function(n, np.multiply(alpha, x))
    return alpha * val * val


def eigen_density_naive(n: int, x, spec: OscillatorSpec) -> float | NDArray[np.float64]:
    """Textbook form of the level-n density, raw H_n and explicit 2^n n!.

    Cross-check route only: overflows for n beyond ~150 (and much earlier
    at large |alpha x|), which is the reason eigen_density exists.
    """
    n = _check_order(n)
    try:
        weight = float(2**n * math.factorial(n))
    except OverflowError:
        raise HermiteOverflowError(
            f"2^n n! exceeds float64 range at n={n}; use eigen_density"
        ) from None
    alpha = spec.width_parameter
    y = np.multiply(alpha, x)
    h = hermite(n, y)
    norm = alpha / (weight * math.sqrt(math.pi))
    return norm * h * h * np.exp(-np.asarray(y, dtype=np.float64) ** 2)
