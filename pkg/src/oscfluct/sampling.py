"""Exact random-variate generators for the three position distributions.

All three targets have exact samplers, so there is no MCMC anywhere:
the two Gaussian regimes draw from a ziggurat-backed normal generator
with the closed-form standard deviation, and the fixed-energy regime
maps uniform phases through the orbit, x = A cos(phi), which has the
arcsine law as its exact distribution.

Reproducibility contract: batches are generated by numpy's PCG64
Generator seeded with SeedSequence(entropy=seed, spawn_key=(stream,)),
where each regime owns a fixed stream index. Same seed, same parameters,
same platform-independent bits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from .classical import ClassicalOrbit
from .errors import ValidationError
from .thermal import variance, variance_classical
from .units import OscillatorSpec, ThermalSpec


class Regime(enum.Enum):
    """Which distribution a batch was drawn from."""

    QUANTUM = "quantum"
    CLASSICAL_CANONICAL = "classical"
    MICROCANONICAL = "microcanonical"


# Stream indices: the three regimes draw from disjoint child streams of
# the same user seed, so mixed-regime runs never share bits.
_STREAM = {
    Regime.QUANTUM: 0,
    Regime.CLASSICAL_CANONICAL: 1,
    Regime.MICROCANONICAL: 2,
}


@dataclass(frozen=True, eq=False)
class SampleBatch:
    values: NDArray[np.float64]
    seed: int
    regime: Regime


def generator(seed: int, stream: int) -> np.random.Generator:
    """PCG64 generator on child stream ``stream`` of ``seed``."""
    if seed != int(seed) or seed < 0:
        raise ValidationError(f"seed must be a non-negative integer, got {seed!r}")
    return np.random.default_rng(
        np.random.SeedSequence(entropy=int(seed), spawn_key=(int(stream),))
    )


def _check_count(n: int) -> int:
    if n != int(n) or n < 1:
        raise ValidationError(f"sample count must be a positive integer, got {n!r}")
    return int(n)


def sample_quantum_thermal(
    n: int, spec: OscillatorSpec, thermal: ThermalSpec, seed: int
) -> SampleBatch:
    """n i.i.d. draws from the exact quantum thermal position distribution.

    That distribution is a zero-mean Gaussian whose variance is the
    closed-form coth law, so the draws are plain normals at that sigma.
    """
    n = _check_count(n)
    sigma = math.sqrt(variance(spec, thermal))
    rng = generator(seed, _STREAM[Regime.QUANTUM])
    return SampleBatch(
        values=rng.normal(0.0, sigma, size=n), seed=int(seed), regime=Regime.QUANTUM
    )


def sample_classical_canonical(
    n: int, spec: OscillatorSpec, thermal: ThermalSpec, seed: int
) -> SampleBatch:
    """n draws from the Boltzmann position distribution (variance k_B T / k)."""
    n = _check_count(n)
    sigma = math.sqrt(variance_classical(spec, thermal))
    rng = generator(seed, _STREAM[Regime.CLASSICAL_CANONICAL])
    return SampleBatch(
        values=rng.normal(0.0, sigma, size=n),
        seed=int(seed),
        regime=Regime.CLASSICAL_CANONICAL,
    )


def sample_microcanonical(n: int, orbit: ClassicalOrbit, seed: int) -> SampleBatch:
    """n draws from the fixed-energy arcsine law via x = A cos(phi).

    A uniform phase phi on [0, 2 pi) pushed through the orbit position is
    an exact arcsine-law sampler; every draw lies in [-A, A] by
    construction.
    """
    n = _check_count(n)
    rng = generator(seed, _STREAM[Regime.MICROCANONICAL])
    phases = rng.uniform(0.0, 2.0 * math.pi, size=n)
    return SampleBatch(
        values=orbit.amplitude * np.cos(phases),
        seed=int(seed),
        regime=Regime.MICROCANONICAL,
    )


def second_moment(batch: SampleBatch) -> float:
    """Mean of squares; the estimator the acceptance bands are built for.

    The targets all have known mean 0, so the second moment is the
    variance estimator with the smallest, exactly computable spread.
    """
    return float(np.mean(batch.values * batch.values))


def second_moment_band(n: int, expected: float, regime: Regime) -> float:
    """Pre-registered 3-sigma half-width for the mean-of-squares estimator.

    Var(x^2) = 2 m^2 for a Gaussian with second moment m, and m^2/2 for
    the arcsine law (E[x^4] = 3 A^4/8 against m = A^2/2), giving
    3 * sqrt(c/n) * m with c = 2 or 1/2.
    """
    n = _check_count(n)
    c = 0.5 if regime is Regime.MICROCANONICAL else 2.0
    return 3.0 * math.sqrt(c / n) * expected


def ks_statistic(batch: SampleBatch, cdf: Callable) -> float:
    """Kolmogorov-Smirnov distance between the batch and a target CDF."""
    values = np.sort(batch.values)
    n = values.size
    f = np.asarray(cdf(values), dtype=np.float64)
    steps_hi = np.arange(1, n + 1) / n
    steps_lo = np.arange(0, n) / n
    return float(max(np.max(steps_hi - f), np.max(f - steps_lo)))
