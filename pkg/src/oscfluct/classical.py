"""Fully classical route: Newtonian orbit, arcsine density, energy average.

A classical oscillator of fixed energy E follows x(t) = A cos(omega t)
and spends its time according to the arcsine law

    p_cl(x) = 1 / (pi sqrt(A^2 - x^2)),   |x| < A,

which diverges at the turning points. Averaging that single-orbit
density over Boltzmann-weighted energies must reproduce the classical
Gaussian; :func:`canonical_classical_density` performs that average
numerically and is compared against the closed form in tests. A velocity
Verlet simulator provides the empirical time-average check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numba import njit
from numpy.typing import NDArray

from .errors import DomainError, ValidationError
from .quadrature import adaptive_simpson
from .units import OscillatorSpec, ThermalSpec, require_finite, require_positive

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0
# Energy cutoff for the canonical average: integrate z in [0, sqrt(40/beta)],
# leaving a Boltzmann tail below e^-40.
ENERGY_CUTOFF_EXPONENT = 40.0
MIN_STEPS = 10**5
MIN_BINS = 20
MAX_RATIONAL_DENOMINATOR = 256


@dataclass(frozen=True)
class ClassicalOrbit:
    """One fixed-energy orbit: amplitude, energy, and period."""

    amplitude: float
    energy: float
    period: float

    @classmethod
    def from_amplitude(cls, amplitude: float, spec: OscillatorSpec) -> "ClassicalOrbit":
        a = require_positive(amplitude, "amplitude")
        return cls(
            amplitude=a,
            energy=0.5 * spec.spring_constant * a * a,
            period=2.0 * math.pi / spec.frequency,
        )

    @classmethod
    def from_energy(cls, energy: float, spec: OscillatorSpec) -> "ClassicalOrbit":
        e = require_positive(energy, "energy")
        return cls(
            amplitude=math.sqrt(2.0 * e / spec.spring_constant),
            energy=e,
            period=2.0 * math.pi / spec.frequency,
        )


def trajectory(t, orbit: ClassicalOrbit, spec: OscillatorSpec) -> float | NDArray[np.float64]:
    """Position at time t for the orbit started at (A, 0): A cos(omega t)."""
    arr = np.asarray(t, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValidationError("time must be finite")
    out = orbit.amplitude * np.cos(spec.frequency * arr)
    return out if np.ndim(t) else float(out)


def microcanonical_density(x, orbit: ClassicalOrbit) -> float | NDArray[np.float64]:
    """Arcsine density 1/(pi sqrt(A^2 - x^2)), defined strictly inside (-A, A).

    The density is infinite at the turning points, so |x| >= A is a
    domain error rather than an inf return.
    """
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValidationError("positions must be finite")
    amp = orbit.amplitude
    if np.any(np.abs(arr) >= amp):
        worst = float(np.max(np.abs(arr)))
        raise DomainError(
            f"arcsine density needs |x| < amplitude; got |x| up to {worst!r} "
            f"with amplitude {amp!r}"
        )
    out = 1.0 / (math.pi * np.sqrt((amp - arr) * (amp + arr)))
    return out if np.ndim(x) else float(out)


def microcanonical_cdf(x, orbit: ClassicalOrbit) -> float | NDArray[np.float64]:
    """CDF of the arcsine law, 1/2 + arcsin(x/A)/pi, clamped to [-A, A]."""
    arr = np.clip(np.asarray(x, dtype=np.float64), -orbit.amplitude, orbit.amplitude)
    out = 0.5 + np.arcsin(arr / orbit.amplitude) / math.pi
    return out if np.ndim(x) else float(out)


def canonical_classical_density(
    x, spec: OscillatorSpec, thermal: ThermalSpec, tol: float = 1e-12
) -> float | NDArray[np.float64]:
    """Boltzmann average of the single-orbit density, done numerically.

    The energy integral over E >= k x^2 / 2 has an integrable
    1/sqrt(E - k x^2/2) singularity at its lower limit. Substituting
    E = k x^2/2 + z^2 removes it exactly: the integrand becomes
    (sqrt(2k)/pi) exp(-beta (k x^2/2 + z^2)), smooth on z in [0, Z] with
    Z = sqrt(40/beta) (the discarded tail is below e^-40). The result
    must coincide with the closed-form classical Gaussian; this function
    is the independent route of that comparison and never calls it.
    """
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if not np.all(np.isfinite(arr)):
        raise ValidationError("positions must be finite")
    beta = thermal.beta
    k = spec.spring_constant
    z_cut = math.sqrt(ENERGY_CUTOFF_EXPONENT / beta)
    prefactor = math.sqrt(2.0 * k) / math.pi

    out = np.empty_like(arr)
    for i, xi in enumerate(arr.ravel()):
        shift = 0.5 * k * xi * xi

        def integrand(z: NDArray[np.float64]) -> NDArray[np.float64]:
            return prefactor * np.exp(-beta * (shift + z * z))

        # Normalizing partition integral for the energy average is 1/beta.
        out.ravel()[i] = beta * adaptive_simpson(integrand, 0.0, z_cut, tol=tol)
    return out if np.ndim(x) else float(out[0])


@dataclass(frozen=True, eq=False)
class TrajectoryHistogram:
    """Position histogram of a simulated orbit plus integration diagnostics.

    ``dt`` is the time step actually used (after any anti-aliasing
    nudge); ``energy_drift`` is |E_final - E_initial| / E_initial.
    """

    bin_edges: NDArray[np.float64]
    counts: NDArray[np.int64]
    total_steps: int
    dt: float
    energy_drift: float
    nudged: bool

    @property
    def bin_width(self) -> float:
        return float(self.bin_edges[1] - self.bin_edges[0])

    def density(self) -> NDArray[np.float64]:
        """Histogram normalized to a probability density."""
        return self.counts / (self.total_steps * self.bin_width)


@njit(cache=True)
def _verlet_bin(x0, v0, omega2, dt, steps, counts, lo, inv_width):
    """Velocity Verlet with in-loop binning; returns the final state."""
    nbins = counts.size
    x = x0
    v = v0
    for _ in range(steps):
        v_half = v - 0.5 * dt * omega2 * x
        x = x + dt * v_half
        v = v_half - 0.5 * dt * omega2 * x
        idx = int((x - lo) * inv_width)
        if idx < 0:
            idx = 0
        elif idx >= nbins:
            idx = nbins - 1
        counts[idx] += 1
    return x, v


@njit(cache=True)
def _verlet_advance(x0, v0, omega2, dt, steps):
    x = x0
    v = v0
    for _ in range(steps):
        v_half = v - 0.5 * dt * omega2 * x
        x = x + dt * v_half
        v = v_half - 0.5 * dt * omega2 * x
    return x, v


def verlet_advance(
    x0: float, v0: float, spec: OscillatorSpec, dt: float, steps: int
) -> tuple[float, float]:
    """Advance (x, v) by ``steps`` velocity-Verlet steps of size ``dt``.

    Negative dt integrates backward, which is how the time-reversibility
    property is checked.
    """
    require_finite(x0, "x0")
    require_finite(v0, "v0")
    dt = require_finite(dt, "dt")
    if dt == 0.0:
        raise ValidationError("dt must be nonzero")
    if steps != int(steps) or steps < 0:
        raise ValidationError(f"steps must be a non-negative integer, got {steps!r}")
    omega2 = spec.frequency * spec.frequency
    return _verlet_advance(float(x0), float(v0), omega2, float(dt), int(steps))


def _is_aliased(phase_fraction: float, steps: int) -> bool:
    """True when sampling at this per-step phase revisits a short cycle.

    The discrete map rotates by a fixed fraction of a cycle each step.
    If that fraction sits within 1/steps of a rational p/q with small q,
    the whole run precesses less than one full cycle past the q-point
    comb, so the histogram only ever sees ~q distinct positions.
    """
    near = Fraction(phase_fraction).limit_denominator(MAX_RATIONAL_DENOMINATOR)
    return abs(phase_fraction - float(near)) * steps < 1.0


def simulate_histogram(
    orbit: ClassicalOrbit,
    spec: OscillatorSpec,
    dt: float,
    steps: int,
    bins: int,
) -> TrajectoryHistogram:
    """Integrate the orbit with velocity Verlet and histogram the positions.

    Positions are recorded every step. The effective per-step phase
    advance of the discrete map, arccos(1 - (omega dt)^2/2), is checked
    against low-order rationals; an aliased dt is nudged by 1/golden
    ratio so the samples sweep the orbit densely. Round-off can push
    |x| past A by a few ulps, so the outermost bins absorb the clipped
    values and counts always sum to ``steps``.
    """
    dt = require_positive(dt, "dt")
    if steps != int(steps) or steps < MIN_STEPS:
        raise ValidationError(f"steps must be an integer >= {MIN_STEPS}, got {steps!r}")
    if bins != int(bins) or bins < MIN_BINS:
        raise ValidationError(f"bins must be an integer >= {MIN_BINS}, got {bins!r}")
    if not dt < orbit.period / 20.0:
        raise ValidationError(
            f"dt={dt!r} too coarse for a stable orbit; need dt < period/20 = "
            f"{orbit.period / 20.0!r}"
        )
    steps = int(steps)
    bins = int(bins)

    omega = spec.frequency
    used_dt = dt
    nudged = False
    for _ in range(3):
        # Effective rotation per step of the discrete Verlet map.
        phase = math.acos(1.0 - 0.5 * (omega * used_dt) ** 2) / (2.0 * math.pi)
        if not _is_aliased(phase, steps):
            break
        used_dt = used_dt / GOLDEN_RATIO
        nudged = True

    amp = orbit.amplitude
    counts = np.zeros(bins, dtype=np.int64)
    x_final, v_final = _verlet_bin(
        amp, 0.0, omega * omega, used_dt, steps, counts, -amp, bins / (2.0 * amp)
    )

    energy_final = 0.5 * spec.mass * v_final * v_final + 0.5 * spec.spring_constant * x_final * x_final
    drift = abs(energy_final - orbit.energy) / orbit.energy
    return TrajectoryHistogram(
        bin_edges=np.linspace(-amp, amp, bins + 1),
        counts=counts,
        total_steps=steps,
        dt=used_dt,
        energy_drift=drift,
        nudged=nudged,
    )


def bin_averaged_density(orbit: ClassicalOrbit, bin_edges) -> NDArray[np.float64]:
    """Exact arcsine-law probability density averaged over each bin.

    Uses the closed-form CDF, so the edge bins (where the pointwise
    density diverges) still get finite, exact averages.
    """
    edges = np.asarray(bin_edges, dtype=np.float64)
    if edges.ndim != 1 or edges.size < 2:
        raise ValidationError("bin_edges must be a 1-D array of at least 2 edges")
    cdf = microcanonical_cdf(edges, orbit)
    return np.diff(cdf) / np.diff(edges)
