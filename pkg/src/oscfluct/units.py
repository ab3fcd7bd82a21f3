"""Unit systems and the reduced-unit boundary.

Every numeric kernel in this package works in reduced units, where
hbar = k_B = 1 and the oscillator is described by two dimensionless
knobs: the inverse length scale ``alpha = sqrt(m*omega/hbar)`` and the
coldness ``theta = beta*hbar*omega``. Molecular inputs (amu, cm^-1,
kelvin) are converted here, at the boundary, and nowhere else.

Physical constants are kept in one table below. The 2019 SI redefinition
fixed h, c and k_B exactly; the atomic mass constant is the CODATA 2022
recommended value.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass

from .errors import ValidationError

# SI defining constants (exact since the 2019 redefinition).
PLANCK_SI = 6.62607015e-34  # J s, exact
SPEED_OF_LIGHT_SI = 299792458.0  # m/s, exact
BOLTZMANN_SI = 1.380649e-23  # J/K, exact
# Derived from the exact h so that h*c*nu and hbar*omega agree to the ulp.
HBAR_SI = PLANCK_SI / (2.0 * math.pi)  # J s
# CODATA 2022 recommended value (not exact; u = 1.66053906892(52)e-27 kg).
ATOMIC_MASS_SI = 1.66053906892e-27  # kg
ANGSTROM_SI = 1e-10  # m, by definition


def require_positive(value: float, name: str) -> float:
    """Return ``value`` as float, rejecting non-finite or non-positive input."""
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a number, got {value!r}") from None
    if not math.isfinite(v):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    if v <= 0.0:
        raise ValidationError(f"{name} must be positive, got {value!r}")
    return v


def require_finite(value: float, name: str) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a number, got {value!r}") from None
    if not math.isfinite(v):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return v


@dataclass(frozen=True)
class UnitSystem:
    """A named unit convention: the constants the formulas need.

    ``reduced`` fixes hbar = k_B = 1 (and by convention m = omega = 1
    unless a spec overrides them); ``molecular`` is plain SI, fed by
    amu/cm^-1/kelvin convenience constructors.
    """

    tag: str  # "reduced" | "molecular"
    hbar: float
    boltzmann: float

    def __post_init__(self) -> None:
        if self.tag not in ("reduced", "molecular"):
            raise ValidationError(f"unknown unit system tag {self.tag!r}")
        require_positive(self.hbar, "hbar")
        require_positive(self.boltzmann, "boltzmann")


REDUCED = UnitSystem(tag="reduced", hbar=1.0, boltzmann=1.0)
MOLECULAR = UnitSystem(tag="molecular", hbar=HBAR_SI, boltzmann=BOLTZMANN_SI)


@dataclass(frozen=True)
class OscillatorSpec:
    """One harmonic oscillator: mass, stiffness, and derived scales.

    Fields are stored in the units of the system that built the spec.
    ``width_parameter`` is alpha = sqrt(m*omega/hbar), the inverse length
    scale of the ground-state Gaussian.
    """

    mass: float
    spring_constant: float
    frequency: float
    width_parameter: float

    def __post_init__(self) -> None:
        m = require_positive(self.mass, "mass")
        k = require_positive(self.spring_constant, "spring_constant")
        w = require_positive(self.frequency, "frequency")
        require_positive(self.width_parameter, "width_parameter")
        if abs(k - m * w * w) > 1e-12 * abs(k):
            raise ValidationError(
                "inconsistent oscillator: spring_constant != mass*frequency^2 "
                f"(k={k!r}, m*w^2={m * w * w!r})"
            )

    @classmethod
    def from_mass_spring(
        cls, mass: float, spring_constant: float, units: UnitSystem = REDUCED
    ) -> "OscillatorSpec":
        m = require_positive(mass, "mass")
        k = require_positive(spring_constant, "spring_constant")
        w = math.sqrt(k / m)
        return cls(
            mass=m,
            spring_constant=k,
            frequency=w,
            width_parameter=math.sqrt(m * w / units.hbar),
        )

    @classmethod
    def from_mass_frequency(
        cls, mass: float, frequency: float, units: UnitSystem = REDUCED
    ) -> "OscillatorSpec":
        m = require_positive(mass, "mass")
        w = require_positive(frequency, "frequency")
        return cls(
            mass=m,
            spring_constant=m * w * w,
            frequency=w,
            width_parameter=math.sqrt(m * w / units.hbar),
        )

    @classmethod
    def from_molecular(cls, mass_amu: float, wavenumber_cm1: float) -> "OscillatorSpec":
        """Build an SI spec from an effective mass (amu) and a vibrational
        wavenumber (cm^-1), converting via omega = 2*pi*c*nu."""
        m = require_positive(mass_amu, "mass_amu") * ATOMIC_MASS_SI
        nu = require_positive(wavenumber_cm1, "wavenumber_cm1") * 100.0  # to 1/m
        omega = 2.0 * math.pi * SPEED_OF_LIGHT_SI * nu
        return cls.from_mass_frequency(m, omega, MOLECULAR)

    @classmethod
    def from_width(cls, width_parameter: float) -> "OscillatorSpec":
        """Reduced-units spec with a chosen alpha (keeps omega = 1, so
        mass = k = alpha^2)."""
        a = require_positive(width_parameter, "width_parameter")
        return cls(
            mass=a * a, spring_constant=a * a, frequency=1.0, width_parameter=a
        )


@dataclass(frozen=True)
class ThermalSpec:
    """A positive temperature and its derived inverse measures.

    ``theta`` = beta*hbar*omega is the only number the density formulas
    see; it is dimensionless in every unit system. T = 0 is deliberately
    not constructible (beta would be infinite); ground-state results come
    from the dedicated zero-temperature operations instead.
    """

    temperature: float
    beta: float
    theta: float

    def __post_init__(self) -> None:
        require_positive(self.temperature, "temperature")
        require_positive(self.beta, "beta")
        require_positive(self.theta, "theta")

    @classmethod
    def from_temperature(
        cls, temperature: float, spec: OscillatorSpec, units: UnitSystem = REDUCED
    ) -> "ThermalSpec":
        t = require_positive(temperature, "temperature")
        beta = 1.0 / (units.boltzmann * t)
        return cls(temperature=t, beta=beta, theta=beta * units.hbar * spec.frequency)

    @classmethod
    def from_theta(
        cls, theta: float, spec: OscillatorSpec, units: UnitSystem = REDUCED
    ) -> "ThermalSpec":
        th = require_positive(theta, "theta")
        beta = th / (units.hbar * spec.frequency)
        return cls(
            temperature=1.0 / (units.boltzmann * beta), beta=beta, theta=th
        )


@dataclass(frozen=True)
class ReductionScales:
    """SI value of one reduced unit, kept so a reduced result can be
    mapped back to molecular units. All fields are positive."""

    length: float  # m per reduced length (= 1/alpha)
    mass: float  # kg
    time: float  # s (= 1/omega)
    energy: float  # J (= hbar*omega)
    temperature: float  # K (= hbar*omega/k_B)


def to_reduced(
    spec: OscillatorSpec, thermal: ThermalSpec, units: UnitSystem
) -> tuple[OscillatorSpec, ThermalSpec]:
    """Map a (spec, thermal) pair into reduced units.

    The reduced pair has m = omega = alpha = 1 and the same theta, hence
    the same dimensionless density shape in alpha*x. Reduced input passes
    through unchanged.
    """
    if units.tag == "reduced":
        return spec, thermal
    reduced_spec = OscillatorSpec.from_mass_frequency(1.0, 1.0, REDUCED)
    return reduced_spec, ThermalSpec.from_theta(thermal.theta, reduced_spec, REDUCED)


def reduction_scales(spec: OscillatorSpec, units: UnitSystem) -> ReductionScales:
    """Scales that undo :func:`to_reduced` for a spec built in ``units``."""
    return ReductionScales(
        length=1.0 / spec.width_parameter,
        mass=spec.mass,
        time=1.0 / spec.frequency,
        energy=units.hbar * spec.frequency,
        temperature=units.hbar * spec.frequency / units.boltzmann,
    )


def to_molecular(
    spec: OscillatorSpec, thermal: ThermalSpec, scales: ReductionScales
) -> tuple[OscillatorSpec, ThermalSpec]:
    """Inverse of :func:`to_reduced` given the remembered scales."""
    mol_spec = OscillatorSpec.from_mass_frequency(
        scales.mass, 1.0 / scales.time, MOLECULAR
    )
    return mol_spec, ThermalSpec.from_temperature(
        scales.temperature / thermal.theta, mol_spec, MOLECULAR
    )


def quantumness_ratio(spec: OscillatorSpec, thermal: ThermalSpec) -> float:
    """2*k_B*T/(hbar*omega) = 2/theta.

    Above 1 the oscillator's position spread is thermally dominated,
    below 1 zero-point dominated; equality marks k_B*T = hbar*omega/2.
    """
    return 2.0 / thermal.theta


@dataclass(frozen=True)
class Preset:
    """Named molecular input set from a config file (design data)."""

    name: str
    mass_amu: float
    wavenumber_cm1: float
    temperatures_k: tuple[float, ...] | None = None

    def oscillator(self) -> OscillatorSpec:
        return OscillatorSpec.from_molecular(self.mass_amu, self.wavenumber_cm1)


def load_presets(path: str) -> dict[str, Preset]:
    """Read named presets from an INI file.

    Each section is a preset; required keys ``mass_amu`` and
    ``wavenumber_cm1``, optional ``temperature_k`` (comma-separated list)::

        [bond.CH]
        mass_amu = 0.930
        wavenumber_cm1 = 3000
        temperature_k = 100, 300, 1000
    """
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ValidationError(f"preset file not found or unreadable: {path}")
    presets: dict[str, Preset] = {}
    for section in parser.sections():
        sec = parser[section]
        try:
            mass = require_positive(sec["mass_amu"], f"[{section}] mass_amu")
            wavenumber = require_positive(
                sec["wavenumber_cm1"], f"[{section}] wavenumber_cm1"
            )
        except KeyError as missing:
            raise ValidationError(
                f"preset [{section}] is missing required key {missing}"
            ) from None
        temps: tuple[float, ...] | None = None
        if "temperature_k" in sec:
            temps = tuple(
                require_positive(tok, f"[{section}] temperature_k")
                for tok in sec["temperature_k"].split(",")
                if tok.strip()
            )
        presets[section] = Preset(
            name=section,
            mass_amu=mass,
            wavenumber_cm1=wavenumber,
            temperatures_k=temps,
        )
    return presets
