"""Unit conversions, constants, and input validation."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscfluct import (
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
    ThermalSpec,
    ValidationError,
    load_presets,
    quantumness_ratio,
    reduction_scales,
    to_molecular,
    to_reduced,
    variance_classical,
    variance_ground,
)


def test_constants_match_published_values():
    # SI 2019 exact definitions, and the CODATA 2022 atomic mass constant.
    scipy_constants = pytest.importorskip("scipy.constants")
    assert PLANCK_SI == scipy_constants.h
    assert SPEED_OF_LIGHT_SI == scipy_constants.c
    assert BOLTZMANN_SI == scipy_constants.k
    assert HBAR_SI == pytest.approx(scipy_constants.hbar, rel=1e-15)
    # scipy may carry an older CODATA table; the constant moved by ~1e-10
    # relative between adjustments, so compare loosely.
    assert ATOMIC_MASS_SI == pytest.approx(scipy_constants.atomic_mass, rel=5e-9)
    assert ANGSTROM_SI == 1e-10


def test_theta_hand_computed_molecular_point():
    # theta = hbar*omega/(k_B T) with omega = 2*pi*c*(3000 cm^-1):
    # (6.62607015e-34 * 299792458 * 3000e2) / (1.380649e-23 * 300)
    spec = OscillatorSpec.from_molecular(1.0, 3000.0)
    thermal = ThermalSpec.from_temperature(300.0, spec, MOLECULAR)
    expected = (6.62607015e-34 * 299792458.0 * 3000.0e2) / (1.380649e-23 * 300.0)
    assert expected == pytest.approx(14.387768775039335, rel=1e-13)
    assert thermal.theta == pytest.approx(expected, rel=1e-12)


def test_from_molecular_field_relations():
    spec = OscillatorSpec.from_molecular(12.0, 1000.0)
    assert spec.mass == pytest.approx(12.0 * ATOMIC_MASS_SI, rel=1e-15)
    omega = 2.0 * math.pi * SPEED_OF_LIGHT_SI * 1000.0e2
    assert spec.frequency == pytest.approx(omega, rel=1e-15)
    assert spec.spring_constant == pytest.approx(spec.mass * omega**2, rel=1e-14)
    assert spec.width_parameter == pytest.approx(
        math.sqrt(spec.mass * omega / HBAR_SI), rel=1e-14
    )


def test_reduced_round_trip_molecular():
    spec = OscillatorSpec.from_molecular(12.0, 1000.0)
    thermal = ThermalSpec.from_temperature(300.0, spec, MOLECULAR)
    red_spec, red_thermal = to_reduced(spec, thermal, MOLECULAR)
    assert red_spec.mass == 1.0
    assert red_spec.frequency == 1.0
    assert red_thermal.theta == thermal.theta

    scales = reduction_scales(spec, MOLECULAR)
    back_spec, back_thermal = to_molecular(red_spec, red_thermal, scales)
    assert back_spec.mass == pytest.approx(spec.mass, rel=1e-12)
    assert back_spec.frequency == pytest.approx(spec.frequency, rel=1e-12)
    assert back_spec.spring_constant == pytest.approx(spec.spring_constant, rel=1e-12)
    assert back_thermal.temperature == pytest.approx(300.0, rel=1e-12)


@settings(deadline=None, max_examples=60)
@given(
    mass_amu=st.floats(min_value=0.5, max_value=300.0),
    wavenumber=st.floats(min_value=10.0, max_value=5000.0),
    temperature=st.floats(min_value=1.0, max_value=5000.0),
)
def test_round_trip_is_identity_everywhere(mass_amu, wavenumber, temperature):
    spec = OscillatorSpec.from_molecular(mass_amu, wavenumber)
    thermal = ThermalSpec.from_temperature(temperature, spec, MOLECULAR)
    scales = reduction_scales(spec, MOLECULAR)
    red_spec, red_thermal = to_reduced(spec, thermal, MOLECULAR)
    back_spec, back_thermal = to_molecular(red_spec, red_thermal, scales)
    assert back_spec.mass == pytest.approx(spec.mass, rel=1e-12)
    assert back_spec.frequency == pytest.approx(spec.frequency, rel=1e-12)
    assert back_thermal.temperature == pytest.approx(temperature, rel=1e-12)
    assert back_thermal.theta == pytest.approx(thermal.theta, rel=1e-12)


def test_reduced_passthrough():
    spec = OscillatorSpec.from_width(2.0)
    thermal = ThermalSpec.from_theta(3.0, spec)
    assert to_reduced(spec, thermal, REDUCED) == (spec, thermal)


def test_from_width_conventions():
    spec = OscillatorSpec.from_width(2.5)
    assert spec.frequency == 1.0
    assert spec.mass == pytest.approx(6.25)
    assert spec.spring_constant == pytest.approx(6.25)
    assert spec.width_parameter == 2.5


def test_constructor_consistency_guard():
    with pytest.raises(ValidationError):
        OscillatorSpec(mass=1.0, spring_constant=2.0, frequency=1.0, width_parameter=1.0)


def test_from_mass_spring_frequency_agree():
    a = OscillatorSpec.from_mass_spring(2.0, 8.0)
    b = OscillatorSpec.from_mass_frequency(2.0, 2.0)
    assert a.frequency == pytest.approx(b.frequency, rel=1e-15)
    assert a.width_parameter == pytest.approx(b.width_parameter, rel=1e-15)


@pytest.mark.parametrize("theta", [0.1, 1.0, 10.0])
def test_quantumness_ratio_equals_variance_ratio(theta):
    spec = OscillatorSpec.from_width(1.3)
    thermal = ThermalSpec.from_theta(theta, spec)
    ratio = quantumness_ratio(spec, thermal)
    assert ratio * theta == pytest.approx(2.0, rel=1e-14)
    assert ratio == pytest.approx(
        variance_classical(spec, thermal) / variance_ground(spec), rel=1e-12
    )


@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
def test_temperature_must_be_positive_and_finite(bad):
    spec = OscillatorSpec.from_width(1.0)
    with pytest.raises(ValidationError):
        ThermalSpec.from_temperature(bad, spec)
    with pytest.raises(ValidationError):
        ThermalSpec.from_theta(bad, spec)


@pytest.mark.parametrize("bad", [0.0, -2.0])
def test_spec_inputs_must_be_positive(bad):
    with pytest.raises(ValidationError):
        OscillatorSpec.from_width(bad)
    with pytest.raises(ValidationError):
        OscillatorSpec.from_mass_spring(bad, 1.0)
    with pytest.raises(ValidationError):
        OscillatorSpec.from_molecular(1.0, bad)


def test_load_presets(tmp_path):
    path = tmp_path / "bonds.ini"
    path.write_text(
        "[bond.CH]\n"
        "mass_amu = 0.930\n"
        "wavenumber_cm1 = 3000\n"
        "temperature_k = 100, 300, 1000\n"
        "\n"
        "[bond.CO]\n"
        "mass_amu = 6.861\n"
        "wavenumber_cm1 = 1700\n"
    )
    presets = load_presets(str(path))
    assert set(presets) == {"bond.CH", "bond.CO"}
    ch = presets["bond.CH"]
    assert ch == Preset("bond.CH", 0.930, 3000.0, (100.0, 300.0, 1000.0))
    assert presets["bond.CO"].temperatures_k is None
    assert ch.oscillator().width_parameter > 0.0


def test_load_presets_rejects_bad_input(tmp_path):
    with pytest.raises(ValidationError):
        load_presets(str(tmp_path / "missing.ini"))

    incomplete = tmp_path / "incomplete.ini"
    incomplete.write_text("[x]\nmass_amu = 1.0\n")
    with pytest.raises(ValidationError):
        load_presets(str(incomplete))

    junk = tmp_path / "junk.ini"
    junk.write_text("[x]\nmass_amu = heavy\nwavenumber_cm1 = 3000\n")
    with pytest.raises(ValidationError):
        load_presets(str(junk))
