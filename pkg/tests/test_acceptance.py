"""Acceptance gate: one test per release criterion, one verdict line each.

Each test prints a single ``criterion N ... PASS|FAIL`` line before its
assertions so the suite log shows the full scorecard at a glance.
"""

import io
import time
from pathlib import Path

import numpy as np
import pytest

from oscfluct import (
    ClassicalOrbit,
    OscillatorSpec,
    Regime,
    ThermalSpec,
    adaptive_simpson,
    bin_averaged_density,
    canonical_classical_density,
    classical_density,
    classical_turning_point,
    default_grid,
    eigen_density,
    eigen_density_naive,
    equivalence_report,
    hermite_function,
    ks_statistic,
    microcanonical_cdf,
    moment_by_quadrature,
    quantumness_ratio,
    sample_classical_canonical,
    sample_microcanonical,
    sample_quantum_thermal,
    second_moment,
    second_moment_band,
    simulate_histogram,
    thermal_density,
    variance,
    variance_classical,
    variance_ground,
)
from oscfluct.cli import main, parse_config_echo, run_config

SEED = 1234


def verdict(num: int, name: str, ok: bool, detail: str) -> bool:
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num} ({name}): {status} [{detail}]")
    return ok


def test_criterion_1_oracle_equivalence():
    start = time.perf_counter()
    worst = 0.0
    all_passed = True
    for alpha in (0.5, 1.0, 3.0):
        spec = OscillatorSpec.from_width(alpha)
        for theta in (0.1, 0.5, 1.0, 2.0, 10.0):
            thermal = ThermalSpec.from_theta(theta, spec)
            grid = default_grid(spec, thermal, points=101, span_sigmas=6.0)
            report = equivalence_report(spec, thermal, grid, threshold=1e-10)
            worst = max(worst, report.max_abs_deviation)
            all_passed = all_passed and report.passed
    elapsed = time.perf_counter() - start
    ok = all_passed and worst < 1e-10 and elapsed < 5.0
    assert verdict(
        1,
        "oracle equivalence",
        ok,
        f"max |sum - closed| = {worst:.3e}, {elapsed:.2f} s over 15 cases",
    )


def test_criterion_2_classical_identity():
    start = time.perf_counter()
    spec = OscillatorSpec.from_width(1.0)
    worst = 0.0
    for theta in (0.5, 1.0, 2.0):
        thermal = ThermalSpec.from_theta(theta, spec)
        grid = default_grid(spec, thermal, points=101, span_sigmas=6.0)
        weighted = canonical_classical_density(grid, spec, thermal)
        closed = classical_density(grid, spec, thermal)
        worst = max(worst, float(np.max(np.abs(weighted - closed))))
    elapsed = time.perf_counter() - start
    ok = worst < 1e-8 and elapsed < 2.0
    assert verdict(
        2,
        "classical identity",
        ok,
        f"max abs deviation = {worst:.3e}, {elapsed:.2f} s",
    )


def test_criterion_3_variance_law():
    spec = OscillatorSpec.from_width(1.0)
    worst = 0.0
    for theta in (0.01, 1.0, 100.0):
        thermal = ThermalSpec.from_theta(theta, spec)
        sigma = np.sqrt(variance(spec, thermal))
        numeric = moment_by_quadrature(
            lambda x: thermal_density(x, spec, thermal),
            order=2,
            half_width=9.0 * sigma,
            tol=1e-13,
        )
        worst = max(worst, abs(numeric / variance(spec, thermal) - 1.0))
    ok = worst < 1e-9
    assert verdict(3, "variance law", ok, f"max rel error = {worst:.3e}")


def test_criterion_4_limits(tmp_path, monkeypatch):
    spec = OscillatorSpec.from_width(1.0)
    cold = variance(spec, ThermalSpec.from_theta(60.0, spec))
    cold_err = abs(cold / variance_ground(spec) - 1.0)

    theta_hot = 1e-4
    hot = variance(spec, ThermalSpec.from_theta(theta_hot, spec))
    hot_err = abs(hot * theta_hot * spec.width_parameter**2 - 1.0)

    monkeypatch.chdir(tmp_path)
    assert main(["variance-table", "--theta", "0.01,0.1,1,10,100"]) == 0
    lines = [
        line
        for line in Path("variance_table.csv").read_text().splitlines()
        if not line.startswith("#")
    ]
    table = np.genfromtxt(io.StringIO("\n".join(lines)), delimiter=",", names=True)
    ratio_err = float(np.max(np.abs(table["ratio"] * table["theta"] / 2.0 - 1.0)))

    ok = cold_err < 1e-12 and hot_err < 1e-7 and ratio_err < 1e-12
    assert verdict(
        4,
        "limiting forms",
        ok,
        f"cold rel = {cold_err:.3e}, hot rel = {hot_err:.3e}, "
        f"ratio rel = {ratio_err:.3e}",
    )


def test_criterion_5_inequality_chain():
    rng = np.random.default_rng(SEED)
    thetas = 10.0 ** rng.uniform(-6.0, 3.0, 1000)
    spec = OscillatorSpec.from_width(1.0)
    var = np.array(
        [variance(spec, ThermalSpec.from_theta(t, spec)) for t in thetas]
    )
    var_cl = np.array(
        [variance_classical(spec, ThermalSpec.from_theta(t, spec)) for t in thetas]
    )
    var_0 = variance_ground(spec)
    # A violation is the thermal variance dropping below either bound.
    violations = int(np.sum(var < var_cl) + np.sum(var < var_0))
    # Strict dominance holds wherever float64 can resolve the gap: always
    # against the classical value, and against the ground value until
    # tanh(theta/2) rounds to one.
    strict_cl = bool(np.all(var > var_cl))
    resolvable = np.tanh(thetas / 2.0) < 1.0
    strict_0 = bool(np.all(var[resolvable] > var_0))
    ok = violations == 0 and strict_cl and strict_0
    assert verdict(
        5,
        "inequality chain",
        ok,
        f"violations = {violations}/1000, strict where resolvable = "
        f"{strict_cl and strict_0}",
    )


def test_criterion_6_eigenstate_densities():
    spec = OscillatorSpec.from_width(1.0)
    worst_norm = 0.0
    node_ok = True
    for n in range(51):
        half = classical_turning_point(n, spec) + 8.0
        total = adaptive_simpson(
            lambda x: eigen_density(n, x, spec), -half, half, tol=1e-11
        )
        worst_norm = max(worst_norm, abs(total - 1.0))
        x = np.linspace(-half + 6.0, half - 6.0, 4001)
        signs = np.sign(hermite_function(n, x))
        # A node landing exactly on a grid point shows up as a zero, not a
        # sign flip, so drop zeros and count changes of the surviving signs.
        signs = signs[signs != 0.0]
        nodes = int(np.sum(signs[1:] != signs[:-1]))
        node_ok = node_ok and nodes == n

    worst_pair = 0.0
    x = np.linspace(-4.0, 4.0, 201)
    for n in range(13):
        stable = eigen_density(n, x, spec)
        naive = eigen_density_naive(n, x, spec)
        # Odd states vanish identically at the origin in both routes, so
        # measure the relative gap only where the density is nonzero.
        mask = stable > 0.0
        ratio_gap = float(np.max(np.abs(naive[mask] / stable[mask] - 1.0)))
        exact_at_nodes = bool(np.all(naive[~mask] == stable[~mask]))
        worst_pair = max(worst_pair, ratio_gap if exact_at_nodes else np.inf)

    ok = worst_norm < 1e-10 and node_ok and worst_pair < 1e-12
    assert verdict(
        6,
        "eigenstate densities",
        ok,
        f"max |norm - 1| = {worst_norm:.3e}, nodes exact = {node_ok}, "
        f"recurrence vs naive rel = {worst_pair:.3e}",
    )


def test_criterion_7_trajectory_histogram():
    start = time.perf_counter()
    spec = OscillatorSpec.from_width(1.0)
    orbit = ClassicalOrbit.from_amplitude(1.0, spec)
    dt = orbit.period / 1000.0
    hist = simulate_histogram(orbit, spec, dt=dt, steps=10**7, bins=50)
    expected = bin_averaged_density(orbit, hist.bin_edges)
    interior = slice(2, -2)
    deviation = float(
        np.max(np.abs(hist.density()[interior] / expected[interior] - 1.0))
    )
    elapsed = time.perf_counter() - start
    ok = deviation < 0.02 and hist.energy_drift < 1e-6 and elapsed < 30.0
    assert verdict(
        7,
        "trajectory histogram",
        ok,
        f"interior rel dev = {deviation:.3e}, drift = {hist.energy_drift:.3e}, "
        f"{elapsed:.1f} s",
    )


def test_criterion_8_sampling():
    n = 10**6
    spec = OscillatorSpec.from_width(1.0)
    thermal = ThermalSpec.from_theta(1.0, spec)
    orbit = ClassicalOrbit.from_amplitude(1.0, spec)

    checks = []
    for batch, expected in (
        (sample_quantum_thermal(n, spec, thermal, seed=SEED), variance(spec, thermal)),
        (
            sample_classical_canonical(n, spec, thermal, seed=SEED),
            variance_classical(spec, thermal),
        ),
        (sample_microcanonical(n, orbit, seed=SEED), orbit.amplitude**2 / 2.0),
    ):
        band = second_moment_band(n, expected, batch.regime)
        checks.append(abs(second_moment(batch) - expected) <= band)

    micro = sample_microcanonical(n, orbit, seed=SEED)
    ks = ks_statistic(micro, lambda x: microcanonical_cdf(x, orbit))
    ks_limit = 1.95 / np.sqrt(n)

    ok = all(checks) and ks < ks_limit
    assert verdict(
        8,
        "fixed-seed sampling",
        ok,
        f"bands hit = {sum(checks)}/3, KS = {ks:.4e} < {ks_limit:.4e}",
    )


def _echo_round_trip(argv: list[str]) -> bool:
    if main(argv) != 0:
        return False
    paths = sorted(Path(".").glob("*.csv")) + sorted(Path(".").glob("*.json"))
    if not paths:
        return False
    originals = {p: p.read_bytes() for p in paths}
    config = parse_config_echo(str(paths[0]))
    for p in paths:
        p.unlink()
    run_config(config)
    return all(p.read_bytes() == blob for p, blob in originals.items())


def test_criterion_9_cli(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    commands = {
        "density": ["density", "--theta", "0.7", "--grid", "101"],
        "variance-table": ["variance-table", "--theta", "0.5,2"],
        "classical-sim": ["classical-sim", "--steps", "100000", "--bins", "20"],
        "sample": ["sample", "--theta", "1", "--count", "5000", "--seed", "42"],
        "oracle-check": ["oracle-check", "--theta", "1", "--alpha", "1", "--grid", "31"],
    }
    trips = {}
    for name, argv in commands.items():
        subdir = tmp_path / name
        subdir.mkdir()
        monkeypatch.chdir(subdir)
        trips[name] = _echo_round_trip(argv)
        monkeypatch.chdir(tmp_path)

    fail_dir = tmp_path / "failures"
    fail_dir.mkdir()
    monkeypatch.chdir(fail_dir)
    exit_validation = main(["density", "--theta", "1", "--oracle", "--tol", "1e-16"])
    exit_config = main(["density", "--theta", "1", "--grid", "1"])
    monkeypatch.chdir(tmp_path)

    sweep_dir = tmp_path / "sweep"
    sweep_dir.mkdir()
    monkeypatch.chdir(sweep_dir)
    code = main(
        [
            "density",
            "--theta",
            "0.1,0.5,1,2,10",
            "--alpha",
            "0.5,1,3",
            "--grid",
            "101",
            "--oracle",
        ]
    )
    files = sorted(Path(".").glob("density_*.csv"))
    deviations = []
    for path in files:
        for line in path.read_text().splitlines():
            if line.startswith("# oracle_max_abs_deviation = "):
                deviations.append(float(line.rpartition(" = ")[2]))
    sweep_ok = (
        code == 0 and len(files) == 15 and len(deviations) == 15
        and max(deviations) < 1e-10
    )

    ok = (
        all(trips.values())
        and exit_validation == 1
        and exit_config == 2
        and sweep_ok
    )
    assert verdict(
        9,
        "command-line interface",
        ok,
        f"round trips = {sum(trips.values())}/5, exits = "
        f"({exit_validation}, {exit_config}), oracle sweep max dev = "
        f"{max(deviations):.3e} over {len(files)} files",
    )
