"""Command-line front end: plot-ready CSV/JSON exports with self-echoing configs.

Subcommands:

* ``density``: thermal, ground, and classical density profiles on a
  shared grid, one file per temperature, optionally with the brute-force
  eigenstate-sum column and its deviation summary.
* ``variance-table``: the variance law and its two limits per
  temperature, with the quantumness ratio and regime label.
* ``classical-sim``: velocity-Verlet trajectory histogram against the
  exact arcsine bin averages, with energy-drift report.
* ``sample``: Monte Carlo draws with closed-form comparisons at
  pre-registered 3-sigma bands.
* ``oracle-check``: the sum-vs-closed-form equivalence sweep.

Every output file starts with a ``# oscfluct-config: {...}`` line (or a
``config`` key in JSON mode) that reproduces the run byte-for-byte when
fed back through :func:`run_config`. Exit status is 0 on success, 1 when
any requested validation fails, 2 on unusable configuration.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .classical import (
    ClassicalOrbit,
    bin_averaged_density,
    microcanonical_cdf,
    simulate_histogram,
)
from .errors import (
    DomainError,
    QuadratureError,
    TruncationCapError,
    ValidationError,
)
from .oracle import equivalence_report, thermal_density_by_sum
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
    classical_density,
    default_grid,
    density_profile,
    ground_density,
    thermal_density,
    variance,
    variance_classical,
    variance_ground,
)
from .units import (
    ANGSTROM_SI,
    MOLECULAR,
    OscillatorSpec,
    ThermalSpec,
    load_presets,
    quantumness_ratio,
    reduction_scales,
    to_reduced,
)

ORACLE_THRESHOLD_DEFAULT = 1e-10
DRIFT_THRESHOLD_DEFAULT = 1e-6
INTERIOR_DEVIATION_LIMIT = 0.02
INTERIOR_EXCLUDED_BINS = 2
NORMALIZATION_RESIDUAL_LIMIT = 1e-6
ORACLE_THETA_SWEEP = (0.1, 0.5, 1.0, 2.0, 10.0)
ORACLE_ALPHA_SWEEP = (0.5, 1.0, 3.0)


@dataclass(frozen=True)
class RunConfig:
    """Complete, serializable description of one CLI run.

    Every field appears in the config echo, defaults included, so the
    echo alone reconstructs the run.
    """

    command: str
    theta: tuple[float, ...] = ()
    alpha: tuple[float, ...] = ()
    mass_amu: float | None = None
    wavenumber_cm1: float | None = None
    temperature_k: tuple[float, ...] = ()
    preset: str | None = None
    grid: int = 1001
    span_sigmas: float = 6.0
    tol: float | None = None
    seed: int = 0
    fmt: str = "csv"
    oracle: bool = False
    out: str | None = None
    regime: str = "quantum"
    count: int = 10**6
    raw: bool = False
    amplitude: float = 1.0
    dt_fraction: float = 1e-3
    steps: int = 10**7
    bins: int = 50


def config_to_json(config: RunConfig) -> str:
    return json.dumps(dataclasses.asdict(config), sort_keys=True)


def config_from_dict(data: dict) -> RunConfig:
    fields = {f.name for f in dataclasses.fields(RunConfig)}
    unknown = set(data) - fields
    if unknown:
        raise ValidationError(f"unknown config keys: {sorted(unknown)}")
    coerced = dict(data)
    for key in ("theta", "alpha", "temperature_k"):
        if key in coerced and coerced[key] is not None:
            coerced[key] = tuple(coerced[key])
    return RunConfig(**coerced)


def parse_config_echo(path: str) -> RunConfig:
    """Recover the RunConfig from a file previously written by this CLI."""
    text = Path(path).read_text()
    marker = "# oscfluct-config: "
    if text.startswith(marker):
        line = text.splitlines()[0]
        return config_from_dict(json.loads(line[len(marker):]))
    try:
        payload = json.loads(text)
    except json.JSONDecodeError:
        raise ValidationError(f"no config echo found in {path}") from None
    if not isinstance(payload, dict) or "config" not in payload:
        raise ValidationError(f"no config echo found in {path}")
    return config_from_dict(payload["config"])


@dataclass(frozen=True)
class _Case:
    """One resolved physics point: reduced specs plus display conversions."""

    label: str
    spec: OscillatorSpec
    thermal: ThermalSpec
    x_unit: str  # "dimensionless" | "angstrom"
    length_scale: float  # output-x per reduced-x
    display_temperature: float


def _resolve_cases(config: RunConfig) -> list[_Case]:
    molecular = config.mass_amu is not None or config.wavenumber_cm1 is not None
    if molecular:
        if config.mass_amu is None or config.wavenumber_cm1 is None:
            raise ValidationError(
                "molecular input needs both --mass-amu and --wavenumber-cm1"
            )
        if config.theta:
            raise ValidationError("--theta conflicts with molecular input; use --temperature-k")
        if config.alpha:
            raise ValidationError("--alpha conflicts with molecular input; the width follows from mass and frequency")
        if not config.temperature_k:
            raise ValidationError("molecular input needs a --temperature-k list")
        mol_spec = OscillatorSpec.from_molecular(config.mass_amu, config.wavenumber_cm1)
        scales = reduction_scales(mol_spec, MOLECULAR)
        cases = []
        for t_kelvin in config.temperature_k:
            mol_thermal = ThermalSpec.from_temperature(t_kelvin, mol_spec, MOLECULAR)
            red_spec, red_thermal = to_reduced(mol_spec, mol_thermal, MOLECULAR)
            cases.append(
                _Case(
                    label=f"T{t_kelvin:g}K",
                    spec=red_spec,
                    thermal=red_thermal,
                    x_unit="angstrom",
                    length_scale=scales.length / ANGSTROM_SI,
                    display_temperature=t_kelvin,
                )
            )
        return cases

    if config.temperature_k:
        raise ValidationError("--temperature-k needs molecular input (or a preset)")
    thetas = config.theta or (1.0,)
    alphas = config.alpha or (1.0,)
    cases = []
    for alpha in alphas:
        spec = OscillatorSpec.from_width(alpha)
        for theta in thetas:
            thermal = ThermalSpec.from_theta(theta, spec)
            label = (
                f"theta{theta:g}" if len(alphas) == 1
                else f"alpha{alpha:g}_theta{theta:g}"
            )
            cases.append(
                _Case(
                    label=label,
                    spec=spec,
                    thermal=thermal,
                    x_unit="dimensionless",
                    length_scale=1.0,
                    display_temperature=thermal.temperature,
                )
            )
    return cases


def _single_alpha(config: RunConfig) -> float:
    if len(config.alpha) > 1:
        raise ValidationError("this command takes a single --alpha value")
    return config.alpha[0] if config.alpha else 1.0


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if value is None:
        return ""
    return str(value)


def _out_path(config: RunConfig, label: str | None, n_cases: int) -> Path:
    ext = ".json" if config.fmt == "json" else ".csv"
    stem = config.command.replace("-", "_")
    if config.out is not None:
        base = Path(config.out)
        if n_cases <= 1 or label is None:
            return base
        suffix = base.suffix or ext
        return base.with_name(f"{base.stem}_{label}{suffix}")
    name = stem if label is None else f"{stem}_{label}"
    return Path(f"{name}{ext}")


def _write_table(
    path: Path,
    config: RunConfig,
    meta: dict,
    columns: list[str],
    rows: list[tuple],
) -> None:
    if config.fmt == "json":
        payload = {
            "config": dataclasses.asdict(config),
            "version": __version__,
            "meta": {k: (None if v is None else v) for k, v in meta.items()},
            "columns": columns,
            "rows": [[None if v is None else v for v in row] for row in rows],
        }
        path.write_text(json.dumps(payload, indent=2) + "\n")
        return
    lines = [f"# oscfluct-config: {config_to_json(config)}"]
    lines.append(f"# oscfluct-version: {__version__}")
    for key, value in meta.items():
        lines.append(f"# {key} = {_fmt(value)}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def cmd_density(config: RunConfig) -> tuple[list[Path], list[str]]:
    """Export density profiles; one file per temperature."""
    if config.grid < 2:
        raise ValidationError(f"--grid must be at least 2 points, got {config.grid}")
    cases = _resolve_cases(config)
    files: list[Path] = []
    failures: list[str] = []
    for case in cases:
        x_red = default_grid(case.spec, case.thermal, config.grid, config.span_sigmas)
        profile = density_profile(
            x_red, thermal_density(x_red, case.spec, case.thermal), "thermal"
        )
        p_thermal = profile.density
        p_ground = ground_density(x_red, case.spec)
        p_classical = classical_density(x_red, case.spec, case.thermal)

        scale = case.length_scale
        columns = ["x", "P_T", "P_ground", "P_classical"]
        data = [x_red * scale, p_thermal / scale, p_ground / scale, p_classical / scale]

        residual = profile.normalization_residual
        meta = {
            "theta": case.thermal.theta,
            "alpha": case.spec.width_parameter,
            "x_unit": case.x_unit,
            "density_unit": "dimensionless" if case.x_unit == "dimensionless" else "1/angstrom",
            "normalization_residual": residual,
            "normalization_limit": NORMALIZATION_RESIDUAL_LIMIT,
        }
        if abs(residual) > NORMALIZATION_RESIDUAL_LIMIT:
            failures.append(
                f"{case.label}: thermal density trapezoid residual {residual:.3e} "
                f"exceeds {NORMALIZATION_RESIDUAL_LIMIT:g}"
            )

        if config.oracle:
            threshold = config.tol if config.tol is not None else ORACLE_THRESHOLD_DEFAULT
            result = thermal_density_by_sum(x_red, case.spec, case.thermal)
            deviation = float(np.max(np.abs(result.value - p_thermal)))
            columns.append("P_oracle_sum")
            data.append(np.asarray(result.value) / scale)
            meta["oracle_levels_used"] = result.n_used + 1
            meta["oracle_tail_bound"] = result.tail_bound
            meta["oracle_max_abs_deviation"] = deviation
            meta["oracle_threshold"] = threshold
            meta["oracle_deviation_units"] = "reduced"
            if not deviation < threshold:
                failures.append(
                    f"{case.label}: oracle deviation {deviation:.3e} not below "
                    f"{threshold:g}"
                )

        rows = list(zip(*[np.asarray(col, dtype=np.float64) for col in data]))
        path = _out_path(config, case.label, len(cases))
        _write_table(path, config, meta, columns, [tuple(map(float, r)) for r in rows])
        files.append(path)
    return files, failures


def cmd_variance_table(config: RunConfig) -> tuple[list[Path], list[str]]:
    """One table row per temperature: variance law, limits, ratio, regime."""
    if not (config.theta or config.temperature_k):
        raise ValidationError("variance-table needs a non-empty --theta or --temperature-k list")
    if len(config.alpha) > 1:
        raise ValidationError("variance-table sweeps temperature at a single --alpha value")
    cases = _resolve_cases(config)
    failures: list[str] = []
    rows = []
    length_sq = cases[0].length_scale ** 2
    for case in cases:
        var = variance(case.spec, case.thermal)
        var0 = variance_ground(case.spec)
        var_cl = variance_classical(case.spec, case.thermal)
        ratio = quantumness_ratio(case.spec, case.thermal)
        regime = "quantum-dominated" if ratio < 1.0 else "thermal-dominated"
        if var < var0 or var < var_cl:
            failures.append(
                f"{case.label}: variance {var!r} fell below a limit "
                f"(ground {var0!r}, classical {var_cl!r})"
            )
        rows.append(
            (
                case.display_temperature,
                case.thermal.theta,
                var * length_sq,
                var0 * length_sq,
                var_cl * length_sq,
                ratio,
                regime,
            )
        )
    meta = {
        "temperature_unit": "kelvin" if cases[0].x_unit == "angstrom" else "reduced",
        "variance_unit": "angstrom^2" if cases[0].x_unit == "angstrom" else "dimensionless",
        "alpha": cases[0].spec.width_parameter,
    }
    columns = ["T", "theta", "x2", "x2_ground", "x2_classical", "ratio", "regime"]
    path = _out_path(config, None, 1)
    _write_table(path, config, meta, columns, rows)
    return [path], failures


def cmd_classical_sim(config: RunConfig) -> tuple[list[Path], list[str]]:
    """Trajectory histogram vs exact arcsine bin averages, reduced units."""
    if (config.mass_amu is not None or config.wavenumber_cm1 is not None
            or config.temperature_k):
        raise ValidationError("classical-sim runs in reduced units; drop molecular flags")
    if config.theta:
        raise ValidationError("classical-sim is a fixed-energy run; --theta does not apply")
    spec = OscillatorSpec.from_width(_single_alpha(config))
    orbit = ClassicalOrbit.from_amplitude(config.amplitude, spec)
    dt = config.dt_fraction * orbit.period
    hist = simulate_histogram(orbit, spec, dt, config.steps, config.bins)

    observed = hist.density()
    expected = bin_averaged_density(orbit, hist.bin_edges)
    rel_dev = observed / expected - 1.0
    interior = slice(INTERIOR_EXCLUDED_BINS, config.bins - INTERIOR_EXCLUDED_BINS)
    max_interior = float(np.max(np.abs(rel_dev[interior])))
    mirror_diff = float(
        np.max(
            np.abs(hist.counts - hist.counts[::-1])
            / np.maximum(hist.counts, 1)
        )
    )

    drift_threshold = config.tol if config.tol is not None else DRIFT_THRESHOLD_DEFAULT
    failures: list[str] = []
    if not hist.energy_drift < drift_threshold:
        failures.append(
            f"energy drift {hist.energy_drift:.3e} not below {drift_threshold:g}"
        )
    if not max_interior < INTERIOR_DEVIATION_LIMIT:
        failures.append(
            f"max interior-bin relative deviation {max_interior:.3e} not below "
            f"{INTERIOR_DEVIATION_LIMIT:g}"
        )

    meta = {
        "amplitude": orbit.amplitude,
        "energy": orbit.energy,
        "period": orbit.period,
        "dt_requested": dt,
        "dt_used": hist.dt,
        "nudged": hist.nudged,
        "steps": hist.total_steps,
        "bins": config.bins,
        "energy_drift": hist.energy_drift,
        "drift_threshold": drift_threshold,
        "max_interior_relative_deviation": max_interior,
        "interior_deviation_limit": INTERIOR_DEVIATION_LIMIT,
        "interior_excluded_bins_per_side": INTERIOR_EXCLUDED_BINS,
        "max_mirror_count_difference": mirror_diff,
        "x_unit": "dimensionless",
    }
    columns = [
        "bin_lo",
        "bin_hi",
        "count",
        "histogram_density",
        "arcsine_bin_average",
        "relative_deviation",
        "interior",
    ]
    rows = []
    inside = np.zeros(config.bins, dtype=bool)
    inside[interior] = True
    for i in range(config.bins):
        rows.append(
            (
                float(hist.bin_edges[i]),
                float(hist.bin_edges[i + 1]),
                int(hist.counts[i]),
                float(observed[i]),
                float(expected[i]),
                float(rel_dev[i]),
                int(inside[i]),
            )
        )
    path = _out_path(config, None, 1)
    _write_table(path, config, meta, columns, rows)
    return [path], failures


def _sample_case_row(
    config: RunConfig, case_label: str, batch: SampleBatch, expected_m2: float,
    orbit: ClassicalOrbit | None,
) -> tuple[dict, tuple, list[str]]:
    n = batch.values.size
    observed_m2 = second_moment(batch)
    band = second_moment_band(n, expected_m2, batch.regime)
    m2_ok = abs(observed_m2 - expected_m2) <= band
    observed_mean = float(np.mean(batch.values))
    mean_band = 4.0 * math.sqrt(expected_m2 / n)
    mean_ok = abs(observed_mean) <= mean_band

    ks = ks_bound = None
    ks_ok: bool | None = None
    in_range: bool | None = None
    if batch.regime is Regime.MICROCANONICAL:
        assert orbit is not None
        ks = ks_statistic(batch, lambda v: microcanonical_cdf(v, orbit))
        ks_bound = 1.95 / math.sqrt(n)
        ks_ok = ks < ks_bound
        in_range = bool(np.all(np.abs(batch.values) <= orbit.amplitude))

    failures = []
    if not m2_ok:
        failures.append(
            f"{case_label}: second moment {observed_m2!r} outside 3-sigma band "
            f"{expected_m2!r} +- {band!r}"
        )
    if not mean_ok:
        failures.append(f"{case_label}: mean {observed_mean!r} outside +-{mean_band!r}")
    if ks_ok is False:
        failures.append(f"{case_label}: KS statistic {ks!r} not below {ks_bound!r}")
    if in_range is False:
        failures.append(f"{case_label}: samples escaped [-A, A]")

    row = (
        case_label,
        batch.regime.value,
        n,
        batch.seed,
        expected_m2,
        observed_m2,
        band,
        int(m2_ok),
        observed_mean,
        mean_band,
        int(mean_ok),
        ks,
        ks_bound,
        None if ks_ok is None else int(ks_ok),
        None if in_range is None else int(in_range),
    )
    meta = {"regime": batch.regime.value, "count": n, "seed": batch.seed}
    return meta, row, failures


def cmd_sample(config: RunConfig) -> tuple[list[Path], list[str]]:
    """Draw batches, compare against closed forms, optionally dump raw values."""
    regime = {
        "quantum": Regime.QUANTUM,
        "classical": Regime.CLASSICAL_CANONICAL,
        "microcanonical": Regime.MICROCANONICAL,
    }.get(config.regime)
    if regime is None:
        raise ValidationError(f"unknown regime {config.regime!r}")
    if config.count < 1:
        raise ValidationError("--count must be positive")

    columns = [
        "label",
        "regime",
        "count",
        "seed",
        "expected_second_moment",
        "observed_second_moment",
        "band_3sigma",
        "second_moment_ok",
        "observed_mean",
        "mean_band",
        "mean_ok",
        "ks_statistic",
        "ks_bound",
        "ks_ok",
        "in_range",
    ]
    rows = []
    failures: list[str] = []
    raw_batches: list[tuple[str, SampleBatch, float]] = []

    if regime is Regime.MICROCANONICAL:
        if (config.mass_amu is not None or config.wavenumber_cm1 is not None
                or config.temperature_k or config.theta):
            raise ValidationError(
                "microcanonical sampling is a fixed-energy run; it takes "
                "--amplitude, not temperatures"
            )
        spec = OscillatorSpec.from_width(_single_alpha(config))
        orbit = ClassicalOrbit.from_amplitude(config.amplitude, spec)
        batch = sample_microcanonical(config.count, orbit, config.seed)
        expected = orbit.amplitude**2 / 2.0
        meta, row, case_failures = _sample_case_row(
            config, f"A{orbit.amplitude:g}", batch, expected, orbit
        )
        rows.append(row)
        failures.extend(case_failures)
        raw_batches.append((f"A{orbit.amplitude:g}", batch, 1.0))
        first_meta = meta
    else:
        cases = _resolve_cases(config)
        first_meta = {}
        for case in cases:
            if regime is Regime.QUANTUM:
                batch = sample_quantum_thermal(
                    config.count, case.spec, case.thermal, config.seed
                )
                expected = variance(case.spec, case.thermal)
            else:
                batch = sample_classical_canonical(
                    config.count, case.spec, case.thermal, config.seed
                )
                expected = variance_classical(case.spec, case.thermal)
            meta, row, case_failures = _sample_case_row(
                config, case.label, batch, expected, None
            )
            if not first_meta:
                first_meta = meta
            rows.append(row)
            failures.extend(case_failures)
            raw_batches.append((case.label, batch, case.length_scale))

    first_meta["moment_units"] = "reduced"
    path = _out_path(config, None, 1)
    _write_table(path, config, first_meta, columns, rows)
    files = [path]

    if config.raw:
        for label, batch, scale in raw_batches:
            raw_path = path.with_name(f"{path.stem}_raw_{label}{path.suffix}")
            _write_table(
                raw_path,
                config,
                {"label": label, "regime": batch.regime.value, "seed": batch.seed},
                ["value"],
                [(float(v * scale),) for v in batch.values],
            )
            files.append(raw_path)
    return files, failures


def cmd_oracle_check(config: RunConfig) -> tuple[list[Path], list[str]]:
    """Sum-vs-closed-form sweep over a (theta, alpha) product grid."""
    thetas = config.theta or ORACLE_THETA_SWEEP
    alphas = config.alpha or ORACLE_ALPHA_SWEEP
    threshold = config.tol if config.tol is not None else ORACLE_THRESHOLD_DEFAULT
    if config.grid < 2:
        raise ValidationError(f"--grid must be at least 2 points, got {config.grid}")

    columns = [
        "theta",
        "alpha",
        "levels_used",
        "tail_bound",
        "max_abs_deviation",
        "threshold",
        "passed",
    ]
    rows = []
    failures: list[str] = []
    worst = 0.0
    for alpha in alphas:
        spec = OscillatorSpec.from_width(alpha)
        for theta in thetas:
            thermal = ThermalSpec.from_theta(theta, spec)
            grid = default_grid(spec, thermal, config.grid, config.span_sigmas)
            report = equivalence_report(spec, thermal, grid, threshold)
            worst = max(worst, report.max_abs_deviation)
            rows.append(
                (
                    theta,
                    alpha,
                    report.n_used + 1,
                    report.tail_bound,
                    report.max_abs_deviation,
                    threshold,
                    int(report.passed),
                )
            )
            if not report.passed:
                failures.append(
                    f"theta={theta:g} alpha={alpha:g}: deviation "
                    f"{report.max_abs_deviation:.3e} not below {threshold:g}"
                )
    meta = {
        "grid_points": config.grid,
        "span_sigmas": config.span_sigmas,
        "threshold": threshold,
        "worst_deviation": worst,
        "deviation_units": "reduced",
    }
    path = _out_path(config, None, 1)
    _write_table(path, config, meta, columns, rows)
    return [path], failures


_COMMANDS = {
    "density": cmd_density,
    "variance-table": cmd_variance_table,
    "classical-sim": cmd_classical_sim,
    "sample": cmd_sample,
    "oracle-check": cmd_oracle_check,
}


def run_config(config: RunConfig) -> tuple[list[Path], list[str]]:
    """Execute a config (fresh or recovered from an echo); returns (files, failures)."""
    if config.command not in _COMMANDS:
        raise ValidationError(f"unknown command {config.command!r}")
    if config.fmt not in ("csv", "json"):
        raise ValidationError(f"unknown format {config.fmt!r}")
    return _COMMANDS[config.command](config)


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscfluct",
        description="Thermal and quantum position statistics of a harmonic oscillator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    physics = argparse.ArgumentParser(add_help=False)
    physics.add_argument("--theta", type=_float_list, default=(), metavar="LIST",
                         help="reduced coldness values, comma separated")
    physics.add_argument("--alpha", type=_float_list, default=(), metavar="LIST",
                         help="reduced width parameter(s), comma separated; default 1")
    physics.add_argument("--mass-amu", type=float, default=None)
    physics.add_argument("--wavenumber-cm1", type=float, default=None)
    physics.add_argument("--temperature-k", type=_float_list, default=(), metavar="LIST")
    physics.add_argument("--preset", default=None, metavar="NAME",
                         help="named preset from the --config INI file")
    physics.add_argument("--config", default=None, metavar="PATH",
                         help="INI file with [preset] sections: mass_amu, wavenumber_cm1, temperature_k")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", default=None, metavar="PATH")
    output.add_argument("--format", choices=("csv", "json"), default="csv")
    output.add_argument("--seed", type=int, default=0)
    output.add_argument("--tol", type=float, default=None,
                        help="validation threshold (oracle deviation or drift), command-specific default")

    p_density = sub.add_parser("density", parents=[physics, output],
                               help="density profiles, one file per temperature")
    p_density.add_argument("--grid", type=int, default=1001)
    p_density.add_argument("--span-sigmas", type=float, default=6.0)
    p_density.add_argument("--oracle", action="store_true",
                           help="add the eigenstate-sum column and deviation check")

    sub.add_parser("variance-table", parents=[physics, output],
                   help="variance law, limits, and regime label per temperature")

    p_sim = sub.add_parser("classical-sim", parents=[physics, output],
                           help="velocity-Verlet histogram vs the arcsine law")
    p_sim.add_argument("--amplitude", type=float, default=1.0)
    p_sim.add_argument("--dt-frac", type=float, default=1e-3,
                       help="time step as a fraction of the period")
    p_sim.add_argument("--steps", type=int, default=10**7)
    p_sim.add_argument("--bins", type=int, default=50)

    p_sample = sub.add_parser("sample", parents=[physics, output],
                              help="Monte Carlo draws with closed-form checks")
    p_sample.add_argument("--regime", choices=("quantum", "classical", "microcanonical"),
                          default="quantum")
    p_sample.add_argument("--count", type=int, default=10**6)
    p_sample.add_argument("--amplitude", type=float, default=1.0,
                          help="orbit amplitude for the microcanonical regime")
    p_sample.add_argument("--raw", action="store_true",
                          help="also write the raw sample values")

    p_oracle = sub.add_parser("oracle-check", parents=[physics, output],
                              help="eigenstate-sum vs closed-form equivalence sweep")
    p_oracle.add_argument("--grid", type=int, default=101)
    p_oracle.add_argument("--span-sigmas", type=float, default=6.0)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    preset_values: dict = {}
    if args.preset is not None:
        if args.config is None:
            raise ValidationError("--preset needs --config pointing at the preset file")
        presets = load_presets(args.config)
        if args.preset not in presets:
            raise ValidationError(
                f"preset {args.preset!r} not in {args.config} "
                f"(available: {', '.join(sorted(presets)) or 'none'})"
            )
        chosen = presets[args.preset]
        preset_values = {
            "mass_amu": chosen.mass_amu,
            "wavenumber_cm1": chosen.wavenumber_cm1,
        }
        if chosen.temperatures_k:
            preset_values["temperature_k"] = chosen.temperatures_k

    def pick(flag_value, key, empty):
        if flag_value not in (None, empty):
            return flag_value
        return preset_values.get(key, flag_value)

    kwargs = {
        "command": args.command,
        "theta": args.theta,
        "alpha": args.alpha,
        "mass_amu": pick(args.mass_amu, "mass_amu", None),
        "wavenumber_cm1": pick(args.wavenumber_cm1, "wavenumber_cm1", None),
        "temperature_k": pick(args.temperature_k, "temperature_k", ()),
        "preset": args.preset,
        "seed": args.seed,
        "fmt": args.format,
        "tol": args.tol,
        "out": args.out,
    }
    for name in ("grid", "span_sigmas", "oracle", "regime", "count", "raw",
                 "amplitude", "steps", "bins"):
        if hasattr(args, name):
            kwargs[name] = getattr(args, name)
    if hasattr(args, "dt_frac"):
        kwargs["dt_fraction"] = args.dt_frac
    return RunConfig(**kwargs)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        files, failures = run_config(config)
    except (ValidationError, DomainError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (TruncationCapError, QuadratureError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    for path in files:
        print(f"wrote {path}")
    if failures:
        for message in failures:
            print(f"FAIL: {message}", file=sys.stderr)
        return 1
    print("all requested validations passed" if files else "nothing to do")
    return 0


if __name__ == "__main__":
    sys.exit(main())
