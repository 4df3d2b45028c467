"""Command-line interface: validate, energy, thermal, sweep, oracle.

Exit codes: 0 success, 1 computation or validation failure, 2 configuration
error, 3 sweep finished but omitted points below the accuracy floor.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import os
import sys

from . import __version__
from .casimir import casimir_energy_origin
from .config import RunConfig, load_config
from .errors import AccuracyFloorError, CasimirError, ConfigError
from .geometry import proper_geometry
from .metric import components_at, det_neg, dragged_g00, validation_failures
from .oracle import (
    cutoff_fixture,
    mode_norm_check,
    mode_orthogonality_check,
    mode_pde_residual,
    renormalized_free_energy_fixture,
    thermal_bracket_fixture,
    write_fixtures,
)
from .modes import ModeSpec
from .thermal import SeriesControl, thermal_point, thermodynamics

#: CODATA values printed for information only; outputs stay in natural units.
HBAR_C_J_M = 3.16152677e-26
K_B_J_PER_K = 1.380649e-23

_UNITS_LINE = (
    f"# natural units (hbar = c = k_B = 1); conversions not applied: "
    f"hbar*c = {HBAR_C_J_M:.9e} J*m, k_B = {K_B_J_PER_K:.9e} J/K"
)

CSV_HEADER = "one_over_beta_tilde,F_scaled,U_scaled,S_scaled,Cv_scaled,F_total,U,S,Cv"


def _fmt(value: float) -> str:
    """12 significant digits."""
    return f"{value:.11e}"


def _series_with_env(series: SeriesControl) -> SeriesControl:
    override = os.environ.get("CASIMIR_MAX_TERMS")
    if override is None:
        return series
    try:
        max_terms = int(override)
    except ValueError:
        raise ConfigError(
            f"CASIMIR_MAX_TERMS must be an integer, got {override!r}"
        ) from None
    return dataclasses.replace(series, max_terms=max_terms)


def _apply_overrides(cfg: RunConfig, args) -> RunConfig:
    cavity = cfg.cavity
    if getattr(args, "observer_z", None) is not None:
        cavity = dataclasses.replace(cavity, observer_z=args.observer_z)
    thermal = cfg.thermal
    if getattr(args, "points", None) is not None:
        thermal = dataclasses.replace(thermal, points=args.points)
    if getattr(args, "log", False):
        thermal = dataclasses.replace(thermal, spacing="log")
    output = cfg.output
    if getattr(args, "out", None) is not None:
        output = dataclasses.replace(output, csv=args.out)
    return dataclasses.replace(cfg, cavity=cavity, thermal=thermal, output=output)


def cmd_validate(args) -> int:
    cfg = load_config(args.config)
    model = cfg.model
    failures = validation_failures(model)
    if failures:
        print(f"metric '{model.name}': INVALID")
        for message in failures[:10]:
            print(f"  {message}")
        if len(failures) > 10:
            print(f"  ... and {len(failures) - 10} more grid points")
        return 1
    c0 = components_at(model, 0.0)
    zmin, zmax = model.domain
    grid = [zmin + i * (zmax - zmin) / 128 for i in range(129)]
    dragged = [dragged_g00(components_at(model, z)) for z in grid]
    print(f"metric '{model.name}': valid")
    print(f"  -g at z=0: {_fmt(det_neg(c0))}")
    print(f"  g00_hat at z=0: {_fmt(dragged_g00(c0))}")
    print(f"  g00_hat range over domain: [{_fmt(min(dragged))}, {_fmt(max(dragged))}]")
    return 0


def cmd_energy(args) -> int:
    cfg = _apply_overrides(load_config(args.config), args)
    geom = proper_geometry(cfg.model, cfg.cavity)
    report = casimir_energy_origin(cfg.model, cfg.cavity)
    print(_UNITS_LINE)
    print(f"metric = {cfg.model.name}")
    print(f"L_p = {_fmt(geom.L_p)}")
    print(f"S_p = {_fmt(geom.S_p)}")
    print(f"E_p = {_fmt(report.E_p)}")
    print(f"redshift_factor = {_fmt(report.redshift_factor)}")
    print(f"E_0 = {_fmt(report.E_0)}")
    print(f"E_z(z={cfg.cavity.observer_z:g}) = {_fmt(report.E_z)}")
    return 0


def cmd_thermal(args) -> int:
    cfg = _apply_overrides(load_config(args.config), args)
    if cfg.thermal.temperature is None:
        raise ConfigError(f"{args.config}: [thermal] must set 'temperature'")
    series = _series_with_env(cfg.series)
    geom = proper_geometry(cfg.model, cfg.cavity)
    point = thermal_point(cfg.model, geom, cfg.thermal.temperature,
                          mode=cfg.thermal.mode)
    report = thermodynamics(cfg.model, geom, point, series,
                            observer_z=cfg.cavity.observer_z)
    print(_UNITS_LINE)
    print(f"metric = {cfg.model.name}")
    print(f"T = {_fmt(point.T)}")
    print(f"T_p = {_fmt(point.T_p)}")
    print(f"beta_tilde = {_fmt(point.beta_tilde)}")
    print(f"dF_p = {_fmt(report.dF_p)}")
    print(f"F_total = {_fmt(report.F_total)}")
    print(f"U = {_fmt(report.U)}")
    print(f"S = {_fmt(report.S_entropy)}")
    print(f"C_V = {_fmt(report.C_V)}")
    print(f"blackbody_F = {_fmt(report.blackbody_F)}")
    print(f"F_scaled = {_fmt(report.F_scaled)}")
    print(f"U_scaled = {_fmt(report.U_scaled)}")
    print(f"S_scaled = {_fmt(report.S_scaled)}")
    print(f"Cv_scaled = {_fmt(report.Cv_scaled)}")
    return 0


def _sweep_temperatures(thermal_cfg):
    lo, hi = thermal_cfg.sweep
    n = thermal_cfg.points
    if n == 1 or hi == lo:
        return [lo]
    if thermal_cfg.spacing == "log":
        ratio = (hi / lo) ** (1.0 / (n - 1))
        return [lo * ratio ** i for i in range(n)]
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def cmd_sweep(args) -> int:
    cfg = _apply_overrides(load_config(args.config), args)
    if cfg.thermal.sweep is None:
        if cfg.thermal.temperature is None:
            raise ConfigError(f"{args.config}: [thermal] must set 'sweep' (or a "
                              "single 'temperature')")
        thermal_cfg = dataclasses.replace(
            cfg.thermal, sweep=(cfg.thermal.temperature, cfg.thermal.temperature),
            points=1)
        cfg = dataclasses.replace(cfg, thermal=thermal_cfg)
    if cfg.output.csv is None:
        raise ConfigError(f"{args.config}: sweep needs an output CSV path "
                          "([output] csv = ... or --out)")
    series = _series_with_env(cfg.series)
    geom = proper_geometry(cfg.model, cfg.cavity)

    omitted = 0
    rows = []
    for temperature in _sweep_temperatures(cfg.thermal):
        point = thermal_point(cfg.model, geom, temperature, mode=cfg.thermal.mode)
        try:
            report = thermodynamics(cfg.model, geom, point, series,
                                    observer_z=cfg.cavity.observer_z)
        except AccuracyFloorError as exc:
            omitted += 1
            print(f"warning: omitted T={temperature:g}: {exc}", file=sys.stderr)
            continue
        rows.append((
            1.0 / point.beta_tilde,
            report.F_scaled, report.U_scaled, report.S_scaled, report.Cv_scaled,
            report.F_total, report.U, report.S_entropy, report.C_V,
        ))

    with open(cfg.output.csv, "w", encoding="ascii", newline="\n") as handle:
        handle.write(CSV_HEADER + "\n")
        for row in rows:
            handle.write(",".join(f"{v:.12e}" for v in row) + "\n")
    print(f"wrote {len(rows)} rows to {cfg.output.csv}")
    if omitted:
        print(f"warning: {omitted} point(s) below the accuracy floor were omitted",
              file=sys.stderr)
        return 3
    return 0


def cmd_oracle(args) -> int:
    records = []
    if args.oracle_command == "cutoff":
        record = cutoff_fixture(args.L)
        records.append(record)
        print(f"cutoff extrapolation at L={args.L:g}: {record.value} "
              f"(fit residual {record.bound})")
    elif args.oracle_command == "thermal":
        bracket = thermal_bracket_fixture(args.beta_tilde, args.digits,
                                          args.max_terms)
        renorm = renormalized_free_energy_fixture(args.beta_tilde, args.digits,
                                                  args.max_terms)
        records.extend([bracket, renorm])
        print(f"bracket({args.beta_tilde:g}) = {bracket.value}")
        print(f"dF_p({args.beta_tilde:g}; S_p=L_p=1) = {renorm.value}")
    elif args.oracle_command == "modes":
        cfg = load_config(args.metric)
        c = components_at(cfg.model, 0.0)
        spec = ModeSpec(n=args.n, kx=args.kx, ky=args.ky)
        norm_res = mode_norm_check(c, args.L, spec)
        pde_res = mode_pde_residual(c, args.L, spec)
        ortho = mode_orthogonality_check(c, args.L, args.n, args.n + 1,
                                         kx=args.kx, ky=args.ky)
        for label, res in (("mode_norm_residual", norm_res),
                           ("mode_pde_residual", pde_res),
                           ("mode_orthogonality", ortho)):
            records.append(_mode_record(label, cfg.model.name, args, res))
            print(f"{label} = {res:.3e}")
    else:  # pragma: no cover - argparse enforces choices
        raise ValueError(args.oracle_command)
    if args.out:
        write_fixtures(args.out, records, append=args.append)
        print(f"wrote {len(records)} fixture record(s) to {args.out}")
    return 0


def _mode_record(label, metric_name, args, residual):
    from .oracle import FixtureRecord

    return FixtureRecord(
        name=label,
        inputs=(("metric", metric_name), ("L", repr(args.L)), ("n", str(args.n)),
                ("kx", repr(args.kx)), ("ky", repr(args.ky))),
        value=repr(residual),
        bound=repr(residual),
        params="finite-difference-order=4",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stationary-casimir",
        description="Casimir energy and thermal Casimir thermodynamics for "
                    "parallel plates in stationary spacetimes (natural units).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate a metric config")
    p_validate.add_argument("--config", required=True)
    p_validate.set_defaults(func=cmd_validate)

    p_energy = sub.add_parser("energy", help="zero-temperature energy report")
    p_energy.add_argument("--config", required=True)
    p_energy.add_argument("--observer-z", type=float, default=None,
                          dest="observer_z")
    p_energy.set_defaults(func=cmd_energy)

    p_thermal = sub.add_parser("thermal", help="thermodynamics at one temperature")
    p_thermal.add_argument("--config", required=True)
    p_thermal.add_argument("--observer-z", type=float, default=None,
                           dest="observer_z")
    p_thermal.set_defaults(func=cmd_thermal)

    p_sweep = sub.add_parser("sweep", help="temperature sweep to CSV")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--points", type=int, default=None)
    p_sweep.add_argument("--log", action="store_true")
    p_sweep.add_argument("--observer-z", type=float, default=None,
                         dest="observer_z")
    p_sweep.set_defaults(func=cmd_sweep)

    p_oracle = sub.add_parser("oracle", help="brute-force reference computations")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)

    p_cutoff = oracle_sub.add_parser("cutoff", help="cutoff mode-sum extrapolation")
    p_cutoff.add_argument("--L", type=float, default=1.0)
    p_cutoff.add_argument("--out", default=None)
    p_cutoff.add_argument("--append", action="store_true")
    p_cutoff.set_defaults(func=cmd_oracle)

    p_othermal = oracle_sub.add_parser("thermal", help="high-precision bracket")
    p_othermal.add_argument("--beta-tilde", type=float, required=True,
                            dest="beta_tilde")
    p_othermal.add_argument("--digits", type=int, default=50)
    p_othermal.add_argument("--max-terms", type=int, default=10 ** 6,
                            dest="max_terms")
    p_othermal.add_argument("--out", default=None)
    p_othermal.add_argument("--append", action="store_true")
    p_othermal.set_defaults(func=cmd_oracle)

    p_omodes = oracle_sub.add_parser("modes", help="mode residual checks")
    p_omodes.add_argument("--metric", required=True,
                          help="config file providing the [metric] block")
    p_omodes.add_argument("--L", type=float, default=1.0)
    p_omodes.add_argument("--n", type=int, default=1)
    p_omodes.add_argument("--kx", type=float, default=0.0)
    p_omodes.add_argument("--ky", type=float, default=0.0)
    p_omodes.add_argument("--out", default=None)
    p_omodes.add_argument("--append", action="store_true")
    p_omodes.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CasimirError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
