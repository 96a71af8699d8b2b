"""Command-line interface.

    dmirs metrics   --config PATH [--eve X,Y] [--an-mode expected|instantaneous]
    dmirs heatmap   --config PATH --grid 181x181 --out PATH [--mc-samples N --seed S]
    dmirs sweep-nr  --config PATH --nr 10:200:10 --pt 10,15 --out PATH
    dmirs sweep-dab --config PATH --dab 10:50:1 --pt 10,15 --out PATH

Exit codes: 0 success, 2 configuration or validation error, 3 runtime or
I/O error.  The environment variable DMIRS_SEED overrides the config seed;
an explicit --seed flag wins over both.
"""

import argparse
import os
import sys
from dataclasses import replace

from .geometry import Position
from .scenario import ConfigError, Scenario, parse_config
from .secrecy import AN_MODES, secrecy_metrics
from .sweeps import run_heatmap, run_sweep_dab, run_sweep_nr, write_csv


def _parse_values(spec: str, kind: str):
    """Parse '10:200:10' (inclusive range) or '10,15' (list) into floats."""
    spec = spec.strip()
    try:
        if ":" in spec:
            parts = [float(p) for p in spec.split(":")]
            if len(parts) != 3:
                raise ValueError
            start, stop, step = parts
            if step <= 0 or stop < start:
                raise ValueError
            count = int(round((stop - start) / step))
            values = [start + i * step for i in range(count + 1)]
            return [v for v in values if v <= stop + 1e-9]
        return [float(p) for p in spec.split(",") if p.strip() != ""]
    except ValueError:
        raise ConfigError(
            f"could not parse {kind} values {spec!r}; use start:stop:step or a comma list"
        ) from None


def _parse_grid(spec: str):
    try:
        w, h = spec.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise ConfigError(f"could not parse grid {spec!r}; expected WxH like 181x181") from None


def _parse_point(spec: str) -> Position:
    try:
        x, y = (float(p) for p in spec.split(","))
        return Position(x, y)
    except ValueError:
        raise ConfigError(f"could not parse position {spec!r}; expected X,Y") from None


def _load_scenario(args) -> Scenario:
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            scenario = parse_config(fh.read())
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {args.config}") from None
    env_seed = os.environ.get("DMIRS_SEED")
    if env_seed is not None:
        try:
            scenario = replace(scenario, seed=int(env_seed))
        except ValueError:
            raise ConfigError(f"DMIRS_SEED must be an integer, got {env_seed!r}") from None
    if getattr(args, "seed", None) is not None:
        scenario = replace(scenario, seed=args.seed)
    return scenario


def _write_result(result, path) -> None:
    with open(path, "wb") as fh:
        write_csv(result, fh)


def _cmd_metrics(args) -> int:
    scenario = _load_scenario(args)
    if args.eve is not None:
        scenario = replace(scenario, eve=_parse_point(args.eve))
    an_mode = args.an_mode if args.an_mode is not None else scenario.an_mode
    metrics = secrecy_metrics(scenario, scenario.eve, an_mode)
    for key in ("gamma_b", "gamma_e", "rate_b", "rate_e", "rate_s", "ber_b", "ber_probe"):
        print(f"{key}={format(getattr(metrics, key), '.9g')}")
    return 0


def _cmd_heatmap(args) -> int:
    scenario = _load_scenario(args)
    if args.mc_samples is not None:
        scenario = replace(scenario, mc_samples=args.mc_samples)
    result = run_heatmap(scenario, _parse_grid(args.grid))
    _write_result(result, args.out)
    return 0


def _cmd_sweep_nr(args) -> int:
    scenario = _load_scenario(args)
    raw = _parse_values(args.nr, "nr")
    if any(not float(v).is_integer() for v in raw):
        raise ConfigError(f"nr values must be integers, got {args.nr!r}")
    nr_values = [int(v) for v in raw]
    pt_values = _parse_values(args.pt, "pt")
    result = run_sweep_nr(scenario, nr_values, pt_values)
    _write_result(result, args.out)
    return 0


def _cmd_sweep_dab(args) -> int:
    scenario = _load_scenario(args)
    dab_values = _parse_values(args.dab, "dab")
    pt_values = _parse_values(args.pt, "pt")
    result = run_sweep_dab(scenario, dab_values, pt_values)
    _write_result(result, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmirs",
        description="Link-level simulator for IRS-aided directional-modulation secure transmission",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    metrics = sub.add_parser("metrics", help="print link metrics for one probe position")
    metrics.add_argument("--config", required=True, help="scenario JSON file")
    metrics.add_argument("--eve", help="probe position X,Y (overrides config)")
    metrics.add_argument("--an-mode", choices=AN_MODES, dest="an_mode")
    metrics.set_defaults(func=_cmd_metrics)

    heatmap = sub.add_parser("heatmap", help="BER map over probe angles, written as CSV")
    heatmap.add_argument("--config", required=True)
    heatmap.add_argument("--grid", default="181x181", help="grid size WxH (default 181x181)")
    heatmap.add_argument("--out", required=True, help="output CSV path")
    heatmap.add_argument("--mc-samples", type=int, dest="mc_samples")
    heatmap.add_argument("--seed", type=int)
    heatmap.set_defaults(func=_cmd_heatmap)

    sweep_nr = sub.add_parser("sweep-nr", help="secrecy rate vs IRS element count, CSV")
    sweep_nr.add_argument("--config", required=True)
    sweep_nr.add_argument("--nr", required=True, help="element counts, start:stop:step or list")
    sweep_nr.add_argument("--pt", required=True, help="transmit powers in dBm, comma list")
    sweep_nr.add_argument("--out", required=True)
    sweep_nr.set_defaults(func=_cmd_sweep_nr)

    sweep_dab = sub.add_parser("sweep-dab", help="secrecy rate vs receiver distance, CSV")
    sweep_dab.add_argument("--config", required=True)
    sweep_dab.add_argument("--dab", required=True, help="distances in m, start:stop:step or list")
    sweep_dab.add_argument("--pt", required=True, help="transmit powers in dBm, comma list")
    sweep_dab.add_argument("--out", required=True)
    sweep_dab.set_defaults(func=_cmd_sweep_dab)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # covers ConfigError and GeometryError
        print(f"dmirs: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"dmirs: i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
