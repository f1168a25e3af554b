"""Command-line front end.

Usage:
    qwell-engine stirling --l1 1 --l3 4 --format json
    qwell-engine ericsson --l3 1 --l1 4 --format csv --out ericsson.csv
    qwell-engine verify --cycle stirling --l1 1 --l3 4
    qwell-engine verify --sweep 10 --seed 0

Exit codes: 0 success, 2 parameter error, 3 verification failure, 4 I/O error.
"""

from __future__ import annotations

import functools
import json
import sys

import click

from .cycles import CYCLE_NAMES
from .errors import ConvergenceError, QwellError
from .report import (
    RunConfig,
    render_csv,
    render_json,
    run_report,
    sweep_geometries,
    verify_cycle,
)

EXIT_OK = 0
EXIT_PARAM = 2
EXIT_VERIFY = 3
EXIT_IO = 4


class CliExit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _fail(code, message):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CliExit as exc:
            _fail(exc.code, str(exc))
        except ConvergenceError as exc:
            _fail(EXIT_VERIFY, str(exc))
        except QwellError as exc:
            _fail(EXIT_PARAM, str(exc))

    return wrapper


def _load_config_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliExit(EXIT_IO, f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliExit(EXIT_PARAM, f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CliExit(EXIT_PARAM, f"config {path} must hold a JSON object")
    return data


def _resolve(cycle_name, config_path, **flags):
    """Merge a JSON config file with command-line flags; flags win."""
    data = _load_config_file(config_path) if config_path else {}
    data = {k.replace("-", "_"): v for k, v in data.items()}
    if "cycle" in data:
        data.setdefault("cycle_name", data.pop("cycle"))
    if "format" in data:
        data.setdefault("fmt", data.pop("format"))
    if "samples" in data:
        data.setdefault("samples_per_leg", data.pop("samples"))
    data.pop("out", None)
    for key, value in flags.items():
        if value is not None:
            data[key] = value
    if cycle_name is not None:
        data["cycle_name"] = cycle_name
    for key in ("l1", "l3"):
        if key not in data:
            raise CliExit(EXIT_PARAM, f"missing --{key}")
    if data.get("units") == "explicit" and not ("hbar" in data and "mass" in data):
        raise CliExit(EXIT_PARAM, "--units explicit requires both --hbar and --mass")
    if data.get("units", "natural") == "natural" and ("hbar" in data or "mass" in data):
        raise CliExit(EXIT_PARAM, "--hbar/--mass need --units explicit")
    try:
        return RunConfig(**data)
    except TypeError as exc:
        raise CliExit(EXIT_PARAM, f"bad configuration: {exc}") from exc


def _emit(text, out):
    data = text.encode("utf-8")
    if out is None or out == "-":
        stream = click.get_binary_stream("stdout")
        stream.write(data)
        stream.flush()
        return
    try:
        with open(out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliExit(EXIT_IO, f"cannot write {out}: {exc}") from exc


def geometry_options(fn):
    options = [
        click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
                     help="JSON file with run settings; flags override it."),
        click.option("--l1", type=float, default=None, help="Width L1."),
        click.option("--l3", type=float, default=None, help="Width L3."),
        click.option("--units", type=click.Choice(["natural", "explicit"]), default=None,
                     help="natural: hbar = m = 1 (default). explicit: give --hbar and --mass."),
        click.option("--hbar", type=float, default=None),
        click.option("--mass", type=float, default=None),
        click.option("--quad-tol", "quad_tol", type=float, default=None,
                     help="Relative tolerance of the quadrature oracle [1e-10]."),
        click.option("--threshold", type=float, default=None,
                     help="Largest accepted relative oracle residual [1e-9]."),
        click.option("--out", type=str, default=None, help="Output path; stdout if omitted."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


@click.group()
def cli():
    """Quantum Stirling and Ericsson engines in an infinite square well."""


def _run(cycle_name, config_path, out, **flags):
    config = _resolve(cycle_name, config_path, **flags)
    report, metrics = run_report(config)
    text = render_json(report) if config.fmt == "json" else render_csv(report)
    _emit(text, out)
    if metrics.oracle_residual > config.threshold:
        raise CliExit(
            EXIT_VERIFY,
            f"oracle residual {metrics.oracle_residual:.3e} exceeds threshold {config.threshold:.3e}",
        )


def _run_command(name):
    @cli.command(name, help=f"Build the {name} cycle and report metrics plus P-L samples.")
    @geometry_options
    @click.option("--samples", "samples_per_leg", type=int, default=None,
                  help="Diagram samples per leg [128].")
    @click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None)
    @_guarded
    def command(config_path, out, **flags):
        _run(name, config_path, out, **flags)

    return command


stirling = _run_command("stirling")
ericsson = _run_command("ericsson")


@cli.command()
@geometry_options
@click.option("--cycle", "cycle_name", type=click.Choice(CYCLE_NAMES), default=None)
@click.option("--sweep", type=int, default=None, help="Check this many random geometries.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for --sweep.")
@_guarded
def verify(config_path, out, cycle_name, sweep, seed, **flags):
    """Recompute every closed form with the numeric oracle and report residuals."""
    if sweep is not None:
        if sweep < 1:
            raise CliExit(EXIT_PARAM, "--sweep needs a positive count")
        if flags["l1"] is not None or flags["l3"] is not None:
            raise CliExit(EXIT_PARAM, "--sweep draws its own widths; drop --l1/--l3")
        base = []
        for name, l1, l3 in sweep_geometries(sweep, seed, cycle_name):
            base.append(_resolve(name, config_path, **{**flags, "l1": l1, "l3": l3}))
    else:
        if cycle_name is None and not config_path:
            raise CliExit(EXIT_PARAM, "verify needs --cycle (or --sweep)")
        base = [_resolve(cycle_name, config_path, **flags)]

    runs = []
    worst: dict[str, float] = {}
    for config in base:
        residuals = verify_cycle(config.cycle(), config.quad_tol)
        runs.append({"cycle": config.cycle_name, "l1": config.l1, "l3": config.l3,
                     "residuals": residuals})
        for key, value in residuals.items():
            worst[key] = max(worst.get(key, 0.0), value)
    threshold = base[0].threshold
    passed = all(v <= threshold for v in worst.values())
    report = {
        "seed": seed if sweep is not None else None,
        "threshold": threshold,
        "passed": passed,
        "max_residuals": worst,
        "runs": runs,
    }
    _emit(json.dumps(report, indent=2, ensure_ascii=False) + "\n", out)
    if not passed:
        bad = ", ".join(k for k, v in worst.items() if v > threshold)
        raise CliExit(EXIT_VERIFY, f"residuals above {threshold:.3e}: {bad}")


def main():  # pragma: no cover
    cli()


if __name__ == "__main__":  # pragma: no cover
    main()
