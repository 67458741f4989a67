"""Command-line interface.

Exit codes: 0 success, 2 configuration error, 3 no excitable mode at any
sweep point (or in a single solve), 4 singular stationarity system,
5 self-check failure.
"""

from __future__ import annotations

import sys

import click

from .config import parse_config
from .errors import (
    AllModesNonExcitableError,
    ConfigError,
    ParamShellError,
    SingularSystemError,
)
from .runner import (
    plot_script_text,
    render_report,
    run_single,
    run_sweep,
    sweep_csv_text,
)
from .selfcheck import self_check

EXIT_CONFIG = 2
EXIT_NON_EXCITABLE = 3
EXIT_SINGULAR = 4
EXIT_SELF_CHECK = 5


def _load(config_path: str):
    try:
        with open(config_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {config_path}: {exc}") from exc
    return parse_config(text)


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
def main() -> None:
    """Critical pulsating-load amplitudes for stiffened orthotropic
    cylindrical shells on a viscoelastic foundation."""


@main.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(), help="configuration document")
@click.option("--out", "out_path", type=click.Path(),
              help="write the report here instead of stdout")
def solve(config_path: str, out_path: str | None) -> None:
    """Solve one configuration and report the critical amplitude."""
    try:
        run = _load(config_path)
        outcome = run_single(run)
    except ConfigError as exc:
        _fail(EXIT_CONFIG, str(exc))
    except AllModesNonExcitableError as exc:
        _fail(EXIT_NON_EXCITABLE, str(exc))
    except SingularSystemError as exc:
        _fail(EXIT_SINGULAR, str(exc))
    report = render_report(run, outcome)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(report)
    else:
        click.echo(report, nl=False)


@main.command()
@click.option("--config", "config_path", required=True,
              type=click.Path(), help="configuration document with a [sweep] section")
@click.option("--out", "out_path", required=True, type=click.Path(),
              help="CSV output path")
@click.option("--plot-script", "plot_path", type=click.Path(),
              help="also emit a standalone plotting script here")
def sweep(config_path: str, out_path: str, plot_path: str | None) -> None:
    """Sweep one parameter and write a CSV of critical amplitudes."""
    try:
        run = _load(config_path)
        rows = run_sweep(run)
    except ConfigError as exc:
        _fail(EXIT_CONFIG, str(exc))
    except SingularSystemError as exc:
        _fail(EXIT_SINGULAR, str(exc))
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(sweep_csv_text(rows))
    if plot_path:
        with open(plot_path, "w", encoding="utf-8") as fh:
            fh.write(plot_script_text(out_path))
    ok = sum(1 for r in rows if r.status == "ok")
    click.echo(f"wrote {len(rows)} rows ({ok} ok) to {out_path}")
    if ok == 0:
        _fail(EXIT_NON_EXCITABLE, "no sweep point produced a critical amplitude")


@main.command()
@click.option("--full", is_flag=True,
              help="include the expensive quadrature cross-validation")
@click.option("--inject-fault", "inject_fault", type=str, default=None,
              hidden=True)
def check(full: bool, inject_fault: str | None) -> None:
    """Run the built-in numerical self-check."""
    try:
        passed, report = self_check(full=full, inject_fault=inject_fault)
    except (ValueError, ParamShellError) as exc:
        _fail(EXIT_CONFIG, str(exc))
    click.echo(report, nl=False)
    if not passed:
        sys.exit(EXIT_SELF_CHECK)


if __name__ == "__main__":
    main()
