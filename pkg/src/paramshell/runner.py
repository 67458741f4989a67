"""Batch execution: single solves, parameter sweeps, CSV and report output.

Sweeps evaluate points concurrently but always emit rows in input order,
so repeated runs of the same document produce byte-identical CSV files.
A per-point failure is recorded in the row's status column instead of
aborting the remaining points.
"""

from __future__ import annotations

import datetime
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .config import RunConfig, apply_sweep
from .damage import characteristic_time
from .errors import (
    AllModesNonExcitableError,
    ConfigError,
    ParamShellError,
    SingularSystemError,
)
from .solver import AlphaCoefficients, CriticalForceResult, alpha_coefficients, find_critical_force
from .model import ModeIndex

CSV_HEADER = "sweep_param,sweep_value,n_star,m_star,p1b_pa,p1b_over_E1,status"


def _fmt(x: float) -> str:
    """12-significant-digit decimal rendering used in all CSV output."""
    return f"{x:.12g}"


@dataclass(frozen=True)
class SolveOutcome:
    """A single critical-force solution plus its context."""

    result: CriticalForceResult
    t_char: float
    alpha_star: AlphaCoefficients


def run_single(run: RunConfig) -> SolveOutcome:
    """Solve one configuration for its critical pulsation amplitude."""
    shell = run.shell_config()
    t_char = characteristic_time(shell.loading.omega, shell.damage.cycles)
    result = find_critical_force(
        shell,
        n_range=(run.n_min, run.n_max),
        m_values=run.m_values,
        t_char=t_char,
    )
    alpha_star = alpha_coefficients(
        shell, ModeIndex(n=result.n_star, m=result.m_star), t_char
    )
    return SolveOutcome(result=result, t_char=t_char, alpha_star=alpha_star)


def render_report(run: RunConfig, outcome: SolveOutcome) -> str:
    """Human-readable solve report: time window, mode table, minimum."""
    res = outcome.result
    lines = [
        "critical pulsating-load amplitude search",
        f"  characteristic time T = {_fmt(outcome.t_char)} s "
        f"(omega = {_fmt(run.loading.omega)} rad/s, "
        f"cycles = {run.damage.cycles})",
        f"  mode rectangle: n in [{run.n_min}, {run.n_max}], "
        f"m in {{{', '.join(str(m) for m in sorted(set(run.m_values)))}}}",
        "",
        f"  {'n':>3} {'m':>3} {'excitable':>9} {'p1 [Pa]':>18} status",
    ]
    for row in res.rows:
        p1_txt = _fmt(row.p1) if row.p1 is not None else "-"
        lines.append(
            f"  {row.n:>3} {row.m:>3} {str(row.excitable):>9} "
            f"{p1_txt:>18} {row.status}"
        )
    lines += [
        "",
        f"  argmin mode: (n, m) = ({res.n_star}, {res.m_star})",
        f"  alpha11 = {_fmt(outcome.alpha_star.alpha11)}, "
        f"alpha22 = {_fmt(outcome.alpha_star.alpha22)} (argmin mode)",
        f"  p1b = {_fmt(res.p1b)} Pa",
        f"  p1b / E1 = {_fmt(res.p1b / run.material.e1)}",
        "",
    ]
    return "\n".join(lines)


@dataclass(frozen=True)
class SweepRow:
    """One CSV row of a parameter sweep."""

    sweep_param: str
    sweep_value: float
    n_star: int | None
    m_star: int | None
    p1b: float | None
    p1b_over_e1: float | None
    status: str

    def csv_line(self) -> str:
        if self.status == "ok":
            return ",".join(
                (
                    self.sweep_param,
                    _fmt(self.sweep_value),
                    str(self.n_star),
                    str(self.m_star),
                    _fmt(self.p1b),
                    _fmt(self.p1b_over_e1),
                    "ok",
                )
            )
        return ",".join(
            (self.sweep_param, _fmt(self.sweep_value), "", "", "", "", self.status)
        )


def _sweep_point(run: RunConfig, param: str, value: float) -> SweepRow:
    try:
        point = apply_sweep(run, param, value)
        outcome = run_single(point)
    except AllModesNonExcitableError:
        return SweepRow(param, value, None, None, None, None, "all_non_excitable")
    except SingularSystemError:
        return SweepRow(param, value, None, None, None, None, "singular")
    except (ConfigError, ParamShellError) as exc:
        return SweepRow(
            param, value, None, None, None, None,
            f"error: {type(exc).__name__}".replace(",", ";"),
        )
    res = outcome.result
    return SweepRow(
        param, value, res.n_star, res.m_star, res.p1b,
        res.p1b / point.material.e1, "ok",
    )


def run_sweep(run: RunConfig, max_workers: int = 4) -> tuple:
    """Evaluate all sweep points; rows come back in input order."""
    if run.sweep_param is None:
        raise ConfigError("sweep requested but no [sweep] section configured")
    param = run.sweep_param
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        rows = list(
            pool.map(lambda v: _sweep_point(run, param, v), run.sweep_values)
        )
    return tuple(rows)


def sweep_csv_text(rows) -> str:
    """CSV document for a sweep; byte-identical across repeated runs."""
    return "\n".join([CSV_HEADER] + [row.csv_line() for row in rows]) + "\n"


def plot_script_text(csv_path: str) -> str:
    """A standalone matplotlib script that plots p1b against the sweep value."""
    generated = datetime.date.today().isoformat()
    return f'''"""Plot the critical pulsation amplitude against the sweep value.

Reads {csv_path} (written on {generated}) and draws p1b_pa over
sweep_value, skipping rows whose status is not "ok".
"""

import csv

import matplotlib.pyplot as plt

xs, ys = [], []
with open({csv_path!r}, newline="") as fh:
    for row in csv.DictReader(fh):
        if row["status"] != "ok":
            continue
        xs.append(float(row["sweep_value"]))
        ys.append(float(row["p1b_pa"]))

if not xs:
    raise SystemExit("no successful sweep points to plot")

fig, ax = plt.subplots()
ax.plot(xs, ys, marker="o")
ax.set_xlabel(row["sweep_param"])
ax.set_ylabel("critical pulsation amplitude p1b [Pa]")
ax.grid(True, alpha=0.3)
fig.tight_layout()
fig.savefig({csv_path!r}.rsplit(".", 1)[0] + ".png", dpi=150)
print("wrote", {csv_path!r}.rsplit(".", 1)[0] + ".png")
'''
