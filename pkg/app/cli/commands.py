"""
app/cli/commands.py
-------------------
Command-line blueprint for the toolkit.

Purpose:
- dist: Pr[L > l] and Pr[L = l] for l = 0 .. lmax
- moment: Ex[L^k] by the exact, brute-force, asymptotic or Monte Carlo route
- expand: heavy-traffic expansions as text tables or JSON
- compare: exact against asymptotic (and optionally simulated) over a lambda grid
- simulate: raw Monte Carlo summary

Every command is registered at the top level (cli_group=None) and runs in
the app context, so unset options fall back to current_app.config.
"""

import math

import click
from flask import Blueprint, current_app

from app.asymptotic import moment_expansion, s_j_h_expansion, variance_expansion
from app.audit import log_compute_event
from app.error_handlers import handles_toolkit_errors
from app.errors import ParameterError, ToolkitError
from app.exact import (
    TrafficIntensity,
    brute_force_moment,
    moment,
    pmf,
    tail_probability,
)
from app.helpers import fmt6, write_csv, write_json
from app.series import evaluate, format_h_expansion, format_series
from app.simulate import empirical_tail, simulate_many

# Blueprint definition
cli_bp = Blueprint("cli", __name__, cli_group=None)

METHODS = ("exact", "brute", "asymptotic", "simulate")

DIST_COLUMNS = ("l", "tail", "pmf")
MOMENT_COLUMNS = ("method", "lambda", "u", "k", "value", "stderr")
HISTOGRAM_COLUMNS = ("l", "count", "tail", "tail_stderr")


def _setting(value, key):
    """Option value, or the configured default when the option was not given."""
    return current_app.config[key] if value is None else value


def lambda_options(func):
    """--lambda / --u pair; u wins when both are given."""
    func = click.option(
        "--u", "u", type=float, default=None,
        help="1 - lambda, given directly to avoid cancellation near lambda = 1.",
    )(func)
    func = click.option(
        "--lambda", "lam", type=float, default=None,
        help="Traffic intensity lambda (arrival rate / service rate).",
    )(func)
    return func


def output_options(formats, default):
    def decorator(func):
        func = click.option(
            "--output", "output", type=click.File("w"), default="-",
            help="Destination file (default: standard output).",
        )(func)
        func = click.option(
            "--format", "fmt", type=click.Choice(formats), default=default,
            show_default=True,
        )(func)
        return func

    return decorator


def simulation_options(func):
    for option in (
        click.option("--samples", type=int, default=None, help="Number of busy periods."),
        click.option("--seed", type=int, default=None, help="Monte Carlo seed."),
        click.option("--step-cap", "step_cap", type=int, default=None,
                     help="Maximum events per busy period."),
        click.option("--partitions", type=int, default=None,
                     help="Independent random streams."),
    ):
        func = option(func)
    return func


def resolve_intensity(command, lam, u):
    """
    Build the TrafficIntensity from --lambda / --u.

    Warns (stderr and audit log) when u is below NEAR_ONE_U, where the
    asymptotic and Monte Carlo routes become unreliable.
    """
    if lam is None and u is None:
        raise click.UsageError("one of --lambda or --u is required")
    intensity = TrafficIntensity.from_u(u) if u is not None else TrafficIntensity.from_lambda(lam)
    if 0.0 < intensity.u < current_app.config["NEAR_ONE_U"]:
        message = f"1 - lambda = {intensity.u:.3g} is extremely close to 1"
        click.echo(f"warning: {message}", err=True)
        log_compute_event(command, "-", "WARNING", details=message)
    return intensity


def _simulate(intensity, samples, seed, step_cap, partitions):
    return simulate_many(
        intensity,
        _setting(samples, "DEFAULT_SAMPLES"),
        seed=_setting(seed, "DEFAULT_SEED"),
        step_cap=_setting(step_cap, "STEP_CAP"),
        partitions=_setting(partitions, "SIM_PARTITIONS"),
        workers=current_app.config["SIM_WORKERS"],
    )


@cli_bp.cli.command("dist")
@lambda_options
@click.option("--lmax", type=int, default=20, show_default=True)
@output_options(("csv", "json"), "csv")
@handles_toolkit_errors("dist")
def dist_command(lam, u, lmax, fmt, output):
    """Tail and point probabilities of L."""
    intensity = resolve_intensity("dist", lam, u)
    if intensity.u < 0.0:
        raise ParameterError(
            f"lambda={intensity.lam} > 1: the busy period is infinite with positive "
            "probability, so L has no proper distribution"
        )
    if lmax < 0:
        raise ParameterError(f"--lmax must be >= 0, got {lmax}")

    rows = [
        {
            "l": l,
            "tail": tail_probability(intensity, l),
            "pmf": pmf(intensity, l) if l >= 1 else 0.0,
        }
        for l in range(lmax + 1)
    ]
    if fmt == "json":
        write_json({"lambda": intensity.lam, "u": intensity.u, "rows": rows}, output)
    else:
        write_csv(rows, DIST_COLUMNS, output)
    log_compute_event("dist", "exact", "SUCCESS", details=f"lambda={intensity.lam}, lmax={lmax}")


def _moment_row(method, intensity, k, tol, order, sim):
    """One (value, stderr) computation; errors carry the method name."""
    try:
        if method == "exact":
            value, stderr = moment(k, intensity, tol), None
        elif method == "brute":
            value, stderr = brute_force_moment(k, intensity), None
        elif method == "asymptotic":
            value, stderr = evaluate(moment_expansion(k, order), intensity), None
        else:
            summary = _simulate(intensity, *sim)
            value = summary.moment(k)
            stderr = summary.stderr_moment(k) if k <= 2 else None
    except ToolkitError as error:
        error.method = method
        raise
    log_compute_event(
        "moment", method, "SUCCESS",
        details=f"lambda={intensity.lam}, k={k}, value={fmt6(value)}",
    )
    return {
        "method": method,
        "lambda": intensity.lam,
        "u": intensity.u,
        "k": k,
        "value": value,
        "stderr": stderr,
    }


@cli_bp.cli.command("moment")
@lambda_options
@click.option("--k", "k", type=int, default=1, show_default=True)
@click.option("--method", type=click.Choice(METHODS + ("all",)), default="exact",
              show_default=True)
@click.option("--tol", type=float, default=None, help="Relative truncation tolerance.")
@click.option("--order", type=int, default=None, help="Expansion order (asymptotic).")
@simulation_options
@output_options(("csv", "json"), "csv")
@handles_toolkit_errors("moment")
def moment_command(lam, u, k, method, tol, order, samples, seed, step_cap, partitions,
                   fmt, output):
    """Ex[L^k] by one route, or by every route with --method all."""
    intensity = resolve_intensity("moment", lam, u)
    tol = _setting(tol, "DEFAULT_TOL")
    order = _setting(order, "DEFAULT_ORDER")
    sim = (samples, seed, step_cap, partitions)

    methods = METHODS if method == "all" else (method,)
    rows = [_moment_row(m, intensity, k, tol, order, sim) for m in methods]
    if fmt == "json":
        write_json(rows, output)
    else:
        write_csv(rows, MOMENT_COLUMNS, output)


@cli_bp.cli.command("expand")
@click.option("--k", "k", type=int, default=None, help="Expand Ex[L^k].")
@click.option("--variance", is_flag=True, default=False, help="Expand Var[L].")
@click.option("--s_j", "s_j", type=int, default=None, help="h-table of the Lambert sum S_j.")
@click.option("--order", type=int, default=None, help="First omitted power.")
@output_options(("text", "json"), "text")
@handles_toolkit_errors("expand")
def expand_command(k, variance, s_j, order, fmt, output):
    """Heavy-traffic expansion of a moment, the variance, or S_j."""
    chosen = [name for name, given in (("--k", k is not None), ("--variance", variance),
                                       ("--s_j", s_j is not None)) if given]
    if len(chosen) != 1:
        raise click.UsageError("select exactly one of --k, --variance, --s_j")
    order = _setting(order, "DEFAULT_ORDER")

    if s_j is not None:
        table = s_j_h_expansion(s_j, order)
        payload, text = table.to_json(), format_h_expansion(table, title=f"S_{s_j}(h)")
        target = f"S_{s_j}"
    else:
        if variance:
            series, target = variance_expansion(order), "Var[L]"
        else:
            series, target = moment_expansion(k, order), f"Ex[L^{k}]"
        payload, text = series.to_json(), format_series(series, title=target)

    if fmt == "json":
        write_json(payload, output)
    else:
        output.write(text + "\n")
    log_compute_event("expand", "asymptotic", "SUCCESS", details=f"{target}, order={order}")


def _parse_grid(text):
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise click.UsageError("--lambda-grid is empty")
    try:
        return [float(item) for item in items]
    except ValueError as error:
        raise click.UsageError(f"--lambda-grid: {error}") from error


def _compare_row(lam, k, tol, order, sim):
    row = {"lambda": lam}
    errors = []
    for column in ("exact", "asymptotic") + (("simulate",) if sim[0] else ()):
        try:
            intensity = TrafficIntensity.from_lambda(lam).require_stable()
            if column == "exact":
                row[column] = moment(k, intensity, tol)
            elif column == "asymptotic":
                row[column] = evaluate(moment_expansion(k, order), intensity)
            else:
                row[column] = _simulate(intensity, *sim).moment(k)
        except ToolkitError as error:
            row[column] = math.nan
            errors.append(f"{column}: {error}")
    exact, approx = row["exact"], row["asymptotic"]
    row["abs_err"] = abs(approx - exact)
    row["rel_err"] = row["abs_err"] / abs(exact) if exact else math.nan
    row["error"] = "; ".join(errors) or None
    log_compute_event(
        "compare", "exact+asymptotic", "FAILURE" if errors else "SUCCESS",
        details=f"lambda={lam}, k={k}",
    )
    return row


@cli_bp.cli.command("compare")
@click.option("--lambda-grid", "grid", required=True,
              help="Comma-separated lambda values, e.g. 0.9,0.99,0.999.")
@click.option("--k", "k", type=int, default=1, show_default=True)
@click.option("--tol", type=float, default=None)
@click.option("--order", type=int, default=None)
@simulation_options
@output_options(("csv", "json"), "csv")
@handles_toolkit_errors("compare")
def compare_command(grid, k, tol, order, samples, seed, step_cap, partitions, fmt, output):
    """Exact against asymptotic Ex[L^k] over a lambda grid."""
    lams = _parse_grid(grid)
    tol = _setting(tol, "DEFAULT_TOL")
    order = _setting(order, "DEFAULT_ORDER")
    sim = (samples, seed, step_cap, partitions)

    rows = [_compare_row(lam, k, tol, order, sim) for lam in lams]
    columns = ["lambda", "exact", "asymptotic"]
    if samples:
        columns.append("simulate")
    columns += ["abs_err", "rel_err", "error"]
    if fmt == "json":
        write_json([{c: row.get(c) for c in columns} for row in rows], output)
    else:
        write_csv(rows, columns, output)


@cli_bp.cli.command("simulate")
@lambda_options
@simulation_options
@output_options(("json", "csv"), "json")
@handles_toolkit_errors("simulate")
def simulate_command(lam, u, samples, seed, step_cap, partitions, fmt, output):
    """Monte Carlo summary of busy-period maxima."""
    intensity = resolve_intensity("simulate", lam, u)
    try:
        summary = _simulate(intensity, samples, seed, step_cap, partitions)
    except ToolkitError as error:
        error.method = "simulate"
        raise

    if fmt == "csv":
        rows = []
        for l, count in summary.histogram:
            estimate = empirical_tail(summary, l)
            rows.append({"l": l, "count": count, "tail": estimate.value,
                         "tail_stderr": estimate.stderr})
        write_csv(rows, HISTOGRAM_COLUMNS, output)
    else:
        write_json(summary.to_json(), output)
    log_compute_event(
        "simulate", "simulate", "SUCCESS",
        details=f"lambda={intensity.lam}, n={summary.n}, mean={fmt6(summary.mean)}",
    )
