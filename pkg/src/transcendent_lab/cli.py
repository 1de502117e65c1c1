"""Command-line entry point.

Usage:
    transcendent-lab verify                       # identity suite, exit 0/1
    transcendent-lab verify --override EXP_S_EQUALS_HALF_PI=1e-30
    transcendent-lab --format csv wallis --n 1000000
    transcendent-lab sine --x 1.5707963267948966 --n 100000
    transcendent-lab lerch --z -1 --s 2 --u 1
    transcendent-lab lerch-ds --z -1 --m 0 --u 1
    transcendent-lab pi-product --depth 48
    transcendent-lab hydrogen --l-max 1000 --stride 100
    transcendent-lab accel-bench --method richardson --n 1000

Exit codes: 0 success, 1 a suite check failed, 2 usage or domain error.
"""

from __future__ import annotations

import sys

import click

from .core_numerics import AccelMethod, SeriesResult, TruncationPolicy
from .errors import LabError
from .hydrogen import VariationalRow, variational_ladder
from .lerch import CorollaryArgs, LerchArgs, dphi_ds_corollary, phi
from .products import LadderRow, doubling_indices, euler_sine_ladder, sondow_ladder, wallis_ladder
from .report import AccelRow, REGISTRY, accel_benchmark, emit, run_identity_suite


class _Settings:
    def __init__(self, fmt, out, policy, jobs, timestamp):
        self.fmt = fmt
        self.out = out
        self.policy = policy
        self.jobs = jobs
        self.timestamp = timestamp

    def write(self, payload, row_type=None):
        try:
            emit(payload, self.fmt, self.out, row_type=row_type)
        except OSError as exc:
            raise click.FileError(str(self.out), hint=str(exc)) from exc


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except LabError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, allow_dash=True), default="-", help="Output file ('-' = stdout).")
@click.option("--tol", type=float, default=None, help="Series tail tolerance (default 1e-13).")
@click.option("--max-terms", type=int, default=None, help="Series term cap (default $TRANSCENDENT_LAB_MAX_TERMS or 10000).")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Threads for the identity suite.")
@click.option("--no-timestamp", is_flag=True, help="Omit the report timestamp (byte-identical reruns).")
@click.pass_context
def main(ctx, fmt, out, tol, max_terms, jobs, no_timestamp):
    """Wallis, Euler-sine, Gamma-ratio and Lerch identities, checked numerically."""
    kwargs = {}
    if tol is not None:
        kwargs["tail_tol"] = tol
    if max_terms is not None:
        kwargs["max_terms"] = max_terms
    policy = _guard(TruncationPolicy, **kwargs)
    ctx.obj = _Settings(fmt, out, policy, jobs, not no_timestamp)


def _parse_override(ctx, param, values):
    parsed = {}
    for item in values:
        key, sep, raw = item.partition("=")
        if not sep:
            raise click.BadParameter(f"expected ID=TOL, got {item!r}", ctx, param)
        if key not in REGISTRY:
            raise click.BadParameter(f"unknown check id {key!r} (known: {', '.join(REGISTRY)})", ctx, param)
        try:
            parsed[key] = float(raw)
        except ValueError:
            raise click.BadParameter(f"tolerance for {key} is not a number: {raw!r}", ctx, param) from None
    return parsed


@main.command()
@click.option("--override", "overrides", multiple=True, callback=_parse_override, metavar="ID=TOL",
              help="Replace one check's tolerance; repeatable.")
@click.pass_obj
def verify(settings, overrides):
    """Run the identity suite; exit 1 if any check fails."""
    report = _guard(run_identity_suite, overrides, settings.policy, settings.jobs, settings.timestamp)
    settings.write(report)
    if not report.all_pass:
        failed = ", ".join(c.id for c in report.checks if not c.passed)
        click.echo(f"failed: {failed}", err=True)
        sys.exit(1)


@main.command()
@click.option("--n", "n", type=int, required=True, help="Largest index; rows at 1, 2, 4, ..., n.")
@click.pass_obj
def wallis(settings, n):
    """Wallis partial products against pi/2."""
    rows = _guard(lambda: wallis_ladder(doubling_indices(n)))
    settings.write(rows, LadderRow)


@main.command()
@click.option("--x", "x", type=float, required=True)
@click.option("--n", "n", type=int, required=True, help="Largest index; rows at 1, 2, 4, ..., n.")
@click.pass_obj
def sine(settings, x, n):
    """Euler sine partial products against sin(x)/x."""
    rows = _guard(lambda: euler_sine_ladder(x, doubling_indices(n)))
    settings.write(rows, LadderRow)


@main.command()
@click.option("--z", "z", type=float, required=True)
@click.option("--s", "s", type=float, required=True)
@click.option("--u", "u", type=float, required=True)
@click.pass_obj
def lerch(settings, z, s, u):
    """Phi(z, s, u) with its convergence evidence."""
    result = _guard(lambda: phi(LerchArgs(z, s, u), settings.policy))
    settings.write([result], SeriesResult)


@main.command("lerch-ds")
@click.option("--z", "z", type=float, required=True)
@click.option("--m", "m", type=int, default=0, show_default=True)
@click.option("--u", "u", type=float, required=True)
@click.pass_obj
def lerch_ds(settings, z, m, u):
    """dPhi/ds at (z, -m, u) from the double series (z < 1/2)."""
    result = _guard(lambda: dphi_ds_corollary(CorollaryArgs(z, m, u), settings.policy))
    settings.write([result], SeriesResult)


@main.command("pi-product")
@click.option("--depth", type=int, required=True)
@click.pass_obj
def pi_product(settings, depth):
    """Partial products of exp(s) = pi/2, one row per factor."""
    rows = _guard(sondow_ladder, depth)
    settings.write(rows, LadderRow)


@main.command()
@click.option("--l-max", "l_max", type=int, required=True)
@click.option("--stride", type=int, default=1, show_default=True)
@click.pass_obj
def hydrogen(settings, l_max, stride):
    """Variational ratio <H>_min / E_0 for l = 0, stride, ... <= l_max."""
    rows = _guard(variational_ladder, l_max, stride)
    settings.write(rows, VariationalRow)


@main.command("accel-bench")
@click.option("--method", type=click.Choice(["all"] + [m.value for m in AccelMethod]), default="all",
              show_default=True)
@click.option("--n", "n", type=int, default=1000, show_default=True)
@click.pass_obj
def accel_bench(settings, method, n):
    """Error reached by each acceleration method at budget n."""
    methods = list(AccelMethod) if method == "all" else [AccelMethod(method)]
    rows = [_guard(accel_benchmark, m, n) for m in methods]
    settings.write(rows, AccelRow)


if __name__ == "__main__":  # pragma: no cover
    main()
