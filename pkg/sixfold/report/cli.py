"""Command line interface of sixfold

Usage:
    sixfold count 50                      # P+, pi+, P-, pi-, pi for 6m+-1, m = 50
    sixfold terms 50 --side minus --max-q 2
    sixfold verify 5000                   # engine against the sieve oracle
    sixfold paper-check --errata-file ERRATA.md
    sixfold bench 10000 3
    sixfold witness 16
"""

import functools
import logging
import sys
from typing import TYPE_CHECKING

import click
from pydantic import ValidationError

from sixfold.core.configuration import Loglevel, OutputFormat
from sixfold.core.errors import (
    ArithmeticRangeError,
    ContractViolation,
    DomainError,
    OracleCapExceeded,
)
from sixfold.core.sixfold import Sixfold
from sixfold.forms.residue import ResidueSide
from sixfold.forms.witness import witness_summary
from sixfold.report.errata import render_errata_markdown
from sixfold.report.render import (
    emit,
    integer_frame,
    resolve_format,
    to_csv,
    to_json,
)

from sixfold.core.logging import handler  # isort:skip

if TYPE_CHECKING:
    from typing import Any, Callable, Optional

    import pandas as pd
    from pydantic import BaseModel

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False

EXIT_MISMATCH = 1
EXIT_USAGE = 2

FORMATS = [fmt.value for fmt in OutputFormat]
SIDES = {"plus": ResidueSide.PLUS_ONE, "minus": ResidueSide.MINUS_ONE}
COUNT_COLUMNS = [
    "m",
    "nu",
    "k",
    "r",
    "nu0",
    "k0",
    "p_plus",
    "pi_plus",
    "p_minus",
    "pi_minus",
    "pi_total",
]


def _output_options(func: "Callable") -> "Callable":
    func = click.option(
        "-o", "--out", type=click.Path(dir_okay=False), default=None,
        help="Write the rendering to this file instead of stdout",
    )(func)
    func = click.option(
        "-f", "--format", "fmt", type=click.Choice(FORMATS), default=None,
        help="Rendering of the result (defaults to the configured format)",
    )(func)
    return func


def _oracle_cap_option(func: "Callable") -> "Callable":
    return click.option(
        "--oracle-cap", type=click.IntRange(min=7), default=None,
        help="Largest limit the sieve oracle may allocate",
    )(func)


def _handle_errors(func: "Callable") -> "Callable":
    """Map library errors onto click usage errors and exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (DomainError, ContractViolation, ValidationError) as error:
            raise click.UsageError(str(error)) from error
        except (ArithmeticRangeError, OracleCapExceeded) as error:
            click.echo(f"Error: {error}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


def _session(ctx: click.Context, **overrides: "Any") -> Sixfold:
    options = dict(ctx.obj or {})
    env = options.pop("env", None)
    options.update({key: value for key, value in overrides.items() if value is not None})
    return Sixfold(env=env, **options)


def _render(
    model: "BaseModel",
    fmt: "Optional[str]",
    out: "Optional[str]",
    frame: "Optional[pd.DataFrame]" = None,
) -> None:
    fmt = resolve_format(fmt)
    if fmt is OutputFormat.JSON:
        content = to_json(model)
    elif fmt is OutputFormat.CSV:
        content = to_csv(frame if frame is not None else model.to_frame())
    else:
        content = str(model)
    if out is None:
        click.echo(content.rstrip("\n"))
    else:
        emit(content, out)


@click.group()
@click.option(
    "-e", "--env", default=None, help="Env file to load for the sixfold session"
)
@click.option(
    "-l",
    "--loglevel",
    type=click.Choice([level.value for level in Loglevel], case_sensitive=False),
    default=None,
    help="Level of the log messages written to stderr",
)
@click.pass_context
def main(ctx: click.Context, env: "Optional[str]", loglevel: "Optional[str]") -> None:
    """Exact counts of primes 6t+1 and 6t-1 by inclusion-exclusion"""
    ctx.obj = {"env": env}
    if loglevel:
        ctx.obj["loglevel"] = loglevel.upper()


@main.command()
@click.argument("m", type=click.IntRange(min=1))
@_output_options
@click.pass_context
@_handle_errors
def count(ctx: click.Context, m: int, fmt: "Optional[str]", out: "Optional[str]") -> None:
    """Composite and prime counts of 6t+1 and 6t-1 for t <= M"""
    summary = _session(ctx).summary(m)
    frame = integer_frame([summary.model_dump(include=set(COUNT_COLUMNS))], COUNT_COLUMNS)
    _render(summary, fmt, out, frame)


@main.command()
@click.argument("m", type=click.IntRange(min=1))
@click.option(
    "-s", "--side", type=click.Choice(list(SIDES)), default="plus",
    help="Progression to sieve",
)
@click.option(
    "-q", "--max-q", type=click.IntRange(min=1), default=None,
    help="Highest level of products to list",
)
@_output_options
@click.pass_context
@_handle_errors
def terms(
    ctx: click.Context,
    m: int,
    side: str,
    max_q: "Optional[int]",
    fmt: "Optional[str]",
    out: "Optional[str]",
) -> None:
    """Sieve terms of one progression with their class counts"""
    table = _session(ctx).terms(m, SIDES[side], max_q)
    _render(table, fmt, out)


@main.command()
@click.argument("m_max", type=click.IntRange(min=1))
@click.option("--fail-fast", is_flag=True, help="Stop at the first mismatch")
@_oracle_cap_option
@_output_options
@click.pass_context
@_handle_errors
def verify(
    ctx: click.Context,
    m_max: int,
    fail_fast: bool,
    oracle_cap: "Optional[int]",
    fmt: "Optional[str]",
    out: "Optional[str]",
) -> None:
    """Compare the engine with the sieve oracle for every m <= M_MAX"""
    report = _session(ctx, oracle_cap=oracle_cap).verify(m_max, fail_fast)
    _render(report, fmt, out)
    if not report.ok:
        sys.exit(EXIT_MISMATCH)


@main.command("paper-check")
@click.option(
    "--errata-file", type=click.Path(dir_okay=False), default=None,
    help="Write the errata ledger as Markdown to this file",
)
@_output_options
@click.pass_context
@_handle_errors
def paper_check(
    ctx: click.Context,
    errata_file: "Optional[str]",
    fmt: "Optional[str]",
    out: "Optional[str]",
) -> None:
    """Check the printed intermediates of the two worked examples at m = 50"""
    report = _session(ctx).paper_check()
    records = [
        {
            "anchor": anchor.anchor,
            "expected": ";".join(map(str, anchor.expected)),
            "got": ";".join(map(str, anchor.got)),
            "passed": anchor.passed,
        }
        for anchor in report.anchors
    ]
    frame = integer_frame(records, ["anchor", "expected", "got", "passed"])
    _render(report, fmt, out, frame)
    if errata_file is not None:
        emit(render_errata_markdown(report.errata), errata_file)
    if not report.ok:
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.argument("m", type=click.IntRange(min=1))
@click.argument("repetitions", type=click.IntRange(min=1), default=1)
@_oracle_cap_option
@_output_options
@click.pass_context
@_handle_errors
def bench(
    ctx: click.Context,
    m: int,
    repetitions: int,
    oracle_cap: "Optional[int]",
    fmt: "Optional[str]",
    out: "Optional[str]",
) -> None:
    """Time engine and oracle at M"""
    report = _session(ctx, oracle_cap=oracle_cap).bench(m, repetitions)
    _render(report, fmt, out)


@main.command()
@click.argument("m", type=click.IntRange(min=1))
@_output_options
@click.pass_context
@_handle_errors
def witness(ctx: click.Context, m: int, fmt: "Optional[str]", out: "Optional[str]") -> None:
    """Factor witnesses of 6M+1 and 6M-1 and the sets M belongs to"""
    _session(ctx)
    summary = witness_summary(m)
    records = [
        {"side": side, "i": found.i, "j": found.j, "factors": str(found)}
        for side, witnesses in (("plus", summary.plus), ("minus", summary.minus))
        for found in witnesses
    ]
    frame = integer_frame(records, ["side", "i", "j", "factors"])
    _render(summary, fmt, out, frame)


if __name__ == "__main__":
    main()
