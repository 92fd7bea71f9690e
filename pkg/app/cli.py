"""Command line front end: ``brake-index classify|iterate|index|partition|verify``."""

import json
import sys
from pathlib import Path
from typing import Any, Callable, Optional

import typer
from loguru import logger
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table

from app.commands import (
    cmd_classify,
    cmd_index,
    cmd_iterate,
    cmd_partition,
    cmd_verify,
    error_report,
    orbit_from_params,
    parse_k_range,
)
from app.core.config import settings
from app.core.errors import IndexCalculusError
from app.models.ech import EndSign
from app.models.orbit import OrbitClass
from app.models.query_params import EnumBounds, OrbitQueryParams, ResponseFormat, Suite
from app.models.reports import RunReport

EXIT_VIOLATION = 1
EXIT_USAGE = 2

app = typer.Typer(
    name="brake-index",
    help="Exact index calculus for brake orbits.",
    add_completion=False,
    no_args_is_help=True,
)


class CliState(BaseModel):
    format: ResponseFormat = ResponseFormat.TABLE
    output: Optional[Path] = None


@app.callback()
def main(
    ctx: typer.Context,
    report_format: ResponseFormat = typer.Option(ResponseFormat.TABLE, "--format", help="Report format: table or json"),
    output: Optional[Path] = typer.Option(None, "--output", help="Also write the JSON report to this file"),
    log_level: str = typer.Option(settings.LOG_LEVEL, "--log-level", help="Log level of the stderr sink"),
):
    logger.remove()
    logger.add(sys.stderr, level=log_level.upper())
    ctx.obj = CliState(format=report_format, output=output)


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return "" if value is None else str(value)


def _render_table(report: RunReport) -> None:
    console = Console()
    console.print(f"[bold]{report.command}[/bold] {_cell(report.inputs)}", highlight=False)
    results = report.results
    if isinstance(results, list) and results and isinstance(results[0], dict):
        table = Table()
        for column in results[0]:
            table.add_column(column)
        for row in results:
            table.add_row(*(_cell(row.get(column)) for column in results[0]))
    else:
        table = Table("field", "value")
        items = results.items() if isinstance(results, dict) else [("result", results)]
        for key, value in items:
            table.add_row(key, _cell(value))
    console.print(table)
    for text in report.counterexamples:
        console.print(f"[red]counterexample:[/red] {text}", highlight=False)
    console.print(f"{report.timing.seconds:.3f}s", style="dim")


def _emit(ctx: typer.Context, report: BaseModel) -> None:
    state: CliState = ctx.obj
    document = report.model_dump_json(indent=2)
    if state.output is not None:
        state.output.write_text(document + "\n", encoding="utf-8")
    if state.format is ResponseFormat.JSON or not isinstance(report, RunReport):
        typer.echo(document)
    else:
        _render_table(report)


def _run(ctx: typer.Context, command: str, build: Callable[[], RunReport]) -> None:
    try:
        report = build()
    except (IndexCalculusError, ValidationError, ValueError) as e:
        _emit(ctx, error_report(command, e))
        raise typer.Exit(EXIT_USAGE)
    _emit(ctx, report)
    if report.counterexamples:
        raise typer.Exit(EXIT_VIOLATION)


def _orbit(orbit_class: OrbitClass, theta: Optional[str], mu1: Optional[str]):
    return orbit_from_params(OrbitQueryParams(orbit_class=orbit_class, theta=theta, mu1=mu1))


@app.command()
def classify(
    ctx: typer.Context,
    matrix: str = typer.Option(..., "--matrix", help="Four comma-separated entries, row-major, e.g. 3,4,2,3"),
    half: bool = typer.Option(False, "--half", help="The matrix is the half-period matrix"),
):
    """Classify a monodromy (or a half-period matrix) and give its canonical form."""
    _run(ctx, "classify", lambda: cmd_classify(matrix.split(","), half=half))


@app.command()
def iterate(
    ctx: typer.Context,
    orbit_class: OrbitClass = typer.Option(..., "--class", help="Orbit class"),
    theta: Optional[str] = typer.Option(None, "--theta", help="Rotation number of an elliptic orbit"),
    mu1: Optional[str] = typer.Option(None, "--mu1", help="mu1 of a hyperbolic orbit"),
    k: str = typer.Option("1..10", "--k", help="Iterates: 3, 1..4 or 1,3,5"),
):
    """Tabulate mu1, mu2 and mu_CZ over a range of iterates."""
    _run(ctx, "iterate", lambda: cmd_iterate(_orbit(orbit_class, theta, mu1), parse_k_range(k)))


@app.command()
def index(
    ctx: typer.Context,
    config: Path = typer.Argument(..., exists=True, dir_okay=False, help="CurveConfig or trivial-cylinder cover JSON"),
):
    """Real Fredholm index of a curve configuration."""
    _run(ctx, "index", lambda: cmd_index(json.loads(config.read_text(encoding="utf-8"))))


@app.command()
def partition(
    ctx: typer.Context,
    orbit_class: OrbitClass = typer.Option(..., "--class", help="Orbit class"),
    theta: Optional[str] = typer.Option(None, "--theta", help="Rotation number of an elliptic orbit"),
    mu1: Optional[str] = typer.Option(None, "--mu1", help="mu1 of a hyperbolic orbit"),
    n: int = typer.Option(..., "--n", min=1, help="Total multiplicity"),
    end: EndSign = typer.Option(EndSign.NEG, "--end", help="Negative or positive ends"),
    audit: bool = typer.Option(False, "--audit", help="Include the left side for every partition"),
):
    """The partition of n at which the index inequality is sharp."""
    _run(ctx, "partition", lambda: cmd_partition(_orbit(orbit_class, theta, mu1), n, end=end, audit=audit))


@app.command()
def verify(
    ctx: typer.Context,
    suite: Suite = typer.Argument(..., help="Suite to replay"),
    max_mult: Optional[int] = typer.Option(None, "--max-mult", help="Largest total multiplicity of a cover"),
    max_genus: Optional[int] = typer.Option(None, "--max-genus"),
    max_parts: Optional[int] = typer.Option(None, "--max-parts"),
    theta_den: Optional[int] = typer.Option(None, "--theta-den", help="Largest elliptic denominator"),
    cover_theta_den: Optional[int] = typer.Option(None, "--cover-theta-den"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree"),
    max_n: Optional[int] = typer.Option(None, "--max-n"),
    max_d: Optional[int] = typer.Option(None, "--max-d"),
    max_k: Optional[int] = typer.Option(None, "--max-k"),
    samples: Optional[int] = typer.Option(None, "--samples"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    max_levels: Optional[int] = typer.Option(None, "--max-levels"),
    max_punctures: Optional[int] = typer.Option(None, "--max-punctures"),
):
    """Replay a theorem over every instance within the bounds."""
    flags = dict(
        max_mult=max_mult,
        max_genus=max_genus,
        max_parts=max_parts,
        theta_den=theta_den,
        cover_theta_den=cover_theta_den,
        max_degree=max_degree,
        max_n=max_n,
        max_d=max_d,
        max_k=max_k,
        samples=samples,
        seed=seed,
        max_levels=max_levels,
        max_punctures=max_punctures,
    )
    _run(ctx, "verify", lambda: cmd_verify(suite, EnumBounds.from_flags(**flags)))


if __name__ == "__main__":
    app()
