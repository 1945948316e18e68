"""Command-line interface for isobar."""

import sys
import time
from contextlib import contextmanager
from typing import Iterator, List, Optional

import click

from isobar import __version__
from isobar.builders.constructions import build_layers, params_of
from isobar.builders.fixtures import FIXTURES, fixture as build_fixture
from isobar.evaluators.connectivity import quasi_connectivity
from isobar.evaluators.grinberg import check_certificate, decide_non_hamiltonian
from isobar.evaluators.hamilton import (
    SearchStats,
    enumerate_hamiltonian_cycles,
    find_hamiltonian_cycle,
)
from isobar.evaluators.sides import cycle_edges
from isobar.evaluators.three_h import find_3h_factorization, verify_corollary
from isobar.limits import (
    DEFAULT_CUT_CEILING,
    DEFAULT_EXHAUSTIVE_CEILING,
    DEFAULT_HAMILTON_BUDGET,
    DEFAULT_THREEH_BUDGET,
    BudgetExhaustedError,
    CeilingExceededError,
    IsobarError,
    sanitize_for_output,
    validate_input_path,
    validate_output_path,
)
from isobar.loaders.certfile import load_certificate, serialize_certificate
from isobar.loaders.mapfile import MapFormatError, load_map, parse_map, serialize_map
from isobar.models.planar_map import PlanarMap, dual
from isobar.reporters import export_dot, get_reporter, map_census

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


def _error(message: str, code: int) -> None:
    click.echo(f"Error: {sanitize_for_output(message)}", err=True)
    sys.exit(code)


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map isobar errors onto the exit-code contract."""
    try:
        yield
    except (BudgetExhaustedError, CeilingExceededError) as e:
        _error(str(e), EXIT_EXHAUSTED)
    except IsobarError as e:
        _error(str(e), EXIT_USAGE)


def _progress(ctx: click.Context, message: str) -> None:
    if ctx.obj.get("verbose"):
        click.echo(message, err=True)


def map_input(command):
    """Add the MAP_FILE argument and the equivalent --input option."""
    command = click.option(
        "--input",
        "-i",
        "input_file",
        default=None,
        help="Map file (same as MAP_FILE; '-' reads standard input)",
        type=click.Path(),
    )(command)
    return click.argument("map_file", required=False, default=None, type=click.Path())(command)


def _read_map(ctx: click.Context, map_file: Optional[str], input_file: Optional[str]) -> PlanarMap:
    if map_file is not None and input_file is not None:
        raise click.UsageError("MAP_FILE and --input are mutually exclusive")
    source = map_file or input_file or "-"
    started = time.perf_counter()
    if source == "-":
        text = click.get_text_stream("stdin").read()
        if not text.strip():
            raise MapFormatError("no map on standard input")
        planar_map = parse_map(text)
    else:
        planar_map = load_map(source)
    _progress(
        ctx,
        f"read map: V={planar_map.vertex_count} E={len(planar_map.edges)} "
        f"F={len(planar_map.faces)} ({time.perf_counter() - started:.3f}s)",
    )
    return planar_map


@click.group()
@click.version_option(version=__version__, prog_name="isobar")
@click.option("--verbose", "-v", is_flag=True, help="Progress lines on stderr")
@click.option(
    "--threads",
    envvar="ISOBAR_THREADS",
    default=1,
    show_default=True,
    type=click.IntRange(min=1),
    help="Worker processes for parallel searches (env: ISOBAR_THREADS)",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, threads: int) -> None:
    """Isobar - planar maps, face weights and non-Hamiltonicity certificates.

    Commands that read a map take MAP_FILE, --input FILE, or standard input,
    all in map format v1.
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["threads"] = threads


@cli.command()
@click.option("--alpha", required=True, type=int, help="Number of annulus layers (>= 1)")
@click.option("--beta", required=True, type=int, help="Cycle length multiplier, 2 mod 3")
@click.option("--dual", "as_dual", is_flag=True, help="Emit the cubic map instead of the triangulation")
@click.pass_context
def gen(ctx: click.Context, alpha: int, beta: int, as_dual: bool) -> None:
    """Generate the triangulation G' for (alpha, beta), or its dual map G.

    Examples:

        isobar gen --alpha 1 --beta 2

        isobar gen --alpha 1 --beta 2 --dual | isobar check
    """
    with _exit_codes():
        params = params_of(alpha, beta)
        triangulation, layers = build_layers(params)
        for layer in layers:
            _progress(
                ctx,
                f"C_{layer.index}: length {len(layer.cycle)} "
                f"(expected {layer.expected_length}), inside edges "
                f"{'ok' if layer.inside_edges_ok else 'violated'}",
            )
        result = dual(triangulation) if as_dual else triangulation
        click.echo(serialize_map(result), nl=False)


@cli.command()
@click.argument("name", type=click.Choice(sorted(FIXTURES)))
def fixture(name: str) -> None:
    """Emit a named fixture map.

    Examples:

        isobar fixture dodecahedron | isobar hamilton --count
    """
    with _exit_codes():
        click.echo(serialize_map(build_fixture(name)), nl=False)


@cli.command()
@map_input
@click.option("--exhaustive", is_flag=True, help="Skip the case a / case b shortcuts")
@click.option(
    "--ceiling",
    default=DEFAULT_EXHAUSTIVE_CEILING,
    show_default=True,
    type=click.IntRange(min=1),
    help="Largest face count for partition enumeration",
)
@click.option("--output", "-o", default=None, type=click.Path(), help="Write the certificate (format v1) to a .cert file")
@click.pass_context
def check(
    ctx: click.Context,
    map_file: Optional[str],
    input_file: Optional[str],
    exhaustive: bool,
    ceiling: int,
    output: Optional[str],
) -> None:
    """Look for a certificate that the map has no Hamiltonian cycle.

    Exit 0 with the certificate, 1 when there is none.

    Examples:

        isobar check map.txt

        isobar check map.txt --exhaustive --output map.cert
    """
    with _exit_codes():
        output_path = validate_output_path(output) if output is not None else None
        planar_map = _read_map(ctx, map_file, input_file)
        certificate, cycle = decide_non_hamiltonian(
            planar_map, ceiling=ceiling, fast=not exhaustive
        )
        if certificate is None:
            click.echo("no certificate")
            if cycle is not None:
                click.echo(f"hamiltonian border: {cycle.format_line()}")
            sys.exit(EXIT_NEGATIVE)
        click.echo(certificate.summary_line())
        if output_path is not None:
            output_path.write_text(serialize_certificate(certificate), encoding="utf-8")
            _progress(ctx, f"certificate written to {output}")


@cli.command()
@map_input
@click.option("--all", "all_cycles", is_flag=True, help="Print every Hamiltonian cycle")
@click.option("--count", is_flag=True, help="Print the number of Hamiltonian cycles")
@click.option(
    "--budget",
    default=DEFAULT_HAMILTON_BUDGET,
    show_default=True,
    type=click.IntRange(min=1),
    help="Node-expansion budget",
)
@click.pass_context
def hamilton(
    ctx: click.Context,
    map_file: Optional[str],
    input_file: Optional[str],
    all_cycles: bool,
    count: bool,
    budget: int,
) -> None:
    """Find Hamiltonian cycles by exact search.

    Prints one cycle (default), all cycles, or their count. Exit 1 when the
    search proves there is none, 3 when the budget runs out first.
    """
    if all_cycles and count:
        raise click.UsageError("--all and --count are mutually exclusive")
    with _exit_codes():
        planar_map = _read_map(ctx, map_file, input_file)
        if all_cycles or count:
            cycles = enumerate_hamiltonian_cycles(
                planar_map, budget=budget, threads=ctx.obj["threads"]
            )
            _progress(ctx, f"{len(cycles)} cycle(s)")
            if count:
                click.echo(str(len(cycles)))
                return
            if not cycles:
                click.echo("none")
                sys.exit(EXIT_NEGATIVE)
            for cycle in cycles:
                click.echo(cycle.format_line())
            return

        stats = SearchStats()
        cycle = find_hamiltonian_cycle(planar_map, budget=budget, stats=stats)
        _progress(ctx, f"{stats.expansions} expansion(s)")
        if cycle is None:
            click.echo("none")
            sys.exit(EXIT_NEGATIVE)
        click.echo(cycle.format_line())


@cli.command()
@map_input
@click.option(
    "--ceiling",
    default=DEFAULT_CUT_CEILING,
    show_default=True,
    type=click.IntRange(min=1),
    help="Largest cut size tried",
)
@click.pass_context
def qconn(ctx: click.Context, map_file: Optional[str], input_file: Optional[str], ceiling: int) -> None:
    """Quasi-connectivity and every minimal nontrivial cut."""
    with _exit_codes():
        planar_map = _read_map(ctx, map_file, input_file)
        result = quasi_connectivity(planar_map, cut_size_ceiling=ceiling)
        if result.q is None:
            click.echo("q=none")
            sys.exit(EXIT_NEGATIVE)
        click.echo(f"q={result.q}")
        for cut in result.minimal_cuts:
            click.echo(cut.format_line())


@cli.command(name="dual")
@map_input
@click.pass_context
def dual_command(ctx: click.Context, map_file: Optional[str], input_file: Optional[str]) -> None:
    """Emit the dual map."""
    with _exit_codes():
        planar_map = _read_map(ctx, map_file, input_file)
        click.echo(serialize_map(dual(planar_map)), nl=False)


@cli.command()
@map_input
@click.option(
    "--budget",
    default=DEFAULT_THREEH_BUDGET,
    show_default=True,
    type=click.IntRange(min=1),
    help="Node-expansion budget",
)
@click.pass_context
def threeh(ctx: click.Context, map_file: Optional[str], input_file: Optional[str], budget: int) -> None:
    """Find a 3H edge colouring and check the equal-weight face colouring."""
    with _exit_codes():
        planar_map = _read_map(ctx, map_file, input_file)
        factorization = find_3h_factorization(planar_map, budget=budget)
        if factorization is None:
            click.echo("none")
            sys.exit(EXIT_NEGATIVE)
        for (u, v), colour in sorted(factorization.edge_colors.items()):
            click.echo(f"edge {u} {v} colour {colour}")
        for face, colour in sorted(factorization.face_colors.items()):
            click.echo(f"face {face} colour {colour}")
        click.echo("sigma " + " ".join(str(s) for s in factorization.sigma))
        holds = verify_corollary(planar_map, factorization)
        click.echo(f"corollary: {'holds' if holds else 'fails'}")
        if not holds:
            sys.exit(EXIT_NEGATIVE)


@cli.command()
@map_input
@click.option("--certificate", "-c", "certificate_file", required=True, type=click.Path())
@click.pass_context
def verify(
    ctx: click.Context, map_file: Optional[str], input_file: Optional[str], certificate_file: str
) -> None:
    """Re-check a certificate (format v1) against a map."""
    with _exit_codes():
        certificate = load_certificate(certificate_file)
        planar_map = _read_map(ctx, map_file, input_file)
        if check_certificate(planar_map, certificate):
            click.echo("valid")
            return
        click.echo("invalid")
        sys.exit(EXIT_NEGATIVE)


def _read_cycle(path: str) -> List[int]:
    text = validate_input_path(path).read_text(encoding="utf-8")
    tokens = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not tokens:
        raise MapFormatError(f"no cycle in {path}")
    try:
        return [int(t) for t in tokens[0].split()]
    except ValueError:
        raise MapFormatError(f"cycle in {path} must be whitespace-separated vertex ids")


@cli.command()
@map_input
@click.option(
    "--format",
    "-f",
    "export_format",
    type=click.Choice(["dot"], case_sensitive=False),
    default="dot",
    help="Output format (default: dot)",
)
@click.option("--highlight-face", type=int, default=None, help="Draw this face's boundary bold")
@click.option("--highlight-cycle", type=click.Path(), default=None, help="Draw the cycle in this file bold")
@click.pass_context
def export(
    ctx: click.Context,
    map_file: Optional[str],
    input_file: Optional[str],
    export_format: str,
    highlight_face: Optional[int],
    highlight_cycle: Optional[str],
) -> None:
    """Export the map as a Graphviz DOT graph."""
    if highlight_face is not None and highlight_cycle is not None:
        raise click.UsageError("--highlight-face and --highlight-cycle are mutually exclusive")
    with _exit_codes():
        planar_map = _read_map(ctx, map_file, input_file)
        highlight = None
        if highlight_face is not None:
            if not 0 <= highlight_face < len(planar_map.faces):
                raise click.UsageError(
                    f"face {highlight_face} does not exist (map has {len(planar_map.faces)} faces)"
                )
            highlight = planar_map.faces[highlight_face].edges
        elif highlight_cycle is not None:
            highlight = cycle_edges(planar_map, _read_cycle(highlight_cycle))
        click.echo(export_dot(planar_map, highlight), nl=False)


@cli.command()
@map_input
@click.option(
    "--format",
    "-f",
    "report_format",
    type=click.Choice(["plain", "terminal"], case_sensitive=False),
    default="plain",
    help="Output format (default: plain)",
)
@click.option("--colours", is_flag=True, help="Also print a proper four-colouring of the faces")
@click.pass_context
def census(
    ctx: click.Context,
    map_file: Optional[str],
    input_file: Optional[str],
    report_format: str,
    colours: bool,
) -> None:
    """Vertex, edge and face counts, face weights and the f-vector."""
    with _exit_codes():
        planar_map = _read_map(ctx, map_file, input_file)
        get_reporter(report_format.lower()).report(map_census(planar_map, colours=colours))


def main() -> None:
    """Entry point for the CLI."""
    cli(obj={})


if __name__ == "__main__":
    main()
