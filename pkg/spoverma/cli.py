"""
Command line front end. Every verb writes machine-readable output to stdout; logging goes
to stderr and is enabled with ``-v`` (INFO) or ``-vv`` (DEBUG).

Exit status: 0 on success, 1 if a verification suite failed, 2 on malformed arguments and
3 when the library reports an internal error.

Example: ::

    spoverma dim --shape 3,2
    spoverma verma --dynkin 1,4 --format tsv
    spoverma expand --m1 1 --m2 0 --b 0,1,2,1
    spoverma sweep --max-m1 2 --max-m2 2 --suites bijection,weights --jobs 4
"""

from __future__ import annotations

import functools
import json
import logging
from typing import Optional

import click

from spoverma.algebra import Generator, Shape, SpoException, StrEnum, generator_matrix
from spoverma.modulespace import sparse_vector_to_json, verma_vector
from spoverma.tableaux import enumerate_kn, render_ascii, tableau_to_json, weight_multiplicities
from spoverma.verify import (DEFAULT_CLOSURE_BUDGET, DEFAULT_SWEEP_MAX_M1, DEFAULT_SWEEP_MAX_M2, Suite,
                             run_suites, sweep_shapes)
from spoverma.verma import BVector, enumerate_b, tableau_of_b, verma_weight

log = logging.getLogger(__name__)

EXIT_SUITE_FAILURE = 1
EXIT_INTERNAL_ERROR = 3


class OutputFormat(StrEnum):
    JSON = 'json'
    TSV = 'tsv'
    ASCII = 'ascii'


class SpoGroup(click.Group):
    """A command group that turns library errors into exit status 3."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except SpoException as ex:
            click.echo(f"Error: {ex}", err=True)
            ctx.exit(EXIT_INTERNAL_ERROR)


# ---------------------------------------------------------------------------------
# option parsing

def _parse_with(parser):
    def callback(ctx, param, value):
        if value is None:
            return None
        try:
            return parser(value)
        except SpoException as ex:
            raise click.BadParameter(str(ex), ctx=ctx, param=param) from ex
    return callback


def _parse_dynkin(text: str) -> Shape:
    parts = text.split(',')
    if len(parts) != 2:
        raise SpoException(f"Invalid Dynkin labels '{text}', expected 'a1,a2'.")
    try:
        a1, a2 = (int(p) for p in parts)
    except ValueError as ex:
        raise SpoException(f"Invalid Dynkin labels '{text}', expected two integers.") from ex
    return Shape.from_dynkin(a1, a2)


def _parse_suites(text: str) -> list[Suite]:
    names = [s.strip() for s in text.split(',') if s.strip()]
    unknown = [s for s in names if s not in Suite.list()]
    if unknown or not names:
        raise SpoException(f"Unknown suites {unknown}, expected a comma separated subset of {Suite.list()}.")
    return [Suite(s) for s in names]


def shape_options(func):
    """Add ``--shape``, ``--m1/--m2`` and ``--dynkin`` and pass the resolved ``shape``."""

    @click.option('--shape', 'shape_text', callback=_parse_with(Shape.parse), metavar='L1,L2',
                  help='Highest weight as the partition (l1,l2).')
    @click.option('--m1', type=click.IntRange(min=0), help='Number of V factors, used with --m2.')
    @click.option('--m2', type=click.IntRange(min=0), help='Number of wedge-square factors, used with --m1.')
    @click.option('--dynkin', callback=_parse_with(_parse_dynkin), metavar='A1,A2',
                  help='Highest weight a1·ω1 + a2·ω2.')
    @functools.wraps(func)
    def wrapper(*args, shape_text: Optional[Shape], m1: Optional[int], m2: Optional[int],
                dynkin: Optional[Shape], **kwargs):
        given = [s for s in (shape_text, dynkin) if s is not None]
        if m1 is not None or m2 is not None:
            if m1 is None or m2 is None:
                raise click.UsageError("--m1 and --m2 must be given together.")
            given.append(Shape.from_m(m1, m2))
        if not given:
            raise click.UsageError("A shape is required: use --shape L1,L2, --m1 N --m2 N or --dynkin A1,A2.")
        if len(given) > 1:
            raise click.UsageError("Give the shape only once.")
        return func(*args, shape=given[0], **kwargs)

    return wrapper


def format_option(default: OutputFormat):
    return click.option('--format', 'fmt', type=click.Choice(OutputFormat.list()), default=str(default),
                        show_default=True, help='Output format.')


suites_option = click.option('--suites', callback=_parse_with(_parse_suites), metavar='CSV',
                             help=f'Comma separated suites to run; default: all of {",".join(Suite.list())}.')
budget_option = click.option('--budget', type=click.IntRange(min=1), default=DEFAULT_CLOSURE_BUDGET,
                             show_default=True, help='Largest dim W for which the closure suite runs.')
jobs_option = click.option('--jobs', type=click.IntRange(min=1), default=1, show_default=True,
                           help='Worker processes.')


def _json_line(obj) -> str:
    return json.dumps(obj, separators=(',', ':'))


def _emit_reports(reports) -> None:
    for report in reports:
        click.echo(report.to_json_line())
    if not all(r.passed for r in reports):
        raise click.exceptions.Exit(EXIT_SUITE_FAILURE)


# ---------------------------------------------------------------------------------
# verbs

@click.group(cls=SpoGroup)
@click.option('-v', '--verbose', count=True, help='Log to stderr; repeat for debug output.')
@click.version_option(package_name='spoverma')
def cli(verbose: int):
    """Exact computations with the Verma basis of the irreducible spo(4|1) modules L(λ)."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG if verbose > 1 else logging.INFO,
                            format='%(asctime)s %(name)s %(levelname)s: %(message)s')


@cli.command()
@shape_options
def dim(shape: Shape):
    """Print dim L(λ), the number of KN tableaux."""
    click.echo(len(enumerate_kn(shape)))


@cli.command()
@shape_options
@format_option(OutputFormat.ASCII)
def kn(shape: Shape, fmt: str):
    """List the KN tableaux of the shape in increasing order."""
    tableaux = enumerate_kn(shape)
    for i, t in enumerate(tableaux):
        if fmt == OutputFormat.JSON:
            click.echo(_json_line(tableau_to_json(t)))
        elif fmt == OutputFormat.TSV:
            click.echo('\t'.join(','.join(x.text for x in row) for row in (t.row1, t.row2)))
        else:
            if i:
                click.echo()
            click.echo(render_ascii(t))


@cli.command()
@shape_options
@format_option(OutputFormat.TSV)
def verma(shape: Shape, fmt: str):
    """
    List the valid b-vectors with the weight of their Verma vector and their KN tableau.

    TSV columns: b1 b2 b3 b4 weight_c1 weight_c2 tableau-JSON.
    """
    for b in enumerate_b(shape):
        weight = verma_weight(b, shape)
        t = tableau_of_b(b, shape)
        if fmt == OutputFormat.JSON:
            click.echo(_json_line({"b": b.to_json(), "weight": weight.to_json(), "tableau": tableau_to_json(t)}))
        elif fmt == OutputFormat.TSV:
            click.echo('\t'.join([*map(str, b), str(weight.c1), str(weight.c2), _json_line(tableau_to_json(t))]))
        else:
            click.echo(f"b = ({b})  weight = {weight}")
            click.echo(render_ascii(t))
            click.echo()


@cli.command()
@shape_options
@click.option('--b', 'b', required=True, callback=_parse_with(BVector.parse), metavar='B1,B2,B3,B4',
              help='Exponents of f1^b4 f2^b3 f1^b2 f2^b1.')
@format_option(OutputFormat.JSON)
def expand(shape: Shape, b: BVector, fmt: str):
    """Expand the Verma vector f1^b4 f2^b3 f1^b2 f2^b1 v_λ in the tensor basis of W."""
    v = verma_vector(b, shape)
    if fmt == OutputFormat.JSON:
        click.echo(_json_line(sparse_vector_to_json(v)))
        return
    for idx, coeff in v.items():
        if fmt == OutputFormat.TSV:
            click.echo('\t'.join([str(coeff), _json_line(idx.to_json()["singles"]),
                                  _json_line(idx.to_json()["pairs"])]))
        else:
            click.echo(f"{coeff:>6}  {' '.join(f'{x.text:>2}' for x in idx.word())}")


@cli.command()
@shape_options
@suites_option
@budget_option
@jobs_option
def verify(shape: Shape, suites: Optional[list[Suite]], budget: int, jobs: int):
    """Run verification suites on one shape; one JSON report per line."""
    _emit_reports(run_suites([shape], suites, budget=budget, jobs=jobs))


@cli.command()
@click.option('--max-m1', type=click.IntRange(min=0), default=DEFAULT_SWEEP_MAX_M1, show_default=True)
@click.option('--max-m2', type=click.IntRange(min=0), default=DEFAULT_SWEEP_MAX_M2, show_default=True)
@suites_option
@budget_option
@jobs_option
def sweep(max_m1: int, max_m2: int, suites: Optional[list[Suite]], budget: int, jobs: int):
    """Run verification suites on every shape with m1 <= MAX_M1 and m2 <= MAX_M2."""
    _emit_reports(run_suites(sweep_shapes(max_m1, max_m2), suites, budget=budget, jobs=jobs))


@cli.command()
@format_option(OutputFormat.ASCII)
def matrix(fmt: str):
    """Print the 5x5 matrices of the six generators."""
    for i, g in enumerate(Generator):
        m = generator_matrix(g)
        if fmt == OutputFormat.JSON:
            click.echo(_json_line({"generator": str(g), "parity": g.parity, "matrix": m.to_json()}))
        elif fmt == OutputFormat.TSV:
            for row in m.to_json():
                click.echo('\t'.join([str(g), *map(str, row)]))
        else:
            if i:
                click.echo()
            click.echo(f"{g} (parity {g.parity})")
            click.echo(str(m))


@cli.command()
@shape_options
@format_option(OutputFormat.TSV)
def weights(shape: Shape, fmt: str):
    """Print the weights of L(λ) with their multiplicities, highest first."""
    for weight, count in weight_multiplicities(shape).items():
        if fmt == OutputFormat.JSON:
            click.echo(_json_line({"weight": weight.to_json(), "multiplicity": count}))
        elif fmt == OutputFormat.TSV:
            click.echo(f"{weight.c1}\t{weight.c2}\t{count}")
        else:
            click.echo(f"{str(weight):>10}  {count}")


def main():
    cli(prog_name='spoverma')  # pylint: disable=no-value-for-parameter


if __name__ == '__main__':
    main()
