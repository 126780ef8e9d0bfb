"""
Main CLI module for orbitclosure
"""
import functools
import json
import os
import re
from dataclasses import dataclass
from typing import Any, Callable, List, Optional

import click

from .config import Config, split_samples
from .degen import (
    build_poset,
    check_chi_bounds,
    enumerate_boundary,
    poset_to_dot,
    poset_to_json,
)
from .errors import OrbitClosureError, ParseError
from .exactfield import ScalarTower, as_rational, scalar_to_string
from .grasslimit import ValuedMatrix, limit_point
from .modrep import format_point, format_vector, minimal_generators
from .orbit import orbit_descriptor, psi_rows
from .problem import ProblemSpec, resolve_problem
from .surface_lab import (
    blow_down,
    blow_up,
    config_from_json,
    config_lines,
    config_to_dot,
    config_to_json,
    hirzebruch,
    identify_surface,
)

FORMATS = click.Choice(["text", "json", "dot"])
NAME_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


@dataclass
class RunSettings:
    max_exponent: int
    samples: List[Any]
    jobs: int
    output_format: str


def handle_errors(func: Callable[..., None]) -> Callable[..., None]:
    """Report library errors as ``Error: <Name>: <message>`` with their exit code."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            func(*args, **kwargs)
        except OrbitClosureError as e:
            click.echo(f"Error: {type(e).__name__}: {e}", err=True)
            click.get_current_context().exit(e.exit_code)

    return wrapper


def enumeration_options(func: Callable[..., None]) -> Callable[..., None]:
    positive = click.IntRange(min=1)
    options = [
        click.option("--max-exponent", type=positive, help="Largest curve exponent E"),
        click.option("--samples", help="Comma separated rational coefficient samples"),
        click.option("--length-cap", type=int, help="Longest path length to build"),
        click.option("--jobs", type=positive, help="Threads for curve limits"),
        click.option("--format", "output_format", type=FORMATS, help="Output format"),
        click.option("--verbose", "-v", is_flag=True, help="Progress on stderr"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _parse_samples(values: List[str]) -> List[Any]:
    if not values:
        raise ParseError("no coefficient samples given")
    return [as_rational(value) for value in values]


def _positive(key: str, value: Any) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ParseError(f"{key} must be an integer, got {value!r}") from None
    if number < 1:
        raise ParseError(f"{key} must be at least 1, got {number}")
    return number


def _settings(
    problem: ProblemSpec,
    max_exponent: Optional[int],
    samples: Optional[str],
    jobs: Optional[int],
    output_format: Optional[str],
) -> RunSettings:
    """CLI flags, then problem options, then config file and environment."""
    config = Config()
    if max_exponent is None:
        max_exponent = problem.option("max_exponent", config.max_exponent)
    if samples is None:
        samples = problem.option("samples")
    values = config.sample_list() if samples is None else split_samples(samples)
    if jobs is None:
        jobs = problem.option("jobs", config.jobs)
    return RunSettings(
        max_exponent=_positive("max_exponent", max_exponent),
        samples=_parse_samples(values),
        jobs=_positive("jobs", jobs),
        output_format=output_format or config.output_format,
    )


def _length_cap(length_cap: Optional[int]) -> Optional[int]:
    if length_cap is not None:
        return length_cap
    config = Config()
    if "length_cap" in config.config or "ORBITCLOSURE_LENGTH_CAP" in os.environ:
        return config.length_cap
    return None


def _emit_json(document: Any) -> None:
    click.echo(json.dumps(document, indent=2, sort_keys=True))


@click.group()
def cli():
    """orbitclosure - orbit closures in Grassmannians of submodules"""
    pass


@cli.command()
@click.argument("problem")
@click.option("--length-cap", type=int, help="Longest path length to build")
@click.option("--format", "output_format", type=FORMATS, default="text")
@handle_errors
def basis(problem, length_cap, output_format):
    """Show the path basis of the algebra, of P and of C"""
    spec = resolve_problem(problem, _length_cap(length_cap))
    module = spec.module
    point = spec.point
    if output_format == "json":
        _emit_json(
            {
                "algebra_dim": spec.algebra.dim,
                "nilpotency": spec.algebra.nilpotency,
                "P": module.labels(),
                "dim_P": module.dim,
                "dim_C": point.dim,
                "C": [format_vector(module, row) for row in minimal_generators(point)],
            }
        )
        return
    click.echo(f"dim Lambda = {spec.algebra.dim}, J^{spec.algebra.nilpotency} = 0")
    click.echo(f"dim P = {module.dim}, d' = {point.dim}")
    click.echo("P: " + ", ".join(module.labels()))
    click.echo(f"C = {format_point(point)}")


@cli.command()
@click.argument("problem")
@click.option("--length-cap", type=int, help="Longest path length to build")
@click.option("--format", "output_format", type=FORMATS, default="text")
@handle_errors
def orbit(problem, length_cap, output_format):
    """Orbit dimension, complement cycles and stabiliser of C"""
    spec = resolve_problem(problem, _length_cap(length_cap))
    descriptor = orbit_descriptor(spec.point)
    omega = descriptor.omega_labels()
    if output_format == "json":
        _emit_json(
            {
                "m": descriptor.m,
                "mu": descriptor.mu,
                "omega": omega,
                "stab_dim": descriptor.stab_basis.dim,
            }
        )
        return
    click.echo(
        f"m = {descriptor.m}, omega = [{', '.join(omega)}], "
        f"stab_dim = {descriptor.stab_basis.dim}"
    )


@cli.command()
@click.argument("problem")
@click.option("--exponents", required=True, help="Comma separated exponents a_i")
@click.option("--coefficients", help="Comma separated coefficients c_i (scalars)")
@click.option("--length-cap", type=int, help="Longest path length to build")
@click.option("--format", "output_format", type=FORMATS, default="text")
@handle_errors
def limit(problem, exponents, coefficients, length_cap, output_format):
    """Limit of C(e + sum c_i s^-a_i omega_i) as s tends to 0"""
    spec = resolve_problem(problem, _length_cap(length_cap))
    descriptor = orbit_descriptor(spec.point)

    try:
        powers = [int(item) for item in exponents.split(",")]
    except ValueError:
        raise ParseError(f"exponents must be integers, got {exponents!r}") from None
    if coefficients is None:
        coeffs = ["1"] * len(powers)
    else:
        coeffs = [item.strip() for item in coefficients.split(",")]
    if len(powers) != descriptor.m or len(coeffs) != descriptor.m:
        raise ParseError(f"expected {descriptor.m} exponents and coefficients")

    names = sorted({name for c in coeffs for name in NAME_PATTERN.findall(c)})
    if "s" in names:
        raise ParseError("'s' is the curve parameter and cannot be a coefficient")
    tower = ScalarTower(names)
    t = [tower(c) * tower.s ** (-a) for c, a in zip(coeffs, powers)]
    rows, family_tower = psi_rows(descriptor, t)
    point = limit_point(
        ValuedMatrix(rows, family_tower, ncols=spec.module.dim), spec.module
    )
    if output_format == "json":
        _emit_json(
            {
                "limit": format_point(point),
                "rows": [
                    [scalar_to_string(x) for x in row] for row in point.space.rows
                ],
                "JP": spec.module.labels(radical=True),
            }
        )
        return
    click.echo(format_point(point))


def _compute_poset(spec, settings, verbose):
    descriptor = orbit_descriptor(spec.point)
    strata = enumerate_boundary(
        descriptor,
        settings.max_exponent,
        settings.samples,
        settings.jobs,
        verbose,
    )
    return build_poset(descriptor, strata)


def _stratum_line(node) -> str:
    line = f"{node.label}: {node.describe()}: {format_point(node.representative)}"
    if node.special_values:
        line += f" [{node.parameter} != {', '.join(node.special_values)}]"
    return line


@cli.command()
@click.argument("problem")
@enumeration_options
@handle_errors
def boundary(problem, max_exponent, samples, length_cap, jobs, output_format, verbose):
    """Boundary strata of the orbit closure of C"""
    spec = resolve_problem(problem, _length_cap(length_cap))
    settings = _settings(spec, max_exponent, samples, jobs, output_format)
    poset = _compute_poset(spec, settings, verbose)
    if settings.output_format == "json":
        _emit_json(poset_to_json(poset)["nodes"][1:])
        return
    for node in poset.nodes[1:]:
        click.echo(_stratum_line(node))


@cli.command()
@click.argument("problem")
@enumeration_options
@handle_errors
def poset(problem, max_exponent, samples, length_cap, jobs, output_format, verbose):
    """The degeneration poset of C"""
    spec = resolve_problem(problem, _length_cap(length_cap))
    settings = _settings(spec, max_exponent, samples, jobs, output_format)
    result = _compute_poset(spec, settings, verbose)
    if settings.output_format == "json":
        _emit_json(poset_to_json(result))
        return
    if settings.output_format == "dot":
        click.echo(poset_to_dot(result), nl=False)
        return
    for node in result.nodes:
        click.echo(_stratum_line(node))
    for i, j in result.edges:
        click.echo(f"{result.nodes[i].label} -> {result.nodes[j].label}")
    click.echo(f"status: {check_chi_bounds(result).status}")


@cli.command()
@click.argument("problem")
@enumeration_options
@handle_errors
def euler(problem, max_exponent, samples, length_cap, jobs, output_format, verbose):
    """Euler characteristic of the orbit closure with the boundary bounds"""
    spec = resolve_problem(problem, _length_cap(length_cap))
    settings = _settings(spec, max_exponent, samples, jobs, output_format)
    report = check_chi_bounds(_compute_poset(spec, settings, verbose))
    if settings.output_format == "json":
        _emit_json(
            {
                "chi": report.chi,
                "boundary_chi": report.boundary_chi,
                "strata": report.strata,
                "t": report.t,
                "within_t_plus_one": report.within_t_plus_one,
                "within_two_t": report.within_two_t,
                "status": report.status,
            }
        )
        return
    click.echo(report.line())
    if verbose:
        click.echo(f"status: {report.status}", err=True)
        for line in identify_surface(report.chi).lines():
            click.echo(line, err=True)


def _apply_step(config, step: str):
    action, _, argument = step.partition(":")
    curves = [name.strip() for name in argument.split(",") if name.strip()]
    if action == "up":
        return blow_up(config, curves)
    if action == "down" and len(curves) == 1:
        return blow_down(config, curves[0])
    raise ParseError(f"a step is 'up:[A[,B]]' or 'down:E', got {step!r}")


@cli.command()
@click.argument("file", required=False, type=click.Path(exists=True))
@click.option("--hirzebruch", "hirzebruch_n", type=int, help="Start from X_n")
@click.option("--step", "steps", multiple=True, help="up:A,B or down:E, in order")
@click.option("--chi", type=int, help="Report candidate surfaces for this chi")
@click.option("--format", "output_format", type=FORMATS, default="text")
@handle_errors
def surface(file, hirzebruch_n, steps, chi, output_format):
    """Curve configurations under blow-ups and blow-downs"""
    if (file is None) == (hirzebruch_n is None):
        click.echo("Error: give a configuration FILE or --hirzebruch N", err=True)
        raise click.Abort()
    if file is not None:
        try:
            with open(file, "r", encoding="utf-8") as f:
                config = config_from_json(json.load(f))
        except json.JSONDecodeError as e:
            raise ParseError(f"{file} is not valid JSON: {e}") from e
    else:
        try:
            config = hirzebruch(hirzebruch_n)
        except ValueError as e:
            raise ParseError(str(e)) from e

    for step in steps:
        config = _apply_step(config, step)

    if output_format == "json":
        _emit_json(config_to_json(config))
    elif output_format == "dot":
        click.echo(config_to_dot(config), nl=False)
    else:
        for line in config_lines(config):
            click.echo(line)
        if chi is not None:
            for line in identify_surface(chi, config).lines():
                click.echo(line)


CONFIG_KEYS = ("format", "jobs", "length_cap", "max_exponent", "samples")


@cli.command("config")
@click.argument("key", type=click.Choice(CONFIG_KEYS))
@click.argument("value")
@handle_errors
def config_command(key, value):
    """Store a default run option in ~/.orbitclosure.json"""
    if key == "samples":
        _parse_samples(split_samples(value))
        stored: Any = value
    elif key == "format":
        if value not in FORMATS.choices:
            raise ParseError(f"format must be one of {', '.join(FORMATS.choices)}")
        stored = value
    else:
        stored = _positive(key, value)
    Config().save(key, stored)
    click.echo(f"✓ Saved {key} = {stored} to ~/.orbitclosure.json")


def main():
    """Main entry point"""
    cli()


if __name__ == "__main__":
    main()
