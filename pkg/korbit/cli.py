# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Command-line interface.

Exit codes: ``0`` when no claim fails, ``1`` when at least one does and
``2`` on usage, catalog or cap errors.
"""

from __future__ import annotations

import functools as ft
import os
import typing as t
from pathlib import Path

import pydantic as pyd

from korbit import click
from korbit._internal import _logging
from korbit._internal._validate import validate_options
from korbit.catalog.builtin import builtin_catalog
from korbit.catalog.enumerate import MAX_DEGREE, enumerate_transitive
from korbit.catalog.spec import (
    GroupSpec,
    find_spec,
    load_catalog,
    print_spec,
)
from korbit.claims.checks import CLAIMS
from korbit.claims.harness import has_failures, resolve_claims, run_claims
from korbit.claims.hunt import hunt_hypothesis
from korbit.claims.report import (
    CLAIM_IDS,
    ClaimReport,
    format_table,
    subgroup_text,
)
from korbit.config import Config, config
from korbit.core.blocks import (
    is_primitive,
    is_primitive_nonabelian,
    minimal_block_systems,
)
from korbit.core.group import PermutationGroup, is_transitive, orbits
from korbit.core.lattice import (
    automorphic_numbers,
    md_stabilizers,
    minimal_faithful_degree,
    suborbits,
)
from korbit.core.norbit import k_projection, n_orbit
from korbit.exceptions import CapExceededError, KorbitError
from korbit.version import version_info

__all__ = ["GroupInfo", "RunConfig", "cli", "describe", "main"]

F = t.TypeVar("F", bound=t.Callable[..., t.Any])


class RunConfig(pyd.BaseModel):
    """Options shared by every subcommand."""

    model_config = pyd.ConfigDict(extra="forbid", frozen=True)

    catalog: tuple[Path, ...] = ()
    output: t.Literal["text", "json"] = "text"
    out: Path | None = None
    jobs: pyd.PositiveInt = 1
    cap_elements: pyd.PositiveInt | None = None
    cap_lattice: pyd.PositiveInt | None = None
    cap_nodes: pyd.PositiveInt | None = None
    verbose: pyd.NonNegativeInt = 0

    @property
    def as_json(self) -> bool:
        return self.output == "json"

    def engine_config(self) -> Config:
        return config(
            element_cap=self.cap_elements,
            lattice_cap=self.cap_lattice,
            node_budget=self.cap_nodes,
        )

    def specs(self) -> list[GroupSpec]:
        """Specs of ``--catalog`` files (orders verified), or the builtin
        catalog when none are given.
        """
        if not self.catalog:
            return builtin_catalog()
        cfg = self.engine_config()
        return [s.verified(config=cfg) for s in load_catalog(self.catalog)]

    def emit(self, text: str) -> None:
        if self.out is None:
            click.echo(text)
        else:
            self.out.write_text(text + "\n" if text else "", encoding="utf-8")


class _EngineError(click.ClickException):
    exit_code = 2


def _print_version(
    ctx: click.Context, _param: click.Parameter, value: bool
) -> None:
    if not value or ctx.resilient_parsing:
        return
    click.echo(version_info())
    ctx.exit()


def run_options(func: F) -> F:
    """Attach the shared options and pass a validated :py:class:`RunConfig`
    as ``run``.
    """

    @click.option(
        "--catalog",
        multiple=True,
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        envvar="KORBIT_CATALOG",
        help="Catalog file; repeatable. Defaults to the builtin catalog.",
    )
    @click.option("--json", "as_json", is_flag=True, help="JSON output.")
    @click.option(
        "--out",
        type=click.Path(dir_okay=False, path_type=Path),
        help="Write output to a file instead of stdout.",
    )
    @click.option(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        show_default="available cores",
        help="Worker processes; 1 runs serially.",
    )
    @click.option("--cap-elements", type=int, help="Element cap.")
    @click.option("--cap-lattice", type=int, help="Lattice order cap.")
    @click.option("--cap-nodes", type=int, help="Backtrack node budget.")
    @click.option(
        "-v", "--verbose", count=True, help="Log progress to stderr."
    )
    @ft.wraps(func)
    def wrapper(
        *args: t.Any,
        catalog: tuple[Path, ...],
        as_json: bool,
        out: Path | None,
        jobs: int,
        cap_elements: int | None,
        cap_lattice: int | None,
        cap_nodes: int | None,
        verbose: int,
        **kwargs: t.Any,
    ) -> t.Any:
        ctx = click.get_current_context()
        run = validate_options(
            RunConfig,
            command=ctx.command_path,
            catalog=catalog,
            output="json" if as_json else "text",
            out=out,
            jobs=jobs,
            cap_elements=cap_elements,
            cap_lattice=cap_lattice,
            cap_nodes=cap_nodes,
            verbose=verbose,
        )
        _logging.configure(run.verbose)
        try:
            return func(*args, run=run, **kwargs)
        except KorbitError as e:
            raise _EngineError(str(e)) from None

    return t.cast(F, wrapper)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--version",
    is_flag=True,
    expose_value=False,
    is_eager=True,
    callback=_print_version,
    help="Show version and environment information.",
)
def cli() -> None:
    """Permutation groups, their n-orbits and checks of claims about
    primitive groups of odd order.
    """


class GroupInfo(pyd.BaseModel):
    """Summary printed by ``korbit info``.

    Lattice-based fields are ``None`` when the lattice cap is exceeded.
    """

    id: str
    degree: int
    order: int
    orbits: list[list[int]]
    transitive: bool
    primitive: bool
    primitive_non_abelian: bool
    block_systems: list[str] | None = None
    suborbits: list[int] | None = None
    md_stabilizers: list[str] | None = None
    minimal_faithful_degree: int | None = None
    faithful_collection: str | None = None
    automorphic_numbers: list[int] | None = None
    automorphic_mode: str | None = None
    notes: list[str] = pyd.Field(default_factory=list)


def describe(group: PermutationGroup) -> GroupInfo:
    """Collect :py:class:`GroupInfo` for a group, skipping capped parts."""
    transitive = is_transitive(group)
    details = GroupInfo(
        id=group.name or "?",
        degree=group.degree,
        order=group.order,
        orbits=[sorted(o) for o in orbits(group)],
        transitive=transitive,
        primitive=is_primitive(group),
        primitive_non_abelian=is_primitive_nonabelian(group),
    )
    if transitive:
        systems = minimal_block_systems(group)
        details.block_systems = [str(s) for s in systems]
        details.suborbits = sorted(len(o) for o in suborbits(group, 0))
    try:
        details.md_stabilizers = [
            f"{subgroup_text(s)} order {s.order}"
            for s in md_stabilizers(group)
        ]
        faithful = minimal_faithful_degree(group)
        details.minimal_faithful_degree = faithful.degree
        details.faithful_collection = " + ".join(
            subgroup_text(s) for s in faithful.subgroups
        )
    except CapExceededError as e:
        details.notes.append(str(e))
    numbers = automorphic_numbers(group)
    details.automorphic_numbers = sorted(numbers.values)
    details.automorphic_mode = numbers.mode
    return details


def _render(value: t.Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return " | ".join(" ".join(map(str, v)) for v in value)
        return "; ".join(map(str, value)) if value else "none"
    return str(value)


@cli.command()
@click.argument("group_id")
@run_options
def info(group_id: str, *, run: RunConfig) -> None:
    """Degree, order, orbits, primitivity, block systems, suborbits,
    md-stabilizers and minimal faithful degree of a catalog group.
    """
    spec = find_spec(run.specs(), group_id)
    details = describe(spec.build(config=run.engine_config()))
    if run.as_json:
        run.emit(details.model_dump_json())
        return
    run.emit(
        "\n".join(
            f"{name.replace('_', ' ')}: {_render(value)}"
            for name, value in details.model_dump().items()
        )
    )


def _parse_columns(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        msg = f"expected comma-separated columns, got {text!r}"
        raise click.BadParameter(msg, param_hint="--project") from None


@cli.command()
@click.argument("group_id")
@click.option(
    "--project",
    metavar="I,J,...",
    help="Project onto these columns instead of exporting the matrix.",
)
@run_options
def norbit(group_id: str, project: str | None, *, run: RunConfig) -> None:
    """Export the n-orbit matrix of a group, or its projection onto some
    columns.
    """
    spec = find_spec(run.specs(), group_id)
    matrix = n_orbit(spec.build(config=run.engine_config()))
    if project is None:
        run.emit(matrix.to_json(spec.id) if run.as_json else matrix.to_text())
        return
    orbit = k_projection(matrix, _parse_columns(project))
    run.emit(orbit.to_json(spec.id) if run.as_json else orbit.to_text())


def _emit_reports(run: RunConfig, reports: list[ClaimReport]) -> None:
    if run.as_json:
        run.emit("\n".join(r.model_dump_json() for r in reports))
    else:
        run.emit(format_table(reports, timings=True))
    if has_failures(reports):
        click.get_current_context().exit(1)


@cli.command()
@click.argument("selector", required=False, metavar="CLAIM|all")
@click.option("--list", "list_claims", is_flag=True, help="List claims.")
@click.option(
    "--degree-max",
    type=int,
    help="Largest degree searched by H1-hunt (default: catalog maximum).",
)
@run_options
def check(
    selector: str | None,
    list_claims: bool,
    degree_max: int | None,
    *,
    run: RunConfig,
) -> None:
    """Check one claim, or all of them, on every catalog group."""
    if list_claims:
        run.emit(
            "\n".join(
                f"{claim_id}  {CLAIMS[claim_id].description}"
                for claim_id in CLAIM_IDS
            )
        )
        return
    if selector is None:
        msg = "missing CLAIM|all (or pass --list)"
        raise click.UsageError(msg)
    reports = run_claims(
        resolve_claims(selector),
        run.specs(),
        config=run.engine_config(),
        jobs=run.jobs,
        degree_max=degree_max,
    )
    _emit_reports(run, reports)


def hunt_population(run: RunConfig, degree_max: int) -> list[GroupSpec]:
    """Groups searched by ``korbit hunt``.

    ``--catalog`` files when given, otherwise the enumerated transitive
    groups up to degree 6 followed by builtin groups of higher degree.
    """
    if run.catalog:
        return run.specs()
    cfg = run.engine_config()
    specs = [
        spec
        for degree in range(1, min(degree_max, MAX_DEGREE) + 1)
        for spec in enumerate_transitive(degree, config=cfg)
    ]
    specs += [
        spec
        for spec in builtin_catalog()
        if MAX_DEGREE < spec.degree <= degree_max
    ]
    return specs


@cli.command()
@click.option(
    "--degree-max",
    type=click.IntRange(min=1),
    default=MAX_DEGREE,
    show_default=True,
    help="Largest degree searched.",
)
@run_options
def hunt(degree_max: int, *, run: RunConfig) -> None:
    """Bucket primitive md-groups by degree and order and test every
    bucket for n-orbit isomorphism.
    """
    reports = hunt_hypothesis(
        hunt_population(run, degree_max),
        degree_max,
        config=run.engine_config(),
        jobs=run.jobs,
    )
    _emit_reports(run, reports)


@cli.group()
def catalog() -> None:
    """Inspect and generate group catalogs."""


@catalog.command("list")
@run_options
def catalog_list(*, run: RunConfig) -> None:
    """List catalog groups with degree, order and tags."""
    specs = run.specs()
    if run.as_json:
        run.emit("\n".join(s.model_dump_json() for s in specs))
        return
    rows = [("id", "deg", "order", "tags")]
    rows += [
        (s.id, str(s.degree), str(s.order or "?"), " ".join(sorted(s.tags)))
        for s in specs
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    run.emit(
        "\n".join(
            "  ".join(c.ljust(w) for c, w in zip(row, widths, strict=True))
            .rstrip()
            for row in rows
        )
    )


@catalog.command("enumerate")
@click.option(
    "--degree",
    type=int,
    required=True,
    help=f"Degree, at most {MAX_DEGREE}.",
)
@run_options
def catalog_enumerate(degree: int, *, run: RunConfig) -> None:
    """Print the transitive groups of a degree up to conjugacy, as
    catalog lines.
    """
    specs = enumerate_transitive(degree, config=run.engine_config())
    run.emit("\n".join(print_spec(s) for s in specs))


def main() -> None:
    """Run the ``korbit`` console script."""
    cli(prog_name="korbit")
