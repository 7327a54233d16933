# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Tasks for running linting and formatting."""

from __future__ import annotations

from invoke.config import Config
from invoke.tasks import task

TARGETS = "korbit make tests tasks.py notice.py"


@task
def install(c: Config) -> None:
    """Install package with core and lint dependencies."""
    c.run("poetry install --sync --only base,main,lint")


@task
def check(c: Config) -> None:
    """Lint Python files and check formatting and docstrings."""
    for command in (
        f"poetry run ruff check {TARGETS}",
        f"poetry run ruff format --check {TARGETS}",
        "poetry run pydoclint korbit",
    ):
        c.run(command)


@task(name="format")
def format_(c: Config) -> None:
    """Apply ruff fixes and formatting."""
    c.run(f"poetry run ruff check --fix {TARGETS}")
    c.run(f"poetry run ruff format {TARGETS}")
