# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Tasks for running tests."""

from __future__ import annotations

from invoke.config import Config
from invoke.tasks import task

# modules whose docstrings carry runnable examples
DOCTEST_FILES: tuple[str, ...] = (
    "korbit/config.py",
    "korbit/core/permutation.py",
    "korbit/core/group.py",
    "korbit/catalog/spec.py",
)


@task
def install(c: Config) -> None:
    """Install package with core and test dependencies."""
    c.run("poetry install --sync --only base,main,tests")


@task
def doctest(c: Config) -> None:
    """Run doctests."""
    c.run(f"poetry run python -m doctest {' '.join(DOCTEST_FILES)}")


@task
def unit(c: Config, *, cov: bool = False) -> None:
    """Run unit tests, optionally writing an XML coverage report."""
    command: str = "poetry run pytest tests/"
    if cov:
        command += " --cov korbit --cov-report xml"
    c.run(command)
