# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Tasks for running coverage checks."""

from invoke.config import Config
from invoke.tasks import task


@task
def install(c: Config) -> None:
    """Install package with core and test dependencies."""
    c.run("poetry install --sync --only base,main,tests")


@task
def report(c: Config, *, html: bool = False) -> None:
    """Run unit tests under coverage and print a term report."""
    fmt = "html" if html else "term-missing"
    c.run(f"poetry run pytest tests/ --cov korbit --cov-report {fmt}")
