# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Main invoke task collection."""

from __future__ import annotations

from invoke.collection import Collection
from invoke.config import Config
from invoke.tasks import task

from make import cov, docs, lint, oracle, release, tests, types

ARTIFACTS: tuple[str, ...] = (
    ".cache",
    ".pytest_cache",
    ".ruff_cache",
    ".mypy_cache",
    ".tox",
    "htmlcov",
    "build",
    "dist",
    "docs/build",
    ".coverage",
    "coverage.xml",
)


@task
def install(c: Config) -> None:
    """Install package with pre-commit hooks and all development groups."""
    # docs/tests groups are included so editors can resolve imports
    c.run("poetry install --sync --only base,main,dev,docs,tests,types -E all")
    c.run("pre-commit install --install-hooks")


@task
def clean(c: Config) -> None:
    """Clean temporary files, local cache and build artifacts."""
    c.run("rm -rf `find . -name __pycache__`")
    c.run("rm -f `find . -type f -name '*.py[co]'`")
    c.run(f"rm -rf {' '.join(ARTIFACTS)} *.egg-info .coverage.*")


# create top-level namespace
namespace = Collection()

for t in (install, clean):
    namespace.add_task(t)

for module in (docs, tests, types, cov, lint, oracle, release):
    namespace.add_collection(Collection.from_module(module))
