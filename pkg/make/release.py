# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Tasks for bumping the package version."""

import re
from pathlib import Path

from invoke.config import Config
from invoke.tasks import task

ROOT = Path(__file__).parent.parent

VERSIONED = {
    ROOT / "docs" / "source" / "conf.py": r'release = "{}"',
    ROOT / "korbit" / "version.py": r'VERSION = "{}"',
}


def _bump(path: Path, template: str, version: str) -> None:
    pattern = template.format(".*")
    text = path.read_text(encoding="utf-8")
    path.write_text(
        re.sub(pattern, template.format(version), text), encoding="utf-8"
    )


@task
def build(c: Config, *, v: str) -> None:
    """Bump the documentation, package and project versions to v."""
    for path, template in VERSIONED.items():
        _bump(path, template, v)
    c.run(f"poetry version -q {v}")
