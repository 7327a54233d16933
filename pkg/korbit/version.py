# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Version information for Korbit.

The report layout follows ``pydantic.version.version_info``.
"""

__all__ = ["VERSION", "version_info"]

VERSION = "0.1.0"

#: Distributions whose versions are worth including in bug reports.
RELATED_PACKAGES: tuple[str, ...] = (
    "click",
    "docstring-parser",
    "numpy",
    "pydantic",
    "rich-click",
)


def version_info() -> str:
    """Return version information for Korbit, its runtime dependencies and
    the default computation caps.
    """
    import importlib.metadata
    import platform
    import sys
    from pathlib import Path

    from korbit.config import DEFAULT_CONFIG

    installed = []
    for name in RELATED_PACKAGES:
        try:
            installed.append(f"{name}-{importlib.metadata.version(name)}")
        except importlib.metadata.PackageNotFoundError:
            continue

    caps = ", ".join(
        f"{field}={value}"
        for field, value in DEFAULT_CONFIG.model_dump().items()
    )
    info = {
        "korbit version": VERSION,
        "install path": Path(__file__).resolve().parent,
        "python version": sys.version,
        "platform": platform.platform(),
        "related packages": " ".join(installed),
        "default caps": caps,
    }
    return "\n".join(
        "{:>30} {}".format(k + ":", str(v).replace("\n", " "))
        for k, v in info.items()
    )
