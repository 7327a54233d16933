# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Prepend the Korbit licence notice to every Python source file."""

from pathlib import Path

notice = """
# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.
""".strip()

SKIP = (".", "examples")


if __name__ == "__main__":
    for f in Path(".").glob("**/*.py"):
        if str(f).startswith(SKIP):
            continue
        code = f.read_text(encoding="utf-8")
        if not code.startswith(notice):
            f.write_text(f"{notice}\n\n{code}", encoding="utf-8")
