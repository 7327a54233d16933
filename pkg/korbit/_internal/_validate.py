# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

from __future__ import annotations

import re
import typing as t

import pydantic as pyd

from korbit import click

M = t.TypeVar("M", bound=pyd.BaseModel)


def validate_options(
    model: type[M], /, *, command: str, **options: t.Any
) -> M:
    """Validate command options against ``model``.

    Validation errors are rewritten to name the command and its
    ``--option`` flags, then raised as :py:class:`click.UsageError`.
    """
    try:
        return model(**options)
    except pyd.ValidationError as e:
        msg = re.sub(
            r"validation error(s?) for (.*)\n",
            rf"validation error\1 for command {command!r}\n",
            str(e),
        )
        for field in model.model_fields:
            flag = "--" + field.replace("_", "-")
            msg = re.sub(rf"\n{field}\n", f"\n{flag}\n", msg)
        msg = re.sub(r"\[type=.*, (input_value=.*)", r"[\1", msg)
        msg = re.sub(r"(.*), input_type=.*\]", r"\1]", msg)
        msg = re.sub(r"\n\s+For further information visit.*(\n?)", r"\1", msg)
        raise click.UsageError(msg) from None
