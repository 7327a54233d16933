# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

import pydantic as pyd
import pytest

from korbit import click
from korbit._internal._validate import validate_options


class Options(pyd.BaseModel):
    model_config = pyd.ConfigDict(extra="forbid")

    cap_nodes: pyd.PositiveInt = 1
    jobs: pyd.PositiveInt = 1


def test_valid() -> None:
    options = validate_options(Options, command="korbit check", jobs=3)
    assert options.jobs == 3


def test_error_names_command_and_flag() -> None:
    with pytest.raises(click.UsageError) as e:
        validate_options(Options, command="korbit check", cap_nodes=0)
    msg = e.value.message
    assert msg.startswith("1 validation error for command 'korbit check'")
    assert "\n--cap-nodes\n" in msg
    assert "input_type" not in msg
    assert "errors.pydantic.dev" not in msg


def test_multiple_errors() -> None:
    with pytest.raises(click.UsageError) as e:
        validate_options(Options, command="korbit", cap_nodes=0, jobs=-2)
    msg = e.value.message
    assert msg.startswith("2 validation errors for command 'korbit'")
    assert "\n--jobs\n" in msg
