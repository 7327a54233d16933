# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

from __future__ import annotations

import logging
import sys

LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


class _StderrHandler(logging.StreamHandler):
    pass


def configure(verbosity: int) -> logging.Logger:
    """Send ``korbit`` log records to the current stderr.

    ``0`` shows warnings, ``1`` progress and ``2`` or more debug output.
    A handler installed by an earlier call is replaced.
    """
    logger = logging.getLogger("korbit")
    logger.setLevel(LEVELS[min(max(verbosity, 0), len(LEVELS) - 1)])
    for handler in list(logger.handlers):
        if isinstance(handler, _StderrHandler):
            logger.removeHandler(handler)
    handler = _StderrHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter("%(levelname)s %(name)s: %(message)s")
    )
    logger.addHandler(handler)
    return logger
