# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Permutation groups through their n-orbit matrices: block systems,
md-stabilizers, minimal faithful degrees and checks of claims about
primitive groups of odd order.
"""

import korbit.version

__version__ = korbit.version.VERSION

from korbit import click as click
from korbit import exceptions as exceptions
from korbit.catalog import *
from korbit.claims import *
from korbit.config import *
from korbit.core import *
from korbit.exceptions import *
