# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Claim checks, the hypothesis hunt and the claim harness."""

from korbit.claims.checks import *
from korbit.claims.harness import *
from korbit.claims.hunt import *
from korbit.claims.report import *
