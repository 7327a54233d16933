# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Permutation-group engine: permutations, groups, block systems, subgroup
lattices and n-orbit matrices.
"""

from korbit.core.blocks import *
from korbit.core.group import *
from korbit.core.lattice import *
from korbit.core.norbit import *
from korbit.core.permutation import *
