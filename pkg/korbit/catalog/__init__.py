# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Group catalogs: the spec file format, the builtin seed catalog and
enumeration of small transitive groups.
"""

from korbit.catalog.builtin import *
from korbit.catalog.enumerate import *
from korbit.catalog.spec import *
