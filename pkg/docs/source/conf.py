# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Sphinx configuration for the korbit documentation.

See https://www.sphinx-doc.org/en/master/usage/configuration.html for the
full list of built-in configuration values.
"""

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

project = "korbit"
copyright = "2026, Korbit Developers"  # noqa: A001
author = "Korbit Developers"
release = "0.1.0"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.autosummary",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "numpydoc",
    "sphinx_design",
    "sphinxcontrib.autodoc_pydantic",
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "pydantic": ("https://docs.pydantic.dev/latest", None),
    "click": ("https://click.palletsprojects.com/en/8.1.x", None),
    "numpy": ("https://numpy.org/doc/stable", None),
}

napoleon_numpy_docstring = True
autodoc_member_order = "bysource"
autodoc_typehints = "description"
autodoc_class_signature = "separated"
autosummary_generate = True
numpydoc_show_class_members = False

master_doc = "index"
source_suffix = [".rst"]
exclude_patterns: list[str] = []

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
html_title = f"korbit {release}"
