import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# Project information
project = "pirlab"
copyright = "2025, darkstussy"
author = "darkstussy"
master_doc = "index"

# General configuration
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
    "sphinx_design",
]
autodoc_default_options = {
    "members": True,
    "show-inheritance": True,
}
autodoc_type_aliases = {"Observation": "pirlab.types.Observation", "Row": "pirlab.types.Row"}
autodoc_typehints = "description"

templates_path = ["_templates"]

exclude_patterns = []

# HTML conf
html_theme = "furo"
html_theme_options = {
    "sidebar_hide_name": False,
}
