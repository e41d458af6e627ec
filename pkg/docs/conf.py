# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# -- Project information -----------------------------------------------------

project = "sixfold Documentation"
copyright = "2026, sixfold developers"
author = "sixfold developers"
release = "v0.1.0"

# -- General configuration ---------------------------------------------------

extensions = [
    "myst_parser",  # Markdown support
    "sphinx.ext.autodoc",  # Include documentation from docstrings
    "sphinx.ext.napoleon",  # Google-style docstrings
    "sphinx.ext.viewcode",  # Add links to highlighted source code
    "sphinx_copybutton",  # Add copy button to code blocks
    "sphinx_markdown_tables",  # Add support for markdown tables
]

master_doc = "index"
myst_enable_extensions = ["colon_fence", "dollarmath"]

templates_path = ["_templates"]
exclude_patterns = ["_build", "build", "Thumbs.db", ".DS_Store", "README.md"]

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_book_theme"
html_static_path = []
html_theme_options = {
    "use_download_button": True,
}

# -- Options for LaTeX output -------------------------------------------------
latex_documents = [
    (
        "index",
        "sixfold_docs.tex",
        "sixfold docs",
        "sixfold developers",
        "manual",
        "false",
    )
]
latex_elements = {"figure_align": "H"}

suppress_warnings = ["myst.mathjax"]
