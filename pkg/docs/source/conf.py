# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html
import os
import sys

from datetime import datetime

sys.path.insert(0, os.path.abspath("../../src"))

import matmoment  # noqa: E402

# -- Project information -----------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#project-information

project = "matmoment"
copyright = f"{datetime.now().year}, {matmoment.__authors__}"
author = matmoment.__authors__
release = matmoment.__version__

# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.coverage",
    "sphinx.ext.mathjax",
    "myst_parser",
]
templates_path = ["_templates"]
add_module_names = False

autodoc_default_options = {
    "ignore-module-all": True,
}

# ---- MYST options -----------
myst_enable_extensions = ["colon_fence", "substitution", "dollarmath"]
myst_heading_anchors = 2
myst_substitutions = {
    "MatrixMoments": "{py:class}`~matmoment.blockmat.MatrixMoments`",
    "GramPair": "{py:class}`~matmoment.blockmat.GramPair`",
    "DeBrangesData": "{py:class}`~matmoment.debranges.DeBrangesData`",
    "DeBrangesPair": "{py:class}`~matmoment.debranges.DeBrangesPair`",
    "ThetaMatrix": "{py:class}`~matmoment.solutions.ThetaMatrix`",
    "SchurParameter": "{py:class}`~matmoment.solutions.SchurParameter`",
    "SolutionFunction": "{py:class}`~matmoment.solutions.SolutionFunction`",
    "IdentityReport": "{py:class}`~matmoment.identities.IdentityReport`",
}


# -- Options for HTML output -------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#options-for-html-output

html_theme = "pydata_sphinx_theme"
html_static_path = []
html_theme_options = {
    "show_nav_level": 2,
    "navbar_center": ["navbar-nav"],
    "logo": {
        "text": "matmoment",
    },
    "show_toc_level": 1,
}
