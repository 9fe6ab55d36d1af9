#!/usr/bin/env python3
# Copyright (C) 2026 The bnck authors
# License: FreeBSD (2-clause)

# bnck documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'alabaster',
]

source_suffix = '.rst'
master_doc = 'index'

project = 'bnck'
copyright = '2026, The bnck authors'
author = 'The bnck authors'

version = '0.1'
release = '0.1.0-dev'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# `text` links to Python objects.
default_role = 'py:obj'

pygments_style = 'sphinx'
autodoc_member_order = 'bysource'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'sympy': ('https://docs.sympy.org/latest', None),
}

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Bn Courant algebroids and pseudo-Kahler structures.',
}
html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'searchbox.html',
    ],
}

htmlhelp_basename = 'bnckdoc'
