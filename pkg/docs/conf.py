#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# elliptic_rmatrix documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import sys
import os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

from elliptic_rmatrix._version import __version__

# -- General configuration ---------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    ]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'elliptic_rmatrix'
copyright = u'2026, elliptic-rmatrix developers'

version = __version__.rsplit('.', 1)[0]
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Elliptic R-matrices and their numerical certification',
    'pypi_name': 'elliptic-rmatrix',
    }

autodoc_default_options = {
    'members': True,
    'member-order': 'bysource',
    'undoc-members': True,
    'exclude-members': '__weakref__',
    'show-inheritance': True,
    }

html_last_updated_fmt = '%Y-%b-%d'
htmlhelp_basename = 'elliptic-rmatrixdoc'

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'elliptic-rmatrix',
     u'elliptic_rmatrix Documentation',
     [u'elliptic-rmatrix developers'], 1)
    ]
