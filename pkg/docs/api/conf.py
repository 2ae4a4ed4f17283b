#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# mdlsubgroups documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

import mdlsubgroups

autoclass_content = 'both'  # document modules and packages

import sphinx_rtd_theme

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_init_with_doc = False
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_admonition_for_examples = False
napoleon_use_admonition_for_notes = False
napoleon_use_admonition_for_references = False
napoleon_use_ivar = False
napoleon_use_param = True
napoleon_use_rtype = True

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.napoleon',
              'sphinx.ext.doctest',
              'sphinx.ext.intersphinx',
              'sphinx.ext.todo',
              'sphinx.ext.coverage',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'mdlsubgroups'
copyright = '2026, mdlsubgroups developers'
author = mdlsubgroups.__author__
version = mdlsubgroups.__version__
release = version

language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = True

html_static_path = []
htmlhelp_basename = 'mdlsubgroupsdoc'

latex_documents = [
    (master_doc, 'mdlsubgroups.tex', 'mdlsubgroups Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'mdlsubgroups', 'mdlsubgroups Documentation',
     [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable', None)}
