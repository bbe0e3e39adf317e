# Sphinx configuration for the polypell documentation.
#
# Project metadata is read from pyproject.toml so that the version shown in
# the docs is always the one being built.
import os
import sys
import tomllib
from datetime import date
from pathlib import Path
sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

with open(Path(__file__).parent.parent / 'pyproject.toml', 'rb') as f:
    poetry = tomllib.load(f)['tool']['poetry']

_authors = ", ".join(x[:x.find("<")].strip() for x in poetry['authors'])

project = poetry['name']
copyright = f'2023-{date.today().year}, {_authors}'
author = _authors
release = poetry['version']

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx_toolbox',
    'sphinx_toolbox.github',
    'sphinx_toolbox.more_autodoc.no_docstring',
    'sphinx_toolbox.more_autodoc.typehints',
    'sphinx_toolbox.more_autodoc.variables',
    'sphinx_toolbox.tweaks.param_dash',
    'sphinx_autodoc_typehints',
]

github_username = 'thatfloflo'
github_repository = 'polypell'

autodoc_default_options = {
    'members': True,
    'private-members': False,
    'undoc-members': True,
    'show-inheritance': True,
    'ignore-module-all': False,
    'class-doc-from': 'class',
}
autodoc_class_signature = 'separated'
autodoc_member_order = 'bysource'
autodoc_typehints = 'both'
autodoc_typehints_format = 'short'
autodoc_type_aliases = {
    'PairT': 'polypell.PairT',
    'ModeT': 'polypell.ModeT',
}
autodoc_preserve_defaults = True
typehints_defaults = 'comma'
python_use_unqualified_type_names = True

# The :Example: blocks in the docstrings run under `make doctest`.
doctest_global_setup = 'from polypell import *'

default_role = 'py:obj'

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'body_max_width': 'none',
    'style_external_links': True,
    'prev_next_buttons_location': 'bottom',
}
html_context = {
    'display_github': True,
    'github_user': github_username,
    'github_repo': github_repository,
    'github_version': 'main',
    'conf_py_path': '/docs/',
}
html_show_sphinx = False

rst_epilog = f'''
.. |project| replace:: *{project}*
'''
