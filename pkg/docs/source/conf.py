# Sphinx configuration of the rank2_harmonic documentation.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import datetime
import pathlib
import sys

# Document the package from the source tree
sys.path.append(str(pathlib.Path(__file__).parents[2].resolve() / 'src'))
from rank2_harmonic import __version__ as lib_version

# -- Project information -----------------------------------------------------

project = 'rank2_harmonic'
copyright = f'{datetime.date.today().year}, rank2_harmonic developers'
author = 'rank2_harmonic developers'

release = lib_version
version = lib_version.split('-')[0]

rst_epilog = f"""
.. |version| replace:: {version}

.. |release| replace:: {release}

.. |date| replace:: {format(datetime.datetime.now(), '%B %d, %Y')}
"""

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'numpydoc',
    'sphinx_copybutton',
]
autosummary_generate = True
templates_path = ['_templates']
exclude_patterns = []

# Dataclass fields are documented in the class docstrings
numpydoc_show_class_members = False
numpydoc_class_members_toctree = False

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'sympy': ('https://docs.sympy.org/latest', None),
}

# -- Options for HTML output -------------------------------------------------

html_theme = 'pydata_sphinx_theme'
html_show_sourcelink = False
html_title = project

# Shell examples in the README and design pages
copybutton_prompt_text = '$ '
copybutton_line_continuation_character = '\\'
