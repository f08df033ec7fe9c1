# Sphinx configuration for the cycleduality documentation.
import os
import sys

sys.path.insert(0, os.path.abspath('../../'))

from cycleduality import __version__

project = 'cycleduality'
copyright = '2026, the cycleduality developers'
author = 'the cycleduality developers'
version = __version__
release = version

# docstrings are reST field lists, autodoc reads them as they are
extensions = ['sphinx.ext.autodoc']
autodoc_member_order = 'bysource'

master_doc = 'index'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
html_title = 'cycleduality ' + version
html_show_sourcelink = False
htmlhelp_basename = 'cycledualitydoc'
