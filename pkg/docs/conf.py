# -*- coding: utf-8 -*-
#
# hyperflow documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

from hyperflow import get_version  # noqa

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'hyperflow'
copyright = u'2026, the hyperflow developers'

version = '.'.join(get_version().split('.')[:2])
release = get_version()

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'hyperflowdoc'

man_pages = [
    ('index', 'hyperflow', u'hyperflow Documentation',
     [u'the hyperflow developers'], 1)
]
