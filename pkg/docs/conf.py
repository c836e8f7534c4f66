#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# planartiles documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'planartiles'
copyright = u'2026, the planartiles developers'
author = u'the planartiles developers'
version = u'0.1'
release = u'0.1'

language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

html_theme = 'alabaster'
htmlhelp_basename = 'planartilesdoc'

man_pages = [
    (master_doc, 'planartiles', u'planartiles Documentation', [author], 1)
]
