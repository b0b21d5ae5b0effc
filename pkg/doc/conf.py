# -*- coding: utf-8 -*-
import sys
import os
import datetime
import sphinx_bootstrap_theme

# Sphinx needs to be able to import gaugeforge to use autodoc
sys.path.append(os.path.pardir)

from gaugeforge import __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.doctest',
    'sphinx.ext.viewcode',
]

autodoc_default_flags = ['members']

# Sphinx project configuration
exclude_patterns = ['_build']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project
year = datetime.date.today().year
project = u'gaugeforge'
copyright = u'{:d}, The gaugeforge developers'.format(year)
version = __version__
release = __version__

html_last_updated_fmt = '%b %d, %Y'
html_title = 'gaugeforge {}'.format(version)
html_short_title = 'gaugeforge'
html_use_smartypants = True
pygments_style = 'default'
add_function_parentheses = False
html_sidebars = {
    'install': ['localtoc.html'],
    'cli': ['localtoc.html'],
    'api/**': ['localtoc.html'],
    'api': ['localtoc.html'],
}
html_show_sourcelink = True
htmlhelp_basename = 'gaugeforgedoc'

# Theme config
html_theme = 'bootstrap'
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()
html_theme_options = {
    'bootswatch_theme': "flatly",
    'navbar_title': 'gaugeforge',
    'navbar_site_name': "Site",
    'navbar_links': [
        ("Install", "install"),
        ("Command", "cli"),
        ("API", "api"),
    ],
    'navbar_sidebarrel': False,
    'navbar_pagenav': False,
    'globaltoc_depth': 1,
    'globaltoc_includehidden': "false",
    'navbar_class': "navbar navbar-default",
    'navbar_fixed_top': "false",
    'source_link_position': "footer",
    'bootstrap_version': "3",
}
