# parafock documentation build configuration file

import sys, os

# Make the package importable for autodoc
sys.path.append(os.path.abspath('../webapp'))
os.environ['DJANGO_SETTINGS_MODULE'] = "parafock.settings"

from parafock import settings
settings.LOG_DIR = os.path.abspath('.')

from django import setup
setup()

import sphinx_rtd_theme

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx']
intersphinx_mapping = {
  'python': ('https://docs.python.org/3/', None)
}

source_suffix = '.rst'
master_doc = 'index'

project = u'parafock'
version = '0.3.0'
release = '0.3.0'

exclude_trees = ['_build']
add_module_names = False
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = 'parafockdoc'
