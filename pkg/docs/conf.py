"""
pmcuts documentation build configuration file.

This file is execfile()d with the current directory set to its containing dir.
"""
import io
import os
import re
import sys
from datetime import datetime

from django import setup as django_setup
from django.conf import settings


def get_version(*file_paths):
    """
    Extract the version string from the file at the given relative path fragments.
    """
    filename = os.path.join(os.path.dirname(__file__), *file_paths)
    version_file = io.open(filename).read()
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", version_file, re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError('Unable to find version string.')


REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(REPO_ROOT)

VERSION = get_version('../pmcuts', '__init__.py')

settings.configure(INSTALLED_APPS=('rest_framework', 'pmcuts'))
django_setup()

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
top_level_doc = 'index'

project = 'pmcuts-toolkit'
copyright = f'{datetime.now().year}, pmcuts contributors'  # pylint: disable=redefined-builtin
author = 'pmcuts contributors'
version = VERSION
release = VERSION

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
html_theme = 'alabaster'
htmlhelp_basename = 'pmcutsdoc'
