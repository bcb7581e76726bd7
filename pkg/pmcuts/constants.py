# -*- coding: utf-8 -*-
"""
Constants used by pmcuts.

Size bounds can be overridden from django settings of the host project.
"""
import os

from django.conf import settings


def _setting(name, default):
    """
    Return the django setting `name` or `default` when the host project does not define it.
    """
    return getattr(settings, name) if hasattr(settings, name) else default


CANONICAL_MAX_N = _setting('PMCUTS_CANONICAL_MAX_N', 20)
GENERATION_MAX_N = _setting('PMCUTS_GENERATION_MAX_N', 20)
FULL_GENERATION_MAX_N = _setting('PMCUTS_FULL_GENERATION_MAX_N', 12)
SWEEP_MAX_EDGES = _setting('PMCUTS_SWEEP_MAX_EDGES', 24)
CYCLE_SPACE_MAX_DIM = _setting('PMCUTS_CYCLE_SPACE_MAX_DIM', 25)
NL_MAX_N = _setting('PMCUTS_NL_MAX_N', 30)
REFUTATION_BRUTE_FORCE_MAX_EDGES = _setting('PMCUTS_REFUTATION_BRUTE_FORCE_MAX_EDGES', 15)
CERTIFICATE_SCHEMA_VERSION = _setting('PMCUTS_CERTIFICATE_SCHEMA_VERSION', '1')
DEFAULT_JOBS = int(os.environ.get('PMCUTS_JOBS', _setting('PMCUTS_DEFAULT_JOBS', 1)))

GRAPH6_HEADER = '>>graph6<<'
SPARSE6_HEADER = '>>sparse6<<'
DIGRAPH6_HEADER = '>>digraph6<<'
PLANAR_CODE_HEADER = b'>>planar_code<<'
PLANAR_CODE_HEADER_LE = b'>>planar_code le<<'
PLANAR_CODE_HEADER_BE = b'>>planar_code be<<'
SIDECAR_PREFIX = 'O:'

# Exit codes of the campaign commands.
EXIT_COMPLETE = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INCOMPLETE = 2
EXIT_USAGE = 3
