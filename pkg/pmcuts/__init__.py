# -*- coding: utf-8 -*-
"""
pmcuts is the django app that searches and verifies perfect matchings without (directed) cuts in cubic graphs.

The conjectures of Tait, Barnette, Tutte, Neumann-Lara and Hochstaettler can all be phrased as
"every 3-connected cubic (bipartite, planar, directed) graph contains a perfect matching without a (directed) cut".
This app provides the graph representation, matching and cut machinery, the gadget constructions that build
counterexamples from a-arcs, plane duality, small census generation and the management commands that run the
verification campaigns.
"""

# pmcuts follows semantic versioning specifications,
# A version number is of the form `MAJOR.MINOR.PATCH`, where
# 1. MAJOR version when you make incompatible API changes,
# 2. MINOR version when you add functionality in a backwards compatible manner, and
# 3. PATCH version when you make backwards compatible bug fixes.
# More details can be found at https://semver.org/
__version__ = '1.0.0'

default_app_config = 'pmcuts.apps.PmcutsConfig'  # pylint: disable=invalid-name
