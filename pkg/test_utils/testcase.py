# -*- coding: utf-8 -*-

"""
Base test case for pmcuts tests.
"""

import os
import shutil
import tempfile
import unittest
from functools import lru_cache

from pmcuts.generate import generate_cubic
from pmcuts.graphs.named import petersen
from pmcuts.matchings import cycle_order
from pmcuts.search import can_edge_be_a_arc


@lru_cache(maxsize=None)
def petersen_a_arc():
    """
    Return the a-arc certificate of edge 0 of the Petersen graph, shared by the construction tests.
    """
    return can_edge_be_a_arc(petersen(), 0)


@lru_cache(maxsize=None)
def cubic_corpus(max_n, bipartite=False, three_connected=False):
    """
    Return the generated cubic graphs on 4 to `max_n` vertices, smallest first.
    """
    return tuple(
        graph
        for n in range(4, max_n + 1, 2)
        for graph in generate_cubic(n, bipartite=bipartite, three_connected=three_connected)
    )


class PmcutsTestCase(unittest.TestCase):
    """
    Base class for all pmcuts tests.

    If there is functionality common to all tests then either add a mixin or add it here.
    """

    def setUp(self):
        super().setUp()
        self.temp_dir = tempfile.mkdtemp(prefix='pmcuts-')
        self.addCleanup(shutil.rmtree, self.temp_dir, ignore_errors=True)

    def write_input(self, name, content):
        """
        Write `content` (text or bytes) to `name` inside the temporary directory and return the path.
        """
        path = os.path.join(self.temp_dir, name)
        mode = 'wb' if isinstance(content, bytes) else 'w'
        with open(path, mode) as handle:
            handle.write(content)
        return path

    def assertHamiltonianCycle(self, graph, edge_ids):  # pylint: disable=invalid-name
        """
        Assert that `edge_ids` is a Hamiltonian cycle of `graph`.
        """
        edge_ids = frozenset(edge_ids)
        self.assertEqual(len(edge_ids), graph.n)
        for vertex in range(graph.n):
            self.assertEqual(sum(1 for edge_id in graph.incidence[vertex] if edge_id in edge_ids), 2)
        order = cycle_order(graph, edge_ids)
        self.assertEqual(sorted(order), list(range(graph.n)))

    def assertVerified(self, result):  # pylint: disable=invalid-name
        """
        Assert that a `VerificationResult` is valid, showing its reason otherwise.
        """
        self.assertTrue(result.valid, result.reason)
