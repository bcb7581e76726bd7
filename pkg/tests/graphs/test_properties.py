# -*- coding: utf-8 -*-
"""
Tests for structural graph properties.
"""
import math

import ddt
import pytest
from pytest import mark

from pmcuts.enums import EdgeState
from pmcuts.exceptions import ContractViolationError
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation
from pmcuts.graphs.named import coxeter, cube, k4, k33, named_graph, petersen, prism
from pmcuts.graphs.properties import (
    cyclic_connectivity,
    digirth,
    edge_connectivity,
    find_induced_four_cycle,
    find_triangle,
    girth,
    is_acyclic,
    is_bipartite,
    is_cubic,
    is_strongly_connected,
    is_three_connected,
    shortest_cycle_vertices,
    smallest_cyclic_bond,
    vertex_connectivity,
)
from test_utils.testcase import PmcutsTestCase

DIRECTED_TRIANGLE = PartialOrientation(
    host=MultiGraph(n=3, edges=((0, 1), (1, 2), (0, 2))),
    state=(EdgeState.FORWARD, EdgeState.FORWARD, EdgeState.BACKWARD),
)


@ddt.ddt
class TestProperties(PmcutsTestCase):
    """
    Validate the structural predicates.
    """

    @ddt.data(
        ('k4', 3, False),
        ('k33', 4, True),
        ('prism', 3, False),
        ('cube', 4, True),
        ('petersen', 5, False),
        ('octahedron', 3, False),
    )
    @ddt.unpack
    def test_girth_and_bipartite(self, name, expected_girth, bipartite):
        """
        Validate girth and bipartiteness of the named graphs.
        """
        graph = named_graph(name)
        assert girth(graph) == expected_girth
        assert (is_bipartite(graph) is not None) == bipartite

    def test_bipartition(self):
        """
        Validate that vertex 0 lies in the first colour class.
        """
        assert is_bipartite(k33()) == (frozenset({0, 1, 2}), frozenset({3, 4, 5}))

    def test_girth_special_cases(self):
        """
        Validate girth of forests, parallel edges and loops.
        """
        assert girth(MultiGraph(n=3, edges=((0, 1), (1, 2)))) == math.inf
        assert girth(MultiGraph(n=2, edges=((0, 1), (0, 1)))) == 2
        assert girth(MultiGraph(n=1, edges=((0, 0),), loops_allowed=True)) == 1

    def test_is_cubic(self):
        """
        Validate the cubic predicate.
        """
        assert is_cubic(petersen())
        assert not is_cubic(named_graph('octahedron'))
        assert not is_cubic(MultiGraph(n=0))
        assert is_cubic(MultiGraph(n=2, edges=((0, 1),) * 3))

    @ddt.data(('k4', 3, 3), ('petersen', 3, 3), ('prism', 3, 3), ('cube', 3, 3))
    @ddt.unpack
    def test_connectivity(self, name, edges, vertices):
        """
        Validate edge and vertex connectivity.
        """
        graph = named_graph(name)
        assert edge_connectivity(graph) == edges
        assert vertex_connectivity(graph) == vertices
        assert is_three_connected(graph)

    def test_connectivity_of_small_graphs(self):
        """
        Validate connectivity of disconnected and multigraph inputs.
        """
        assert edge_connectivity(MultiGraph(n=4, edges=((0, 1), (2, 3)))) == 0
        assert edge_connectivity(MultiGraph(n=2, edges=((0, 1),) * 3)) == 3
        assert not is_three_connected(MultiGraph(n=2, edges=((0, 1),) * 3))

    def test_digirth_and_acyclic(self):
        """
        Validate directed girth and acyclicity.
        """
        assert digirth(DIRECTED_TRIANGLE) == 3
        assert not is_acyclic(DIRECTED_TRIANGLE)
        assert is_strongly_connected(DIRECTED_TRIANGLE)
        transitive = PartialOrientation(host=k4(), state=(EdgeState.FORWARD,) * 6)
        assert digirth(transitive) == math.inf
        assert is_acyclic(transitive)
        assert not is_strongly_connected(transitive)
        assert digirth(PartialOrientation.undirected(k4())) == math.inf

    def test_digirth_of_antiparallel_pair(self):
        """
        Validate that two opposite parallel arcs form a directed 2-cycle.
        """
        orientation = PartialOrientation(
            host=MultiGraph(n=2, edges=((0, 1), (0, 1))), state=(EdgeState.FORWARD, EdgeState.BACKWARD),
        )
        assert digirth(orientation) == 2

    def test_strong_connectivity_needs_full_orientation(self):
        """
        Validate the precondition of `is_strongly_connected`.
        """
        with pytest.raises(ContractViolationError):
            is_strongly_connected(PartialOrientation.undirected(k4()))

    @ddt.data(('petersen', 5), ('cube', 4), ('prism', 3), ('k4', math.inf), ('k33', math.inf))
    @ddt.unpack
    def test_cyclic_connectivity(self, name, expected):
        """
        Validate the cyclic edge connectivity of the named cubic graphs.
        """
        assert cyclic_connectivity(named_graph(name)) == expected

    def test_smallest_cyclic_bond_sides_have_cycles(self):
        """
        Validate that the returned bond separates two cycles.
        """
        graph = cube()
        bond = smallest_cyclic_bond(graph)
        other_side = frozenset(range(graph.n)) - bond.side
        assert bond.edges == graph.boundary(bond.side)
        for side in (bond.side, other_side):
            assert sum(1 for a, b in graph.edges if a in side and b in side) >= len(side)

    def test_cyclic_connectivity_requires_cubic(self):
        """
        Validate the precondition of `smallest_cyclic_bond`.
        """
        with pytest.raises(ContractViolationError):
            cyclic_connectivity(named_graph('octahedron'))

    @mark.slow
    def test_coxeter_cyclic_connectivity(self):
        """
        Validate the cyclic edge connectivity of the Coxeter graph.
        """
        assert cyclic_connectivity(coxeter()) == 7

    def test_shortest_cycle(self):
        """
        Validate the vertex set of a shortest cycle.
        """
        assert len(shortest_cycle_vertices(petersen())) == 5
        assert shortest_cycle_vertices(MultiGraph(n=3, edges=((0, 1), (1, 2)))) is None

    def test_triangles_and_four_cycles(self):
        """
        Validate triangle and induced 4-cycle search.
        """
        assert find_triangle(prism()) == (0, 1, 2)
        assert find_triangle(cube()) is None
        assert find_induced_four_cycle(cube()) == (0, 1, 3, 2)
        assert find_induced_four_cycle(k4()) is None
        assert find_induced_four_cycle(petersen()) is None
