# -*- coding: utf-8 -*-
"""
Tests for perfect matchings, bonds and even / odd subgraphs.
"""
import logging
import math

import ddt
import mock
import numpy as np
import pytest
from pytest import mark
from testfixtures import LogCapture

from pmcuts import constants
from pmcuts.enums import EdgeState
from pmcuts.exceptions import BoundExceededError, ContractViolationError
from pmcuts.generate import generate_cubic
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation
from pmcuts.graphs.named import cube, k4, k33, named_graph, petersen, prism, tutte
from pmcuts.matchings import (
    a_edges,
    bonds_of,
    bonds_within_matching,
    connected_vertex_sets,
    count_perfect_matchings,
    cycle_space_basis,
    directed_cut_in_matching,
    enumerate_perfect_matchings,
    even_subgraph_with_strong_contraction,
    hamiltonian_cycle,
    is_even_subgraph,
    is_hamiltonian,
    is_odd_subgraph,
    is_perfect_matching,
    matching_contains_cut,
    min_cut_in_perfect_matching,
    odd_subgraph_without_directed_cut,
    sample_odd_subgraphs,
)
from test_utils import oracles
from test_utils.constants import CONNECTED_CUBIC_COUNTS
from test_utils.testcase import PmcutsTestCase, cubic_corpus

TRIANGLE = MultiGraph(n=3, edges=((0, 1), (0, 2), (1, 2)))


def transitive_k4():
    return PartialOrientation(host=k4(), state=(EdgeState.FORWARD,) * 6)


@ddt.ddt
class TestPerfectMatchings(PmcutsTestCase):
    """
    Validate perfect matching enumeration and counting.
    """

    @ddt.data(('k4', 3), ('k33', 6), ('prism', 4), ('cube', 9), ('petersen', 6))
    @ddt.unpack
    def test_counts(self, name, expected):
        """
        Validate counts against brute force.
        """
        graph = named_graph(name)
        matchings = list(enumerate_perfect_matchings(graph))
        assert len(matchings) == expected
        assert count_perfect_matchings(graph) == expected
        assert oracles.perfect_matching_count(graph) == expected
        assert all(is_perfect_matching(graph, matching.edges) for matching in matchings)
        assert len({matching.edges for matching in matchings}) == expected

    def test_lexicographic_order(self):
        """
        Validate the enumeration order of K4.
        """
        assert [matching.sorted_edges() for matching in enumerate_perfect_matchings(k4())] == [
            (0, 5), (1, 4), (2, 3),
        ]

    def test_parallel_edges_counted_separately(self):
        """
        Validate that parallel edges give distinct matchings.
        """
        graph = MultiGraph(n=2, edges=((0, 1),) * 3)
        assert count_perfect_matchings(graph) == 3
        assert len(list(enumerate_perfect_matchings(graph))) == 3

    def test_odd_order_logs_warning(self):
        """
        Validate that an odd number of vertices yields nothing and is logged.
        """
        with LogCapture('pmcuts', level=logging.WARNING) as log_capture:
            assert not list(enumerate_perfect_matchings(TRIANGLE))
        assert 'odd number of vertices [3]' in log_capture.records[0].getMessage()
        assert count_perfect_matchings(TRIANGLE) == 0

    def test_complement_is_two_factor(self):
        """
        Validate that the complement of a perfect matching of a cubic graph is even.
        """
        for matching in enumerate_perfect_matchings(petersen()):
            assert is_even_subgraph(petersen(), matching.complement())
            assert is_odd_subgraph(petersen(), matching.edges)

    def test_is_perfect_matching(self):
        """
        Validate the perfect matching predicate.
        """
        assert is_perfect_matching(k4(), {0, 5})
        assert not is_perfect_matching(k4(), {0, 1})
        assert not is_perfect_matching(k4(), {0})


@ddt.ddt
class TestBonds(PmcutsTestCase):
    """
    Validate bonds and cuts inside perfect matchings.
    """

    def test_connected_vertex_sets(self):
        """
        Validate enumeration of connected sets containing a root.
        """
        path = [[1], [0, 2], [1]]
        assert sorted(map(sorted, connected_vertex_sets(path, 0))) == [[0], [0, 1], [0, 1, 2]]
        sets = list(connected_vertex_sets([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]], 0))
        assert len(sets) == len(set(sets)) == 8

    def test_bonds_of_k4(self):
        """
        Validate the bonds of K4.
        """
        bonds = bonds_of(k4())
        assert [len(bond.edges) for bond in bonds] == [3, 3, 3, 3, 4, 4, 4]
        assert all(0 in bond.side for bond in bonds)

    @ddt.data('k4', 'k33', 'prism', 'cube', 'petersen')
    def test_cut_detection_matches_brute_force(self, name):
        """
        Validate `matching_contains_cut` and `bonds_within_matching` against every vertex subset.
        """
        graph = named_graph(name)
        for matching in enumerate_perfect_matchings(graph):
            expected = oracles.matching_has_cut(graph, matching.edges)
            assert matching_contains_cut(graph, matching) == expected
            bonds = bonds_within_matching(graph, matching)
            assert bool(bonds) == expected
            for bond in bonds:
                assert bond.edges <= matching.edges
                assert graph.is_connected_on(bond.side)
                assert graph.is_connected_on(frozenset(range(graph.n)) - bond.side)

    def test_cube_parallel_classes(self):
        """
        Validate that exactly the three parallel classes of the cube contain a cut.
        """
        graph = cube()
        with_cut = [
            matching for matching in enumerate_perfect_matchings(graph) if matching_contains_cut(graph, matching)
        ]
        classes = {
            frozenset(edge_id for edge_id, (a, b) in enumerate(graph.edges) if a ^ b == bit) for bit in (1, 2, 4)
        }
        assert {matching.edges for matching in with_cut} == classes

    def test_not_a_matching(self):
        """
        Validate that non-matchings are refused.
        """
        with pytest.raises(ContractViolationError):
            matching_contains_cut(k4(), {0, 1})

    def test_directed_cut_in_matching(self):
        """
        Validate detection of a directed bond inside a matching of the cube.
        """
        graph = cube()
        matching = frozenset(edge_id for edge_id, (a, b) in enumerate(graph.edges) if a ^ b == 1)
        orientation = PartialOrientation.from_arcs(
            graph, {edge_id: (a, b) if a & 1 == 0 else (b, a) for edge_id, (a, b) in enumerate(graph.edges)},
        )
        bond = directed_cut_in_matching(graph, orientation, matching)
        assert bond is not None
        assert bond.edges == matching
        assert oracles.matching_has_directed_cut(orientation, matching)
        flipped = orientation.with_states({min(matching): orientation.state[min(matching)].reversed()})
        assert directed_cut_in_matching(graph, flipped, matching) is None
        assert not oracles.matching_has_directed_cut(flipped, matching)

    @ddt.data(('k4', math.inf), ('k33', math.inf), ('cube', 4), ('petersen', 5))
    @ddt.unpack
    def test_min_cut_in_perfect_matching(self, name, expected):
        """
        Validate the smallest bond inside a perfect matching.
        """
        assert min_cut_in_perfect_matching(named_graph(name)) == expected

    def test_min_cut_without_matching(self):
        """
        Validate that graphs without a perfect matching give None.
        """
        assert min_cut_in_perfect_matching(TRIANGLE) is None


class TestHamiltonicity(PmcutsTestCase):
    """
    Validate Hamiltonian cycle search.
    """

    def test_prism(self):
        """
        Validate a Hamiltonian cycle of the prism, also through a required rung.
        """
        graph = prism()
        self.assertHamiltonianCycle(graph, hamiltonian_cycle(graph))
        rung = graph.edges.index((0, 3))
        cycle = hamiltonian_cycle(graph, required={rung})
        self.assertHamiltonianCycle(graph, cycle)
        assert rung in cycle
        assert sorted(is_hamiltonian(graph)) == list(range(6))

    def test_petersen(self):
        """
        Validate that the Petersen graph is not Hamiltonian and all of its edges are a-edges.
        """
        assert is_hamiltonian(petersen()) is None
        assert hamiltonian_cycle(petersen()) is None
        assert a_edges(petersen()) == frozenset(range(15))

    def test_k4_has_no_a_edges(self):
        """
        Validate that every edge of K4 is avoided by some Hamiltonian cycle.
        """
        assert a_edges(k4()) == frozenset()

    def test_digon(self):
        """
        Validate Hamiltonian cycles on two vertices.
        """
        graph = MultiGraph(n=2, edges=((0, 1),) * 3)
        assert hamiltonian_cycle(graph, required={2}) == (2, 0)
        assert hamiltonian_cycle(MultiGraph(n=2, edges=((0, 1),))) is None

    def test_a_edges_need_cubic(self):
        """
        Validate the precondition of `a_edges`.
        """
        with pytest.raises(ContractViolationError):
            a_edges(named_graph('octahedron'))

    @mark.slow
    def test_tutte_graph(self):
        """
        Validate that Tutte's graph is not Hamiltonian.
        """
        assert is_hamiltonian(tutte()) is None


def corpus(max_n):
    """
    Connected cubic graphs up to 12 vertices, then 3-connected ones up to `max_n`.
    """
    graphs = list(cubic_corpus(min(max_n, 12)))
    for n in range(14, max_n + 1, 2):
        graphs.extend(generate_cubic(n, three_connected=True))
    return graphs


class TestCorpusAgainstOracles(PmcutsTestCase):
    """
    Validate matchings, cuts and Hamiltonicity on every generated cubic graph against brute force.
    """

    def check_enumerator_matches_counter(self, graphs):
        for graph in graphs:
            matchings = list(enumerate_perfect_matchings(graph))
            assert len(matchings) == count_perfect_matchings(graph)
            assert len({matching.edges for matching in matchings}) == len(matchings)

    def check_counts_match_brute_force(self, graphs):
        for graph in graphs:
            assert count_perfect_matchings(graph) == oracles.perfect_matching_count(graph)

    def check_cuts_match_brute_force(self, graphs):
        for graph in graphs:
            for matching in enumerate_perfect_matchings(graph):
                expected = oracles.matching_has_cut(graph, matching.edges)
                assert matching_contains_cut(graph, matching) == expected
                assert bool(bonds_within_matching(graph, matching)) == expected

    def check_hamiltonian_iff_matching_without_cut(self, graphs):
        for graph in graphs:
            expected = oracles.has_hamiltonian_cycle(graph)
            assert (is_hamiltonian(graph) is not None) == expected
            uncut = any(not matching_contains_cut(graph, matching) for matching in enumerate_perfect_matchings(graph))
            assert uncut == expected
            if expected:
                self.assertHamiltonianCycle(graph, hamiltonian_cycle(graph))

    def test_small_corpus(self):
        """
        Validate counting, cut detection and Hamiltonicity on the cubic graphs up to 8 vertices.
        """
        graphs = corpus(8)
        assert len(graphs) == 8
        self.check_enumerator_matches_counter(graphs)
        self.check_counts_match_brute_force(graphs)
        self.check_cuts_match_brute_force(graphs)
        self.check_hamiltonian_iff_matching_without_cut(graphs)

    @mark.slow
    def test_enumerator_matches_counter(self):
        """
        Validate that enumeration and counting agree on every corpus graph up to 14 vertices.
        """
        self.check_enumerator_matches_counter(corpus(14))

    @mark.slow
    def test_counts_and_cuts_match_brute_force(self):
        """
        Validate matching counts and cuts inside matchings against brute force up to 12 vertices.
        """
        graphs = corpus(12)
        assert len(graphs) == sum(CONNECTED_CUBIC_COUNTS.values())
        self.check_counts_match_brute_force(graphs)
        self.check_cuts_match_brute_force(graphs)

    @mark.slow
    def test_hamiltonian_iff_matching_without_cut(self):
        """
        Validate Hamiltonicity against the path backtracker up to 14 vertices.
        """
        self.check_hamiltonian_iff_matching_without_cut(corpus(14))


class TestEvenSubgraphs(PmcutsTestCase):
    """
    Validate the cycle space searches.
    """

    def test_cycle_space_basis(self):
        """
        Validate the dimension and evenness of the fundamental cycles.
        """
        for graph in (k4(), k33(), petersen()):
            basis = cycle_space_basis(graph)
            assert len(basis) == graph.m - graph.n + 1
            for mask in basis:
                assert is_even_subgraph(graph, [edge_id for edge_id in range(graph.m) if mask >> edge_id & 1])

    def test_strongly_connected_input(self):
        """
        Validate that a strongly connected orientation needs no contraction.
        """
        triangle = PartialOrientation(host=TRIANGLE, state=(EdgeState.FORWARD, EdgeState.BACKWARD, EdgeState.FORWARD))
        result = even_subgraph_with_strong_contraction(triangle)
        assert result.found
        assert result.witness == frozenset()
        assert result.checked == 1
        assert result.exhaustive

    def test_exhaustive_search(self):
        """
        Validate the exhaustive cycle space walk on an acyclic tournament.
        """
        result = even_subgraph_with_strong_contraction(transitive_k4())
        assert result.found
        assert result.exhaustive
        assert result.dimension == 3
        assert result.witness
        assert is_even_subgraph(k4(), result.witness)

    def test_sampled_search(self):
        """
        Validate that sampled searches are marked as not exhaustive.
        """
        result = even_subgraph_with_strong_contraction(transitive_k4(), samples=50, seed=0)
        assert result.found
        assert not result.exhaustive
        assert is_even_subgraph(k4(), result.witness)

    def test_exhaustive_bound(self):
        """
        Validate that the exhaustive walk respects the dimension bound.
        """
        with mock.patch.object(constants, 'CYCLE_SPACE_MAX_DIM', 1):
            with pytest.raises(BoundExceededError):
                even_subgraph_with_strong_contraction(transitive_k4())

    def test_requires_full_orientation(self):
        """
        Validate the precondition of the even subgraph search.
        """
        with pytest.raises(ContractViolationError):
            even_subgraph_with_strong_contraction(PartialOrientation.undirected(k4()))

    def test_odd_subgraph_without_directed_cut(self):
        """
        Validate the odd subgraph reformulation against brute force.
        """
        orientation = transitive_k4()
        odd = odd_subgraph_without_directed_cut(orientation)
        assert is_odd_subgraph(orientation, odd)
        assert not oracles.matching_has_directed_cut(orientation, odd)

    def test_sample_odd_subgraphs(self):
        """
        Validate that sampled odd subgraphs are odd.
        """
        samples = list(sample_odd_subgraphs(petersen(), 5, seed=3))
        assert len(samples) == 5
        assert all(is_odd_subgraph(petersen(), edges) for edges in samples)
        with pytest.raises(ContractViolationError):
            list(sample_odd_subgraphs(TRIANGLE, 1))

    def test_odd_iff_complement_even(self):
        """
        Validate on random edge subsets of cubic graphs that a subset is odd exactly when its complement is even.
        """
        rng = np.random.default_rng(11)
        graphs = cubic_corpus(8) + (petersen(),)
        odd_seen = 0
        for trial in range(10 ** 4):
            graph = graphs[trial % len(graphs)]
            chosen = frozenset(int(edge_id) for edge_id in np.flatnonzero(rng.integers(0, 2, size=graph.m)))
            odd = is_odd_subgraph(graph, chosen)
            assert odd == is_even_subgraph(graph, frozenset(range(graph.m)) - chosen)
            odd_seen += odd
        for edges in sample_odd_subgraphs(petersen(), 200, seed=5):
            assert is_even_subgraph(petersen(), frozenset(range(15)) - edges)
        assert odd_seen
