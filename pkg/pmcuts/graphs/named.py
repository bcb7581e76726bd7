# -*- coding: utf-8 -*-
"""
Named cubic graphs used by tests, campaigns and the `construct_graph` command.
"""
import networkx as nx

from pmcuts.graphs.multigraph import MultiGraph


def k4():
    return MultiGraph.from_networkx(nx.complete_graph(4))


def k33():
    """
    K3,3 with colour classes {0, 1, 2} and {3, 4, 5}.
    """
    return MultiGraph.from_networkx(nx.complete_bipartite_graph(3, 3))


def prism():
    """
    The 3-prism: triangles 0-1-2 and 3-4-5 joined by the rungs i - i+3.
    """
    return MultiGraph.from_networkx(nx.circular_ladder_graph(3))


def cube():
    """
    The 3-cube with vertices labelled by their bit strings, so `u` and `v` are adjacent iff `u ^ v` is a power of 2.
    """
    return MultiGraph.from_networkx(nx.hypercube_graph(3))


def petersen():
    """
    Outer cycle 0-1-2-3-4, spokes i - i+5, inner pentagram 5-7-9-6-8.
    """
    return MultiGraph.from_networkx(nx.petersen_graph())


def octahedron():
    return MultiGraph.from_networkx(nx.octahedral_graph())


def tutte():
    """
    Tutte's 46-vertex non-Hamiltonian cubic planar 3-connected graph.
    """
    return MultiGraph.from_networkx(nx.tutte_graph())


def coxeter():
    """
    The Coxeter graph on 28 vertices: a_i, b_i, c_i, d_i for i in Z_7.

    d_i is joined to a_i, b_i and c_i; the a, b and c vertices form 7-cycles with steps 1, 2 and 3.
    """
    def a(i):
        return i % 7

    def b(i):
        return 7 + i % 7

    def c(i):
        return 14 + i % 7

    def d(i):
        return 21 + i % 7

    pairs = []
    for i in range(7):
        pairs.extend([(d(i), a(i)), (d(i), b(i)), (d(i), c(i))])
        pairs.extend([(a(i), a(i + 1)), (b(i), b(i + 2)), (c(i), c(i + 3))])
    return MultiGraph(n=28, edges=tuple(sorted(tuple(sorted(pair)) for pair in pairs)))


NAMED_GRAPHS = {
    'k4': k4,
    'k33': k33,
    'prism': prism,
    'cube': cube,
    'petersen': petersen,
    'octahedron': octahedron,
    'tutte': tutte,
    'coxeter': coxeter,
}


def named_graph(name):
    """
    Return the named graph `name` (see `NAMED_GRAPHS`).
    """
    try:
        return NAMED_GRAPHS[name.lower()]()
    except KeyError:
        raise KeyError('Unknown graph name {!r}; choose one of {}.'.format(name, ', '.join(sorted(NAMED_GRAPHS))))
