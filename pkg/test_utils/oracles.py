# -*- coding: utf-8 -*-
"""
Brute-force reference computations that the fast implementations are checked against.
"""
from functools import reduce
from itertools import combinations
from operator import or_


def perfect_matching_count(graph):
    """
    Count perfect matchings by trying every set of n/2 edges.
    """
    if graph.n % 2:
        return 0
    full = (1 << graph.n) - 1
    masks = [(1 << a) | (1 << b) for a, b in graph.edges]
    return sum(
        1 for edge_ids in combinations(range(graph.m), graph.n // 2)
        if reduce(or_, (masks[edge_id] for edge_id in edge_ids), 0) == full
    )


def edge_cuts(graph):
    """
    Yield `(side, boundary)` for every nonempty proper vertex set containing vertex 0.
    """
    for mask in range(1, 1 << graph.n, 2):
        if mask == (1 << graph.n) - 1:
            continue
        side = frozenset(vertex for vertex in range(graph.n) if mask >> vertex & 1)
        yield side, graph.boundary(side)


def matching_has_cut(graph, matching):
    """
    Return True when some nonempty edge cut of `graph` lies inside `matching`.
    """
    matching = frozenset(matching)
    return any(boundary and boundary <= matching for _, boundary in edge_cuts(graph))


def matching_has_directed_cut(orientation, matching):
    """
    Return True when some nonempty edge cut inside `matching` has all arcs leaving one side.
    """
    graph = orientation.host
    matching = frozenset(matching)
    for side, boundary in edge_cuts(graph):
        if not boundary or not boundary <= matching:
            continue
        if any(not orientation.is_directed(edge_id) for edge_id in boundary):
            continue
        tails_inside = {orientation.arc(edge_id)[0] in side for edge_id in boundary}
        if len(tails_inside) == 1:
            return True
    return False


def has_hamiltonian_cycle(graph):
    """
    Decide Hamiltonicity of a simple graph by extending vertex paths from vertex 0.
    """
    if graph.n < 3:
        return False
    neighbours = [set(graph.neighbors(vertex)) for vertex in range(graph.n)]
    visited = [False] * graph.n
    visited[0] = True

    def extend(vertex, length):
        if length == graph.n:
            return 0 in neighbours[vertex]
        for other in neighbours[vertex]:
            if not visited[other]:
                visited[other] = True
                if extend(other, length + 1):
                    return True
                visited[other] = False
        return False

    return extend(0, 1)


def _induces_acyclic(orientation, vertices):
    heads = {vertex: [] for vertex in vertices}
    for _, tail, head in orientation.arcs():
        if tail in heads and head in heads:
            heads[tail].append(head)
    remaining = set(vertices)
    while remaining:
        sources = [vertex for vertex in remaining if not any(vertex in heads[other] for other in remaining)]
        if not sources:
            return False
        remaining -= set(sources)
    return True


def acyclic_two_partition_exists(orientation):
    """
    Return True when some split of the vertices into two classes leaves both classes acyclic.
    """
    n = orientation.host.n
    for mask in range(1 << (n - 1)):
        first = frozenset(vertex for vertex in range(n) if not mask >> vertex & 1)
        if _induces_acyclic(orientation, first) and _induces_acyclic(orientation, frozenset(range(n)) - first):
            return True
    return False
