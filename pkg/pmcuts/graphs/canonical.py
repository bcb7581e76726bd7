# -*- coding: utf-8 -*-
"""
Canonical labelling and automorphisms of small multigraphs by partition refinement and backtracking.
"""
import logging
from collections import deque

from pmcuts import constants
from pmcuts.enums import EdgeState
from pmcuts.exceptions import BoundExceededError, ContractViolationError
from pmcuts.graphs.multigraph import MultiGraph

LOGGER = logging.getLogger(__name__)


def _multiplicity_matrix(g: MultiGraph):
    matrix = [[0] * g.n for _ in range(g.n)]
    for a, b in g.edges:
        matrix[a][b] += 1
        if a != b:
            matrix[b][a] += 1
    return matrix


def _vertex_invariant(g: MultiGraph, vertex):
    """
    Degree plus the sizes of the breadth first layers around `vertex`.
    """
    distance = {vertex: 0}
    queue = deque([vertex])
    while queue:
        current = queue.popleft()
        for other in g.neighbors(current):
            if other not in distance:
                distance[other] = distance[current] + 1
                queue.append(other)
    layers = [0] * (max(distance.values()) + 1)
    for value in distance.values():
        layers[value] += 1
    return g.degree(vertex), tuple(layers)


def _refine(partition, matrix):
    """
    Refine an ordered partition to the coarsest equitable partition below it.
    """
    while True:
        cell_of = {}
        for index, cell in enumerate(partition):
            for vertex in cell:
                cell_of[vertex] = index
        refined = []
        for cell in partition:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signatures = {}
            for vertex in cell:
                counts = [0] * len(partition)
                for other, multiplicity in enumerate(matrix[vertex]):
                    if multiplicity:
                        counts[cell_of[other]] += multiplicity
                signatures.setdefault(tuple(counts), []).append(vertex)
            for signature in sorted(signatures):
                refined.append(signatures[signature])
        if len(refined) == len(partition):
            return refined
        partition = refined


def _code(g: MultiGraph, labelling):
    pairs = sorted(tuple(sorted((labelling[a], labelling[b]))) for a, b in g.edges)
    return bytes([g.n]) + bytes(value for pair in pairs for value in pair)


def _leaves(g: MultiGraph):
    """
    Return `(code, labelling)` for every leaf of the individualisation-refinement tree.
    """
    matrix = _multiplicity_matrix(g)
    invariants = {}
    for vertex in range(g.n):
        invariants.setdefault(_vertex_invariant(g, vertex), []).append(vertex)
    start = _refine([invariants[key] for key in sorted(invariants)], matrix)
    leaves = []
    stack = [start]
    while stack:
        partition = stack.pop()
        target = None
        for index, cell in enumerate(partition):
            if len(cell) > 1 and (target is None or len(cell) < len(partition[target])):
                target = index
        if target is None:
            labelling = [0] * g.n
            for position, cell in enumerate(partition):
                labelling[cell[0]] = position
            leaves.append((_code(g, labelling), tuple(labelling)))
            continue
        cell = partition[target]
        for vertex in reversed(cell):
            rest = [other for other in cell if other != vertex]
            stack.append(_refine(partition[:target] + [[vertex], rest] + partition[target + 1:], matrix))
    return leaves


def _check_bound(g: MultiGraph):
    if g.n > constants.CANONICAL_MAX_N:
        raise BoundExceededError(
            'Canonical labelling is limited to {} vertices (got {}); use an external canonicaliser such as nauty '
            'for larger graphs.'.format(constants.CANONICAL_MAX_N, g.n)
        )


def canonical_form(g: MultiGraph) -> bytes:
    """
    Return a byte string that is equal for two graphs exactly when they are isomorphic.
    """
    _check_bound(g)
    if g.n == 0:
        return bytes([0])
    return min(code for code, _ in _leaves(g))


def canonical_labelling(g: MultiGraph):
    """
    Return `(code, labelling)` where `labelling[v]` is the canonical position of vertex `v`.
    """
    _check_bound(g)
    if g.n == 0:
        return bytes([0]), ()
    return min(_leaves(g))


def automorphisms(g: MultiGraph):
    """
    Return every automorphism of `g` as a vertex permutation tuple, the identity first.
    """
    _check_bound(g)
    if g.n == 0:
        return [()]
    leaves = _leaves(g)
    best = min(code for code, _ in leaves)
    labellings = [labelling for code, labelling in leaves if code == best]
    inverse = [0] * g.n
    for vertex, position in enumerate(labellings[0]):
        inverse[position] = vertex
    result = {tuple(inverse[labelling[vertex]] for vertex in range(g.n)) for labelling in labellings}
    identity = tuple(range(g.n))
    return [identity] + sorted(result - {identity})


def edge_automorphisms(g: MultiGraph):
    """
    Return the automorphisms of a simple graph acting on edge ids.

    Each entry maps `edge_id -> (image_edge_id, flips)` where `flips` tells whether the stored endpoint order
    is reversed by the permutation.
    """
    if not g.is_simple():
        raise ContractViolationError('Edge automorphisms are only computed for simple graphs.')
    index = {tuple(sorted(pair)): edge_id for edge_id, pair in enumerate(g.edges)}
    result = []
    for permutation in automorphisms(g):
        mapping = []
        for a, b in g.edges:
            image = index[tuple(sorted((permutation[a], permutation[b])))]
            mapping.append((image, g.edges[image][0] != permutation[a]))
        result.append(tuple(mapping))
    return result


def apply_edge_automorphism(state, mapping):
    """
    Return the orientation state tuple `state` moved along an edge automorphism.
    """
    moved = [EdgeState.UNDIRECTED] * len(state)
    for edge_id, (image, flips) in enumerate(mapping):
        moved[image] = state[edge_id].reversed() if flips else state[edge_id]
    return tuple(moved)


def are_isomorphic(first: MultiGraph, second: MultiGraph):
    """
    Return True when both graphs have the same canonical form.
    """
    return first.n == second.n and first.m == second.m and canonical_form(first) == canonical_form(second)
