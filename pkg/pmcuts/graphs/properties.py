# -*- coding: utf-8 -*-
"""
Structural predicates and connectivity parameters of multigraphs and partial orientations.
"""
import logging
import math
from collections import deque

import networkx as nx

from pmcuts.exceptions import ContractViolationError
from pmcuts.graphs.multigraph import Bond, MultiGraph, PartialOrientation

LOGGER = logging.getLogger(__name__)


def is_cubic(g: MultiGraph):
    """
    Return True when every vertex of a non-empty graph has degree 3.
    """
    return g.n > 0 and all(g.degree(vertex) == 3 for vertex in range(g.n))


def is_bipartite(g: MultiGraph):
    """
    Return a bipartition `(X, Y)` with vertex 0 in `X`, or None when `g` has an odd cycle.
    """
    if any(a == b for a, b in g.edges):
        return None
    colour = {}
    for start in range(g.n):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            vertex = queue.popleft()
            for other in g.neighbors(vertex):
                if other not in colour:
                    colour[other] = 1 - colour[vertex]
                    queue.append(other)
                elif colour[other] == colour[vertex]:
                    return None
    side = frozenset(vertex for vertex, value in colour.items() if value == 0)
    return side, frozenset(range(g.n)) - side


def girth(g: MultiGraph):
    """
    Return the length of a shortest cycle; parallel edges form a cycle of length 2, forests give `math.inf`.
    """
    best = math.inf
    if any(a == b for a, b in g.edges):
        return 1
    for root in range(g.n):
        distance = {root: 0}
        parent_edge = {root: None}
        queue = deque([root])
        while queue:
            vertex = queue.popleft()
            if 2 * distance[vertex] + 1 >= best:
                break
            for edge_id in g.incidence[vertex]:
                if edge_id == parent_edge[vertex]:
                    continue
                other = g.other_end(edge_id, vertex)
                if other not in distance:
                    distance[other] = distance[vertex] + 1
                    parent_edge[other] = edge_id
                    queue.append(other)
                else:
                    best = min(best, distance[vertex] + distance[other] + 1)
    return best


def digirth(d: PartialOrientation):
    """
    Return the length of a shortest directed cycle using directed edges only, `math.inf` when there is none.
    """
    heads = d.out_arcs()
    best = math.inf
    for root in range(d.host.n):
        distance = {root: 0}
        queue = deque([root])
        while queue:
            vertex = queue.popleft()
            if distance[vertex] + 1 >= best:
                break
            for head in heads[vertex]:
                if head == root:
                    best = min(best, distance[vertex] + 1)
                elif head not in distance:
                    distance[head] = distance[vertex] + 1
                    queue.append(head)
    return best


def edge_connectivity(g: MultiGraph):
    """
    Return the minimum number of edges whose deletion disconnects `g` (0 for trivial or disconnected graphs).
    """
    if g.n <= 1 or not g.is_connected():
        return 0
    cut_value, _ = nx.stoer_wagner(g.to_simple_networkx(), weight='capacity')
    return int(cut_value)


def vertex_connectivity(g: MultiGraph):
    """
    Return the vertex connectivity of the underlying simple graph.
    """
    if g.n <= 1:
        return 0
    return nx.node_connectivity(g.to_simple_networkx())


def is_three_connected(g: MultiGraph):
    """
    Return True when `g` has at least 4 vertices and stays connected after deleting any two vertices.
    """
    return g.n >= 4 and vertex_connectivity(g) >= 3


def is_strongly_connected(d: PartialOrientation):
    """
    Return True when the fully oriented graph `d` is strongly connected.
    """
    if not d.is_full():
        raise ContractViolationError('Strong connectivity is only defined for full orientations.')
    if d.host.n == 0:
        return True
    return nx.is_strongly_connected(d.to_networkx())


def is_acyclic(d: PartialOrientation):
    """
    Return True when the directed edges of `d` contain no directed cycle.
    """
    return nx.is_directed_acyclic_graph(d.to_networkx())


def _cycle_bond_upper_bound(g: MultiGraph):
    """
    Return a cyclic bond derived from a shortest cycle, or None.

    The component of `g - C` holding a cycle is connected and its complement is connected through `C`.
    """
    cycle = shortest_cycle_vertices(g)
    if cycle is None:
        return None
    rest, vertex_map, _ = g.delete_vertices(cycle)
    inverse = {new: old for old, new in vertex_map.items()}
    for component in rest.components():
        edge_count = sum(1 for a, b in rest.edges if a in component)
        if edge_count >= len(component):
            side = frozenset(inverse[vertex] for vertex in component)
            return Bond(side=side, edges=g.boundary(side))
    return None


def shortest_cycle_vertices(g: MultiGraph):
    """
    Return the vertex set of one shortest cycle of a loopless graph, or None for forests.
    """
    best = None
    for root in range(g.n):
        distance = {root: 0}
        parent = {root: (None, None)}
        queue = deque([root])
        while queue:
            vertex = queue.popleft()
            if best is not None and 2 * distance[vertex] + 1 >= len(best):
                break
            for edge_id in g.incidence[vertex]:
                if edge_id == parent[vertex][1]:
                    continue
                other = g.other_end(edge_id, vertex)
                if other not in distance:
                    distance[other] = distance[vertex] + 1
                    parent[other] = (vertex, edge_id)
                    queue.append(other)
                    continue
                length = distance[vertex] + distance[other] + 1
                if best is None or length < len(best):
                    path = []
                    for end in (vertex, other):
                        walk = [end]
                        while parent[walk[-1]][0] is not None:
                            walk.append(parent[walk[-1]][0])
                        path.append(walk)
                    cycle = set(path[0]) | set(path[1])
                    if len(cycle) == length:
                        best = frozenset(cycle)
    return best


def smallest_cyclic_bond(g: MultiGraph):
    """
    Return a smallest cyclic bond of a connected cubic graph, or None when no cyclic cut exists.

    Both sides of a bond of a cubic graph carry a cycle exactly when the bond has at most as many edges as
    either side has vertices. Bonds are grown from their smaller side `S`, rooted at `min(S)`; a branch either
    pulls the far endpoint of a boundary edge into `S` or commits every edge from `S` to that endpoint to the cut.
    """
    if not is_cubic(g):
        raise ContractViolationError('Cyclic connectivity is only defined here for cubic graphs.')
    if not g.is_connected():
        raise ContractViolationError('Cyclic connectivity requires a connected graph.')
    n = g.n
    best = _cycle_bond_upper_bound(g)
    budget = [min(len(best.edges) - 1 if best else n // 2, n // 2)]
    found = [best]
    for root in range(n):
        inside = {root}
        cut = set()
        blocked = set()

        def explore():
            pick = None
            for vertex in sorted(inside):
                for edge_id in g.incidence[vertex]:
                    if edge_id in cut:
                        continue
                    other = g.other_end(edge_id, vertex)
                    if other not in inside:
                        pick = other
                        break
                if pick is not None:
                    break
            if pick is None:
                size = len(cut)
                if (
                    0 < size <= budget[0] and size <= len(inside) and size <= n - len(inside)
                    and g.is_connected_on(set(range(n)) - inside)
                ):
                    side = frozenset(inside)
                    found[0] = Bond(side=side, edges=frozenset(cut))
                    budget[0] = size - 1
                return
            if pick > root and pick not in blocked and 2 * (len(inside) + 1) <= n:
                inside.add(pick)
                explore()
                inside.discard(pick)
            crossing = [
                edge_id for edge_id in g.incidence[pick]
                if edge_id not in cut and g.other_end(edge_id, pick) in inside
            ]
            if len(cut) + len(crossing) <= budget[0]:
                cut.update(crossing)
                blocked.add(pick)
                explore()
                blocked.discard(pick)
                cut.difference_update(crossing)

        explore()
    LOGGER.debug('[PMCUTS] Smallest cyclic bond search finished. Size: [%s]', found[0] and len(found[0].edges))
    return found[0]


def cyclic_connectivity(g: MultiGraph):
    """
    Return the size of a smallest cyclic edge cut of a connected cubic graph, `math.inf` when there is none.
    """
    bond = smallest_cyclic_bond(g)
    return math.inf if bond is None else len(bond.edges)


def find_triangle(g: MultiGraph):
    """
    Return the lexicographically first triangle `(a, b, c)` with `a < b < c`, or None.
    """
    for a in range(g.n):
        for b in sorted(other for other in set(g.neighbors(a)) if other > a):
            for c in sorted(other for other in set(g.neighbors(b)) if other > b):
                if g.edges_between(a, c):
                    return a, b, c
    return None


def find_induced_four_cycle(g: MultiGraph):
    """
    Return the first chordless 4-cycle `(u, v, w, x)` of a simple graph with `u` its smallest vertex, or None.
    """
    for u in range(g.n):
        neighbours = sorted(other for other in set(g.neighbors(u)) if other > u)
        for v in neighbours:
            for x in neighbours:
                if x == v or g.edges_between(v, x):
                    continue
                for w in sorted(set(g.neighbors(v)) & set(g.neighbors(x))):
                    if w > u and not g.edges_between(u, w):
                        return u, v, w, x
    return None
