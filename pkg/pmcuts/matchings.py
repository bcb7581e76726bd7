# -*- coding: utf-8 -*-
"""
Perfect matchings of cubic graphs, the bonds they contain, and even / odd subgraph machinery.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, Optional

import numpy as np

from pmcuts import constants
from pmcuts.exceptions import BoundExceededError, ContractViolationError
from pmcuts.graphs.multigraph import Bond, MultiGraph, PartialOrientation
from pmcuts.graphs.properties import is_cubic

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerfectMatching:
    """
    A set of edge ids covering every vertex of `host` exactly once.
    """

    host: MultiGraph
    edges: FrozenSet[int]

    def sorted_edges(self):
        return tuple(sorted(self.edges))

    def complement(self):
        """
        Edge ids outside the matching; a 2-factor when the host is cubic.
        """
        return frozenset(range(self.host.m)) - self.edges


def _host(graph_or_orientation):
    return getattr(graph_or_orientation, 'host', graph_or_orientation)


def iter_matching_edge_sets(g: MultiGraph) -> Iterator[FrozenSet[int]]:
    """
    Lazily yield perfect matchings in no particular order.

    Branches on the uncovered vertex with fewest usable edges, so a vertex left with one usable edge is forced.
    """
    if g.n % 2:
        return
    usable = [tuple(edge_id for edge_id in g.incidence[vertex] if g.edges[edge_id][0] != g.edges[edge_id][1])
              for vertex in range(g.n)]
    covered = [False] * g.n
    chosen = []

    def options(vertex):
        return [edge_id for edge_id in usable[vertex] if not covered[g.other_end(edge_id, vertex)]]

    def search(remaining):
        if remaining == 0:
            yield frozenset(chosen)
            return
        best_vertex, best_options = None, None
        for vertex in range(g.n):
            if covered[vertex]:
                continue
            vertex_options = options(vertex)
            if best_options is None or len(vertex_options) < len(best_options):
                best_vertex, best_options = vertex, vertex_options
                if len(vertex_options) <= 1:
                    break
        for edge_id in best_options:
            other = g.other_end(edge_id, best_vertex)
            covered[best_vertex] = covered[other] = True
            chosen.append(edge_id)
            yield from search(remaining - 2)
            chosen.pop()
            covered[best_vertex] = covered[other] = False

    yield from search(g.n)


def enumerate_perfect_matchings(g: MultiGraph) -> Iterator[PerfectMatching]:
    """
    Yield every perfect matching of `g` once, ordered lexicographically by sorted edge ids.

    A graph with an odd number of vertices yields nothing; the condition is logged.
    """
    if g.n % 2:
        LOGGER.warning('[PMCUTS] Graph has an odd number of vertices [%s]; it has no perfect matching.', g.n)
        return
    for edges in sorted(iter_matching_edge_sets(g), key=lambda edges: sorted(edges)):
        yield PerfectMatching(host=g, edges=edges)


def count_perfect_matchings(g: MultiGraph):
    """
    Count perfect matchings by expanding along the edges of the lowest uncovered vertex.
    """
    if g.n % 2:
        return 0
    neighbours = [[g.other_end(edge_id, vertex) for edge_id in g.incidence[vertex]
                   if g.edges[edge_id][0] != g.edges[edge_id][1]] for vertex in range(g.n)]

    @lru_cache(maxsize=None)
    def count(mask):
        if mask == 0:
            return 1
        vertex = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << vertex)
        return sum(count(rest & ~(1 << other)) for other in neighbours[vertex] if rest >> other & 1)

    return count((1 << g.n) - 1)


def is_perfect_matching(g: MultiGraph, edge_ids):
    edge_ids = g.check_edges(edge_ids)
    seen = set()
    for edge_id in edge_ids:
        a, b = g.edges[edge_id]
        if a == b or a in seen or b in seen:
            return False
        seen.update((a, b))
    return len(seen) == g.n


def _matching_edges(g: MultiGraph, matching):
    edges = matching.edges if isinstance(matching, PerfectMatching) else frozenset(matching)
    if not is_perfect_matching(g, edges):
        raise ContractViolationError('Edge set {} is not a perfect matching.'.format(sorted(edges)))
    return edges


def connected_vertex_sets(neighbours, root) -> Iterator[FrozenSet[int]]:
    """
    Yield every connected vertex set containing `root` exactly once; `neighbours[v]` lists the neighbours of `v`.
    """
    def grow(current, candidates, banned):
        yield current
        candidates = list(candidates)
        banned = set(banned)
        while candidates:
            vertex = candidates.pop()
            banned.add(vertex)
            fresh = [
                other for other in neighbours[vertex]
                if other not in current and other not in banned and other not in candidates and other != vertex
            ]
            yield from grow(current | {vertex}, candidates + sorted(set(fresh)), banned)

    yield from grow(frozenset([root]), sorted(set(neighbours[root]) - {root}), {root})


def bonds_of(g: MultiGraph):
    """
    Return every bond of a connected multigraph, sides taken to contain vertex 0, ordered by size then edge ids.
    """
    if g.n < 2:
        return []
    neighbours = [sorted(set(g.neighbors(vertex)) - {vertex}) for vertex in range(g.n)]
    everything = frozenset(range(g.n))
    bonds = []
    for side in connected_vertex_sets(neighbours, 0):
        if side != everything and g.is_connected_on(everything - side):
            bonds.append(Bond(side=side, edges=g.boundary(side)))
    return sorted(bonds, key=Bond.sort_key)


def bonds_within_matching(g: MultiGraph, matching):
    """
    Return every bond of `g` contained in the perfect matching, via the bonds of `g / (E - M)`.
    """
    edges = _matching_edges(g, matching)
    quotient, vertex_map, edge_map = g.contract(frozenset(range(g.m)) - edges)
    members = {}
    for vertex, image in vertex_map.items():
        members.setdefault(image, set()).add(vertex)
    bonds = []
    for bond in bonds_of(quotient):
        side = frozenset(vertex for image in bond.side for vertex in members[image])
        bonds.append(Bond(side=side, edges=g.boundary(side)))
    return sorted(bonds, key=Bond.sort_key)


def matching_contains_cut(g: MultiGraph, matching):
    """
    Return True when the complement of the perfect matching is disconnected.
    """
    edges = _matching_edges(g, matching)
    return len(g.components(frozenset(range(g.m)) - edges)) >= 2


def directed_cut_in_matching(g: MultiGraph, orientation: PartialOrientation, matching) -> Optional[Bond]:
    """
    Return the first bond inside the matching that `orientation` directs, or None.
    """
    for bond in bonds_within_matching(g, matching):
        if bond.is_directed_by(orientation):
            return bond
    return None


def cycle_order(g: MultiGraph, edge_ids):
    """
    Return the vertices of the single cycle formed by `edge_ids`, starting at its smallest vertex.
    """
    edge_ids = set(edge_ids)
    start = min(vertex for edge_id in edge_ids for vertex in g.edges[edge_id])
    order = [start]
    previous = None
    vertex = start
    while True:
        step = next(
            edge_id for edge_id in g.incidence[vertex] if edge_id in edge_ids and edge_id != previous
        )
        vertex = g.other_end(step, vertex)
        previous = step
        if vertex == start:
            return tuple(order)
        order.append(vertex)


def hamiltonian_cycle(g: MultiGraph, required=frozenset()):
    """
    Return the edge ids of a Hamiltonian cycle using every edge of `required`, or None.

    Plain backtracking from vertex 0; a vertex whose two cycle edges are fixed must not have further
    required edges, and every unvisited vertex must keep two usable edges.
    """
    required = g.check_edges(required)
    if g.n < 2:
        return None
    if g.n == 2:
        between = g.edges_between(0, 1)
        if len(between) < 2 or len(required) > 2 or not required <= frozenset(between):
            return None
        chosen = sorted(required) + [edge_id for edge_id in between if edge_id not in required]
        return tuple(chosen[:2])
    required_at = [frozenset(edge_id for edge_id in g.incidence[vertex] if edge_id in required)
                   for vertex in range(g.n)]
    if any(len(edges) > 2 for edges in required_at):
        return None
    visited = [False] * g.n
    path_edges = []
    visited[0] = True

    def feasible(tail):
        for vertex in range(g.n):
            if visited[vertex]:
                continue
            usable = sum(
                1 for edge_id in g.incidence[vertex]
                if not visited[g.other_end(edge_id, vertex)] or g.other_end(edge_id, vertex) in (0, tail)
            )
            if usable < 2:
                return False
        return True

    def extend(tail, count, entry_edge):
        if count == g.n:
            for edge_id in g.incidence[tail]:
                if g.other_end(edge_id, tail) == 0 and edge_id != entry_edge:
                    closing = set(path_edges) | {edge_id}
                    if required <= closing and required_at[0] <= closing:
                        return tuple(path_edges) + (edge_id,)
            return None
        forced = [edge_id for edge_id in required_at[tail] if edge_id != entry_edge]
        for edge_id in g.incidence[tail]:
            if forced and edge_id not in forced:
                continue
            other = g.other_end(edge_id, tail)
            if visited[other]:
                continue
            if tail != 0 and len(required_at[tail] - {entry_edge, edge_id}) > 0:
                continue
            visited[other] = True
            path_edges.append(edge_id)
            if feasible(other):
                result = extend(other, count + 1, edge_id)
                if result is not None:
                    return result
            path_edges.pop()
            visited[other] = False
        return None

    return extend(0, 1, None)


def is_hamiltonian(g: MultiGraph):
    """
    Return the vertex sequence of a Hamiltonian cycle, or None.

    Cubic graphs are decided through a perfect matching whose complement is a single cycle.
    """
    if g.n < 2:
        return None
    if is_cubic(g):
        everything = frozenset(range(g.m))
        for edges in iter_matching_edge_sets(g):
            rest = everything - edges
            if len(g.components(rest)) == 1:
                return cycle_order(g, rest)
        return None
    edges = hamiltonian_cycle(g)
    return None if edges is None else cycle_order(g, edges)


def a_edges(g: MultiGraph):
    """
    Return the edges lying in every Hamiltonian cycle of a cubic graph.

    Equivalently, every perfect matching containing such an edge contains a cut.
    """
    if not is_cubic(g):
        raise ContractViolationError('a-edges are computed for cubic graphs only.')
    candidates = set(range(g.m))
    everything = frozenset(range(g.m))
    for edges in iter_matching_edge_sets(g):
        if len(g.components(everything - edges)) == 1:
            candidates -= edges
    return frozenset(candidates)


def min_cut_in_perfect_matching(g: MultiGraph):
    """
    Return the size of a smallest bond inside some perfect matching.

    `math.inf` when no matching contains a cut, None when `g` has no perfect matching.
    """
    best = None
    for edges in iter_matching_edge_sets(g):
        best = math.inf if best is None else best
        bonds = bonds_within_matching(g, edges)
        if bonds:
            best = min(best, len(bonds[0].edges))
    return best


def is_even_subgraph(d, edge_ids):
    """
    Return True when every vertex has even degree in `edge_ids`.
    """
    host = _host(d)
    edge_ids = host.check_edges(edge_ids)
    degree = [0] * host.n
    for edge_id in edge_ids:
        a, b = host.edges[edge_id]
        degree[a] += 1
        degree[b] += 1
    return all(value % 2 == 0 for value in degree)


def is_odd_subgraph(d, edge_ids):
    """
    Return True when every vertex has odd degree in `edge_ids`.
    """
    host = _host(d)
    edge_ids = host.check_edges(edge_ids)
    degree = [0] * host.n
    for edge_id in edge_ids:
        a, b = host.edges[edge_id]
        degree[a] += 1
        degree[b] += 1
    return all(value % 2 == 1 for value in degree)


def cycle_space_basis(g: MultiGraph):
    """
    Return the fundamental cycles of a breadth first spanning forest as edge bitmasks.
    """
    parent_edge = {}
    depth = {}
    tree = set()
    for root in range(g.n):
        if root in depth:
            continue
        depth[root] = 0
        parent_edge[root] = None
        frontier = [root]
        while frontier:
            following = []
            for vertex in frontier:
                for edge_id in g.incidence[vertex]:
                    other = g.other_end(edge_id, vertex)
                    if other not in depth:
                        depth[other] = depth[vertex] + 1
                        parent_edge[other] = edge_id
                        tree.add(edge_id)
                        following.append(other)
            frontier = following
    basis = []
    for edge_id, (a, b) in enumerate(g.edges):
        if edge_id in tree:
            continue
        mask = 1 << edge_id
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            step = parent_edge[a]
            mask ^= 1 << step
            a = g.other_end(step, a)
        basis.append(mask)
    return basis


def _strong_after_contraction(d: PartialOrientation, mask):
    """
    Return True when contracting the edges in bitmask `mask` leaves a strongly connected digraph.
    """
    host = d.host
    parent = list(range(host.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for edge_id, (a, b) in enumerate(host.edges):
        if mask >> edge_id & 1:
            root_a, root_b = find(a), find(b)
            if root_a != root_b:
                parent[root_a] = root_b
    roots = {find(vertex) for vertex in range(host.n)}
    if len(roots) == 1:
        return True
    forward = {root: [] for root in roots}
    backward = {root: [] for root in roots}
    for edge_id, tail, head in d.arcs():
        if mask >> edge_id & 1:
            continue
        tail, head = find(tail), find(head)
        if tail != head:
            forward[tail].append(head)
            backward[head].append(tail)
    start = next(iter(roots))
    for adjacency in (forward, backward):
        seen = {start}
        stack = [start]
        while stack:
            for other in adjacency[stack.pop()]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        if len(seen) != len(roots):
            return False
    return True


@dataclass(frozen=True)
class EvenSubgraphSearch:
    """
    Outcome of `even_subgraph_with_strong_contraction`.

    A missing witness means "none exists" only when `exhaustive` is set; otherwise it means "not found".
    """

    witness: Optional[FrozenSet[int]]
    exhaustive: bool
    checked: int
    dimension: int

    @property
    def found(self):
        return self.witness is not None


def _mask_edges(mask):
    edges = []
    edge_id = 0
    while mask:
        if mask & 1:
            edges.append(edge_id)
        mask >>= 1
        edge_id += 1
    return frozenset(edges)


def even_subgraph_with_strong_contraction(d: PartialOrientation, samples=None, seed=None):
    """
    Search the cycle space of a full orientation for an even subgraph `E` with `d / E` strongly connected.

    Without `samples` the whole cycle space is walked in Gray code order, starting from the empty set, and the
    dimension must not exceed `PMCUTS_CYCLE_SPACE_MAX_DIM`. With `samples`, that many uniformly random cycle
    space elements are tried.
    """
    if not d.is_full():
        raise ContractViolationError('Even subgraph search requires a full orientation.')
    basis = cycle_space_basis(d.host)
    dimension = len(basis)
    if samples is None:
        if dimension > constants.CYCLE_SPACE_MAX_DIM:
            raise BoundExceededError(
                'Cycle space dimension {} exceeds the exhaustive bound {}; request sampling explicitly.'.format(
                    dimension, constants.CYCLE_SPACE_MAX_DIM
                )
            )
        mask = 0
        if _strong_after_contraction(d, mask):
            return EvenSubgraphSearch(witness=frozenset(), exhaustive=True, checked=1, dimension=dimension)
        for counter in range(1, 1 << dimension):
            mask ^= basis[(counter & -counter).bit_length() - 1]
            if _strong_after_contraction(d, mask):
                return EvenSubgraphSearch(
                    witness=_mask_edges(mask), exhaustive=True, checked=counter + 1, dimension=dimension,
                )
        return EvenSubgraphSearch(witness=None, exhaustive=True, checked=1 << dimension, dimension=dimension)

    rng = np.random.default_rng(seed)
    for counter in range(samples):
        mask = 0
        for index in np.flatnonzero(rng.integers(0, 2, size=dimension)):
            mask ^= basis[int(index)]
        if _strong_after_contraction(d, mask):
            return EvenSubgraphSearch(
                witness=_mask_edges(mask), exhaustive=False, checked=counter + 1, dimension=dimension,
            )
    LOGGER.info('[PMCUTS] No witness among [%s] sampled even subgraphs (dimension [%s]).', samples, dimension)
    return EvenSubgraphSearch(witness=None, exhaustive=False, checked=samples, dimension=dimension)


def odd_subgraph_without_directed_cut(d: PartialOrientation, samples=None, seed=None):
    """
    Return an odd subgraph of a fully oriented cubic graph containing no directed cut, or None.
    """
    if not is_cubic(d.host):
        raise ContractViolationError('The odd subgraph reformulation needs a cubic host.')
    result = even_subgraph_with_strong_contraction(d, samples=samples, seed=seed)
    if result.witness is None:
        return None
    return frozenset(range(d.host.m)) - result.witness


def sample_odd_subgraphs(g: MultiGraph, count, seed=None):
    """
    Yield `count` uniformly random odd subgraphs of a cubic graph, as complements of random even subgraphs.
    """
    if not is_cubic(g):
        raise ContractViolationError('Odd subgraphs are sampled from cubic hosts only.')
    basis = cycle_space_basis(g)
    everything = frozenset(range(g.m))
    rng = np.random.default_rng(seed)
    for _ in range(count):
        mask = 0
        for index in np.flatnonzero(rng.integers(0, 2, size=len(basis))):
            mask ^= basis[int(index)]
        yield everything - _mask_edges(mask)
