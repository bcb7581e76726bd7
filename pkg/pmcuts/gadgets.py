# -*- coding: utf-8 -*-
"""
Constructions and reductions on (partially oriented) cubic graphs.

Every construction keeps the edge ids of its input where the input edge survives, so orientations and
certificates can be followed through the construction.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

from pmcuts.enums import EdgeState, VertexRole
from pmcuts.exceptions import ContractViolationError, WiringCollisionError
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation, PlaneEmbedding
from pmcuts.graphs.named import cube
from pmcuts.graphs.properties import edge_connectivity, is_bipartite, is_cubic, is_three_connected
from pmcuts.matchings import bonds_within_matching, hamiltonian_cycle, iter_matching_edge_sets

LOGGER = logging.getLogger(__name__)

# Internal arcs of the seven vertex replacement, vertices numbered 1..7.
RV_ARCS = ((7, 6), (7, 2), (7, 4), (4, 5), (6, 5), (1, 6), (1, 2), (2, 3), (4, 3))
RV_OUT_ATTACHMENT = 1
RV_IN_ATTACHMENTS = (3, 5)

# Vertex of the bit labelled 3-cube identified with the three arc pendants.
TILDE_APEX = 0


def _orientation_of(graph_or_orientation):
    if isinstance(graph_or_orientation, PartialOrientation):
        return graph_or_orientation
    return PartialOrientation.undirected(graph_or_orientation)


@dataclass(frozen=True)
class SplitGadget:
    """
    The graph obtained by splitting the tail `u` of an arc `(u, v)` into three pendant vertices.

    `pendants[0]` keeps the index of `u` and carries the arc; `pendants[1]` and `pendants[2]` are the new
    vertices `n` and `n + 1`. `attachments[i]` is the neighbour of `pendants[i]`; `provenance[x]` maps a vertex
    of the gadget back to the source graph. Edge ids are those of the source graph.
    """

    orientation: PartialOrientation
    source: PartialOrientation
    arc_edge: int
    pendants: Tuple[int, int, int]
    attachments: Tuple[int, int, int]
    provenance: Tuple[int, ...]

    @property
    def graph(self):
        return self.orientation.host


def split_vertex(d: PartialOrientation, arc_edge: int) -> SplitGadget:
    """
    Split the tail of the arc `arc_edge` of a partially oriented cubic graph.

    The two other edges at the head must be undirected.
    """
    host = d.host
    host.check_edge(arc_edge)
    if not is_cubic(host):
        raise ContractViolationError('Vertex splitting requires a cubic host.')
    if not is_three_connected(host):
        raise ContractViolationError('Vertex splitting requires a 3-connected host.')
    arc = d.arc(arc_edge)
    if arc is None:
        raise ContractViolationError('Edge {} is not an arc.'.format(arc_edge))
    tail, head = arc
    for edge_id in host.incidence[head]:
        if edge_id != arc_edge and d.is_directed(edge_id):
            raise ContractViolationError(
                'Edge {} at the head {} of the split arc must be undirected.'.format(edge_id, head)
            )
    others = [edge_id for edge_id in host.incidence[tail] if edge_id != arc_edge]
    new_vertex = {others[0]: host.n, others[1]: host.n + 1}
    edges = []
    for edge_id, (a, b) in enumerate(host.edges):
        if edge_id in new_vertex:
            a = new_vertex[edge_id] if a == tail else a
            b = new_vertex[edge_id] if b == tail else b
        edges.append((a, b))
    graph = MultiGraph(n=host.n + 2, edges=tuple(edges))
    pendants = (tail, host.n, host.n + 1)
    attachments = (head, host.other_end(others[0], tail), host.other_end(others[1], tail))
    return SplitGadget(
        orientation=PartialOrientation(host=graph, state=d.state),
        source=d,
        arc_edge=arc_edge,
        pendants=pendants,
        attachments=attachments,
        provenance=tuple(range(host.n)) + (tail, tail),
    )


def is_a_arc(d: PartialOrientation, edge_id: int):
    """
    Return True when `edge_id` is directed and every perfect matching containing it contains a directed bond.
    """
    if not d.is_directed(edge_id):
        return False
    for edges in iter_matching_edge_sets(d.host):
        if edge_id in edges and not any(bond.is_directed_by(d) for bond in bonds_within_matching(d.host, edges)):
            return False
    return True


@dataclass(frozen=True)
class HatWiring:
    """
    Six connecting edges between the pendants of two split gadget copies.

    Pendants are indexed 0..2 for the first copy and 3..5 for the arc reversed second copy; `states[i]` orients
    `pairs[i]` (FORWARD from the first listed pendant to the second).
    """

    pairs: Tuple[Tuple[int, int], ...]
    states: Tuple[EdgeState, ...]


def wiring_patterns():
    """
    Return the 70 two-regular simple graphs on six labelled pendants as sorted pair tuples, in sorted order.
    """
    patterns = set()
    for middle in itertools.permutations(range(1, 6)):
        if middle[0] > middle[-1]:
            continue
        cycle = (0,) + middle
        patterns.add(tuple(sorted(tuple(sorted((cycle[i], cycle[(i + 1) % 6]))) for i in range(6))))
    for a, b in itertools.combinations(range(1, 6), 2):
        first = (0, a, b)
        second = tuple(vertex for vertex in range(6) if vertex not in first)
        pairs = [(first[0], first[1]), (first[0], first[2]), (first[1], first[2]),
                 (second[0], second[1]), (second[0], second[2]), (second[1], second[2])]
        patterns.add(tuple(sorted(pairs)))
    return sorted(patterns)


def _hat_base(sg: SplitGadget):
    """
    Return `(edges, states, pendant_vertices, n)` of the two copies without connecting edges.
    """
    graph = sg.graph
    size = graph.n
    reversed_copy = sg.orientation.reversed()
    edges = list(graph.edges) + [(a + size, b + size) for a, b in graph.edges]
    states = list(sg.orientation.state) + list(reversed_copy.state)
    pendant_vertices = list(sg.pendants) + [vertex + size for vertex in sg.pendants]
    return edges, states, pendant_vertices, 2 * size


def _check_wiring(pairs):
    if len(pairs) != 6:
        raise WiringCollisionError('A hat wiring needs 6 connecting edges, got {}.'.format(len(pairs)))
    degree = [0] * 6
    seen = set()
    for a, b in pairs:
        if a == b:
            raise WiringCollisionError('Connecting edge {} is a loop.'.format((a, b)))
        key = (min(a, b), max(a, b))
        if key in seen:
            raise WiringCollisionError('Connecting edge {} is repeated.'.format(key))
        seen.add(key)
        degree[a] += 1
        degree[b] += 1
    if degree != [2] * 6:
        raise WiringCollisionError('Every pendant needs exactly two connecting edges, degrees are {}.'.format(degree))


def hat_construction(sg: SplitGadget, wiring: HatWiring) -> PartialOrientation:
    """
    Join the split gadget and its arc reversed copy through `wiring`; the result has `2 (n + 2)` vertices.

    Copy one keeps the gadget's vertex and edge ids, copy two is shifted by the gadget's vertex and edge
    counts, and the connecting edges come last.
    """
    _check_wiring(wiring.pairs)
    edges, states, pendant_vertices, n = _hat_base(sg)
    for (a, b), state in zip(wiring.pairs, wiring.states):
        edges.append((pendant_vertices[a], pendant_vertices[b]))
        states.append(EdgeState(state))
    graph = MultiGraph(n=n, edges=tuple(edges))
    if not graph.is_simple():
        raise WiringCollisionError('The wiring creates parallel edges.')
    return PartialOrientation(host=graph, state=tuple(states))


def reconstruct_hat_wiring(sg: SplitGadget):
    """
    Search wirings and connecting edge states until every perfect matching of the hat graph has a directed cut.

    Returns `(HatWiring, PartialOrientation)` for the first verified wiring in pattern order, or None when all
    70 patterns and 3^6 state assignments fail. The split arc must be an a-arc of the gadget's source.
    """
    if not is_a_arc(sg.source, sg.arc_edge):
        raise ContractViolationError('The split arc is not an a-arc of the source orientation.')
    edges, states, pendant_vertices, n = _hat_base(sg)
    wiring_ids = range(len(edges), len(edges) + 6)
    values = (EdgeState.UNDIRECTED, EdgeState.FORWARD, EdgeState.BACKWARD)
    for pattern in wiring_patterns():
        graph = MultiGraph(
            n=n,
            edges=tuple(edges) + tuple((pendant_vertices[a], pendant_vertices[b]) for a, b in pattern),
        )
        if not graph.is_simple() or not is_cubic(graph) or not is_three_connected(graph):
            continue
        base = PartialOrientation(host=graph, state=tuple(states) + (EdgeState.UNDIRECTED,) * 6)
        open_matchings = []
        for matching in iter_matching_edge_sets(graph):
            bonds = bonds_within_matching(graph, matching)
            if any(bond.is_directed_by(base) for bond in bonds):
                continue
            usable = [bond for bond in bonds if bond.edges & frozenset(wiring_ids)]
            if not usable:
                break
            open_matchings.append(usable)
        else:
            for assignment in itertools.product(values, repeat=6):
                orientation = PartialOrientation(host=graph, state=tuple(states) + assignment)
                if all(any(bond.is_directed_by(orientation) for bond in bonds) for bonds in open_matchings):
                    LOGGER.info('[PMCUTS] Hat wiring found. Pattern: [%s], states: [%s]', pattern, assignment)
                    return HatWiring(pairs=pattern, states=assignment), orientation
        LOGGER.debug('[PMCUTS] Hat wiring pattern %s rejected.', pattern)
    return None


@dataclass(frozen=True)
class TildeGraph:
    """
    Result of `tilde_construction`: the orientation, the apex `y` and, per copy, the gadget to result vertex map.
    """

    orientation: PartialOrientation
    apex: int
    copies: Tuple[Dict[int, int], ...]


def tilde_construction(sg: SplitGadget) -> TildeGraph:
    """
    Replace the three neighbours of a vertex `y` of the 3-cube by copies of the split gadget.

    Each copy's arc pendant is identified with `y` and its other two pendants with the remaining neighbours of
    the replaced cube vertex (smaller neighbour first). The result has `3 n + 2` vertices.
    """
    q3 = cube()
    replaced = sorted(q3.neighbors(TILDE_APEX))
    survivors = [vertex for vertex in range(q3.n) if vertex not in replaced]
    index = {vertex: position for position, vertex in enumerate(survivors)}
    edges = []
    states = []
    for a, b in q3.edges:
        if a in index and b in index:
            edges.append((index[a], index[b]))
            states.append(EdgeState.UNDIRECTED)
    next_vertex = len(survivors)
    copies = []
    gadget = sg.graph
    pendant_set = set(sg.pendants)
    for vertex in replaced:
        others = sorted(other for other in q3.neighbors(vertex) if other != TILDE_APEX)
        mapping = {
            sg.pendants[0]: index[TILDE_APEX],
            sg.pendants[1]: index[others[0]],
            sg.pendants[2]: index[others[1]],
        }
        for gadget_vertex in range(gadget.n):
            if gadget_vertex not in pendant_set:
                mapping[gadget_vertex] = next_vertex
                next_vertex += 1
        for (a, b), state in zip(gadget.edges, sg.orientation.state):
            edges.append((mapping[a], mapping[b]))
            states.append(state)
        copies.append(mapping)
    graph = MultiGraph(n=next_vertex, edges=tuple(edges))
    return TildeGraph(
        orientation=PartialOrientation(host=graph, state=tuple(states)), apex=index[TILDE_APEX], copies=tuple(copies),
    )


@dataclass(frozen=True)
class OrientationCompletion:
    """
    A full orientation with the number of vertices that are neither sinks nor sources.
    """

    orientation: PartialOrientation
    internal_count: int


def orient_extremal_sinks_sources(d: PartialOrientation) -> OrientationCompletion:
    """
    Complete `d` so that as many vertices as possible are sinks or sources.

    Branch and bound over sink / source / neither labels; two labelled neighbours must get opposite labels and
    labels must agree with the fixed arcs. Remaining undirected edges are directed forward.
    """
    host = d.host
    if not is_cubic(host):
        raise ContractViolationError('Sink / source completion requires a cubic host.')
    eligible = []
    for vertex in range(host.n):
        roles = []
        if d.in_degree(vertex) == 0:
            roles.append(VertexRole.SOURCE)
        if d.out_degree(vertex) == 0:
            roles.append(VertexRole.SINK)
        eligible.append(roles)
    order = [vertex for vertex in range(host.n) if eligible[vertex]]
    labels = {}
    best = {'count': -1, 'labels': {}}

    def fits(vertex, role):
        return all(labels.get(other) != role for other in host.neighbors(vertex))

    def search(position):
        if len(labels) + len(order) - position <= best['count']:
            return
        if position == len(order):
            best['count'], best['labels'] = len(labels), dict(labels)
            return
        vertex = order[position]
        for role in eligible[vertex]:
            if fits(vertex, role):
                labels[vertex] = role
                search(position + 1)
                del labels[vertex]
        search(position + 1)

    search(0)
    updates = {}
    for edge_id, (a, b) in enumerate(host.edges):
        if d.is_directed(edge_id):
            continue
        if best['labels'].get(a) == VertexRole.SOURCE or best['labels'].get(b) == VertexRole.SINK:
            updates[edge_id] = EdgeState.FORWARD
        elif best['labels'].get(a) == VertexRole.SINK or best['labels'].get(b) == VertexRole.SOURCE:
            updates[edge_id] = EdgeState.BACKWARD
        else:
            updates[edge_id] = EdgeState.FORWARD
    orientation = d.with_states(updates)
    internal = sum(1 for vertex in range(host.n) if orientation.role(vertex) == VertexRole.INTERNAL)
    LOGGER.info('[PMCUTS] Sink / source completion finished. Internal vertices: [%s]', internal)
    return OrientationCompletion(orientation=orientation, internal_count=internal)


@dataclass(frozen=True)
class DPlusGraph:
    """
    Result of `dplus`: `gadgets[v]` lists the vertices `v1..v7` replacing `v`; `suspension[v]` the ids of the
    out-attached edge followed by the two in-attached edges (reversed roles for out-degree 2 vertices).
    """

    orientation: PartialOrientation
    gadgets: Dict[int, Tuple[int, ...]]
    suspension: Dict[int, Tuple[int, int, int]]


def dplus(d: PartialOrientation) -> DPlusGraph:
    """
    Replace every vertex of out-degree 1 or 2 of a fully oriented cubic graph by the seven vertex gadget.

    Out-degree 2 vertices get the arc reversed gadget. The original edges keep their ids and the gadget arcs
    are appended, so the result has `n + 6 k` vertices for `k` replaced vertices.
    """
    host = d.host
    if not d.is_full():
        raise ContractViolationError('D+ requires a full orientation.')
    if not is_cubic(host):
        raise ContractViolationError('D+ requires a cubic host.')
    next_vertex = host.n
    attach = {}
    gadgets = {}
    suspension = {}
    extra_edges = []
    extra_states = []
    for vertex in range(host.n):
        out_degree = d.out_degree(vertex)
        if out_degree in (0, 3):
            continue
        flipped = out_degree == 2
        labels = {1: vertex}
        for label in range(2, 8):
            labels[label] = next_vertex
            next_vertex += 1
        gadgets[vertex] = tuple(labels[label] for label in range(1, 8))
        leaving = [edge_id for edge_id in host.incidence[vertex] if d.arc(edge_id)[0] == vertex]
        entering = [edge_id for edge_id in host.incidence[vertex] if d.arc(edge_id)[1] == vertex]
        single, pair = (entering, leaving) if flipped else (leaving, entering)
        suspension[vertex] = (single[0], pair[0], pair[1])
        attach[(pair[0], vertex)] = labels[RV_IN_ATTACHMENTS[0]]
        attach[(pair[1], vertex)] = labels[RV_IN_ATTACHMENTS[1]]
        for tail, head in RV_ARCS:
            if flipped:
                tail, head = head, tail
            extra_edges.append((labels[tail], labels[head]))
            extra_states.append(EdgeState.FORWARD)
    edges = [
        (attach.get((edge_id, a), a), attach.get((edge_id, b), b)) for edge_id, (a, b) in enumerate(host.edges)
    ]
    graph = MultiGraph(n=next_vertex, edges=tuple(edges + extra_edges))
    orientation = PartialOrientation(host=graph, state=d.state + tuple(extra_states))
    LOGGER.info('[PMCUTS] D+ built. Replaced vertices: [%s], order: [%s]', len(gadgets), graph.n)
    return DPlusGraph(orientation=orientation, gadgets=gadgets, suspension=suspension)


def dplus_parity_holds(result: DPlusGraph, odd_subgraph: FrozenSet[int]):
    """
    Return True when every gadget has an odd number of its suspension arcs in `odd_subgraph`.
    """
    return all(sum(1 for edge_id in edges if edge_id in odd_subgraph) % 2 == 1 for edges in result.suspension.values())


@dataclass(frozen=True)
class CubicExpansion:
    """
    Result of `cubic_expansion`: original edges keep their ids `0..m-1`, cycle edges follow.
    """

    orientation: PartialOrientation
    cycles: Dict[int, Tuple[int, ...]]
    original_edge_count: int

    def pullback(self, edge_ids):
        """
        Restrict an edge set of the expansion to the original edges.
        """
        return frozenset(edge_id for edge_id in edge_ids if edge_id < self.original_edge_count)


def cubic_expansion(d, embedding: Optional[PlaneEmbedding] = None) -> CubicExpansion:
    """
    Replace every vertex `v` by an undirected cycle of length `deg(v)`, one cycle vertex per incident edge.

    With an embedding, cycle vertices follow the rotation at `v` so planarity is kept.
    """
    d = _orientation_of(d)
    host = d.host
    if any(a == b for a, b in host.edges):
        raise ContractViolationError('Cubic expansion does not accept loops.')
    low = [vertex for vertex in range(host.n) if host.degree(vertex) < 3]
    if low:
        raise ContractViolationError('Vertices {} have degree below 3.'.format(low))
    connectivity = edge_connectivity(host)
    if connectivity < 3:
        raise ContractViolationError(
            'Cubic expansion requires a 3-edge-connected graph, got edge connectivity {}.'.format(connectivity)
        )
    position = {}
    cycles = {}
    next_vertex = 0
    for vertex in range(host.n):
        if embedding is not None:
            incident = [dart >> 1 for dart in embedding.rotation[vertex]]
        else:
            incident = list(host.incidence[vertex])
        cycles[vertex] = tuple(range(next_vertex, next_vertex + len(incident)))
        for offset, edge_id in enumerate(incident):
            position[(edge_id, vertex)] = next_vertex + offset
        next_vertex += len(incident)
    edges = [(position[(edge_id, a)], position[(edge_id, b)]) for edge_id, (a, b) in enumerate(host.edges)]
    for ring in cycles.values():
        edges.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
    graph = MultiGraph(n=next_vertex, edges=tuple(edges))
    states = d.state + (EdgeState.UNDIRECTED,) * (graph.m - host.m)
    return CubicExpansion(
        orientation=PartialOrientation(host=graph, state=states), cycles=cycles, original_edge_count=host.m,
    )


def _triangle_edges(g: MultiGraph, triangle):
    a, b, c = triangle
    if len({a, b, c}) != 3:
        raise ContractViolationError('Triangle {} has repeated vertices.'.format(triangle))
    edges = []
    for x, y in ((a, b), (b, c), (a, c)):
        between = g.edges_between(x, y)
        if len(between) != 1:
            raise ContractViolationError('{} is not a triangle: {} and {} are not joined by one edge.'.format(
                triangle, x, y
            ))
        edges.append(between[0])
    return edges


@dataclass(frozen=True)
class TriangleContraction:
    """
    Result of `contract_triangle` with the maps from the original graph.
    """

    orientation: PartialOrientation
    triangle: Tuple[int, int, int]
    vertex_map: Dict[int, int]
    edge_map: Dict[int, int]

    @property
    def graph(self):
        return self.orientation.host


def contract_triangle(d, triangle) -> TriangleContraction:
    """
    Contract a triangle of a cubic graph into one vertex, carrying the orientation on surviving edges.
    """
    d = _orientation_of(d)
    if not is_cubic(d.host):
        raise ContractViolationError('Triangle contraction requires a cubic host.')
    triangle = tuple(triangle)
    edges = _triangle_edges(d.host, triangle)
    orientation, vertex_map, edge_map = d.contract(edges)
    return TriangleContraction(orientation=orientation, triangle=triangle, vertex_map=vertex_map, edge_map=edge_map)


def lift_through_triangle(g: MultiGraph, contraction: TriangleContraction, cycle_edges):
    """
    Turn a Hamiltonian cycle of the contracted graph into a Hamiltonian cycle of `g` (edge ids of `g`).
    """
    inverse = {new: old for old, new in contraction.edge_map.items()}
    lifted = {inverse[edge_id] for edge_id in cycle_edges}
    triangle = set(contraction.triangle)
    ends = [vertex for edge_id in lifted for vertex in g.edges[edge_id] if vertex in triangle]
    middle = (triangle - set(ends)).pop()
    for end in ends:
        lifted.add(g.edges_between(end, middle)[0])
    return tuple(sorted(lifted))


@dataclass(frozen=True)
class FourCycleReduction:
    """
    One of the two reductions of an induced 4-cycle; `added` are the ids of the two new edges in `graph`.
    """

    graph: MultiGraph
    removed: Tuple[int, int]
    kept: Tuple[int, int]
    vertex_map: Dict[int, int]
    edge_map: Dict[int, int]
    added: Tuple[int, int]


def _outside_neighbour(g: MultiGraph, vertex, cycle):
    outside = [other for other in g.neighbors(vertex) if other not in cycle]
    if len(outside) != 1:
        raise ContractViolationError('Vertex {} of the 4-cycle needs exactly one outside neighbour.'.format(vertex))
    return outside[0]


def _reduce_four_cycle(g: MultiGraph, a, b, c, d, outside):
    """
    Delete `c, d` and add the edges `{d', b}` and `{c', a}`.
    """
    graph, vertex_map, edge_map = g.delete_vertices((c, d))
    first = (vertex_map[outside[d]], vertex_map[b])
    second = (vertex_map[outside[c]], vertex_map[a])
    reduced = MultiGraph(n=graph.n, edges=graph.edges + (first, second))
    return FourCycleReduction(
        graph=reduced, removed=(c, d), kept=(a, b), vertex_map=vertex_map, edge_map=edge_map,
        added=(graph.m, graph.m + 1),
    )


def c4_reduction(g: MultiGraph, cycle):
    """
    Return the reductions `(G_uv, G_vw)` of an induced 4-cycle `(u, v, w, x)` of a cubic graph.

    `G_uv` deletes `w, x` and adds `{x', v}` and `{w', u}`; `G_vw` is the same for the rotated cycle.
    """
    if not is_cubic(g):
        raise ContractViolationError('The 4-cycle reduction requires a cubic host.')
    if is_bipartite(g) is None:
        raise ContractViolationError('The 4-cycle reduction requires a bipartite host.')
    if not is_three_connected(g):
        raise ContractViolationError('The 4-cycle reduction requires a 3-connected host.')
    u, v, w, x = cycle
    members = set(cycle)
    if len(members) != 4:
        raise ContractViolationError('Cycle {} has repeated vertices.'.format(cycle))
    for first, second in ((u, v), (v, w), (w, x), (x, u)):
        if len(g.edges_between(first, second)) != 1:
            raise ContractViolationError('{} and {} are not joined by a single edge.'.format(first, second))
    if g.edges_between(u, w) or g.edges_between(v, x):
        raise ContractViolationError('Cycle {} has a chord.'.format(cycle))
    outside = {vertex: _outside_neighbour(g, vertex, members) for vertex in cycle}
    if len(set(outside.values())) != 4:
        raise ContractViolationError(
            'Outside neighbours {} are not distinct; the reduction would create a parallel edge.'.format(outside)
        )
    return _reduce_four_cycle(g, u, v, w, x, outside), _reduce_four_cycle(g, v, w, x, u, outside)


def lift_hamiltonian_cycle(g: MultiGraph, reduction: FourCycleReduction, cycle_edges):
    """
    Pull a Hamiltonian cycle of a 4-cycle reduction back to `g`, returning edge ids of `g` or None.

    The cycle's edges away from the kept cycle vertices are required; the backtracker reroutes around the cycle.
    """
    inverse = {new: old for old, new in reduction.edge_map.items()}
    kept = set(reduction.kept)
    required = set()
    for edge_id in cycle_edges:
        if edge_id in reduction.added:
            continue
        old = inverse[edge_id]
        if not set(g.edges[old]) & kept:
            required.add(old)
    return hamiltonian_cycle(g, required=frozenset(required))
