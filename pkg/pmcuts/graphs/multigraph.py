# -*- coding: utf-8 -*-
"""
Immutable graph values shared by every pmcuts module.

Edges are identified by their position in `MultiGraph.edges`; every per-edge state (orientation, matching
membership, bond membership) is keyed by that edge id so that it survives contraction through edge maps.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

import networkx as nx

from pmcuts.enums import EdgeState, VertexRole
from pmcuts.exceptions import ContractViolationError, UnknownEdgeError


@dataclass(frozen=True)
class MultiGraph:
    """
    Undirected multigraph on vertices `0..n-1` with stable edge ids `0..m-1`.

    `edges[e]` is the pair `(a, b)` of endpoints of edge `e`. Parallel edges are allowed, loops only
    when `loops_allowed` is set.
    """

    n: int
    edges: Tuple[Tuple[int, int], ...] = ()
    loops_allowed: bool = False

    def __post_init__(self):
        """
        Validate endpoints.
        """
        object.__setattr__(self, 'edges', tuple((int(a), int(b)) for a, b in self.edges))
        for edge_id, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ContractViolationError(
                    'Edge {} has endpoint out of range for {} vertices.'.format(edge_id, self.n)
                )
            if a == b and not self.loops_allowed:
                raise ContractViolationError('Edge {} is a loop.'.format(edge_id))

    @classmethod
    def from_edges(cls, n, edges, loops_allowed=False):
        """
        Build a multigraph from an iterable of endpoint pairs.
        """
        return cls(n=n, edges=tuple(edges), loops_allowed=loops_allowed)

    @classmethod
    def from_networkx(cls, graph):
        """
        Build a simple graph from a networkx graph, ids assigned lexicographically by (min, max) endpoint.

        Nodes are relabelled in their sorted order.
        """
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        pairs = sorted(
            tuple(sorted((index[a], index[b]))) for a, b in graph.edges()
        )
        return cls(n=len(nodes), edges=tuple(pairs))

    @property
    def m(self):
        """
        Number of edges.
        """
        return len(self.edges)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """
        For each vertex, the ids of its incident edges in increasing order (a loop is listed twice).
        """
        incident = [[] for _ in range(self.n)]
        for edge_id, (a, b) in enumerate(self.edges):
            incident[a].append(edge_id)
            incident[b].append(edge_id)
        return tuple(tuple(sorted(ids)) for ids in incident)

    def check_edge(self, edge_id):
        """
        Raise `UnknownEdgeError` unless `edge_id` is an edge of this graph.
        """
        if not isinstance(edge_id, int) or not 0 <= edge_id < self.m:
            raise UnknownEdgeError('Unknown edge id {} for a graph with {} edges.'.format(edge_id, self.m))

    def check_edges(self, edge_ids):
        """
        Validate every id of `edge_ids` and return them as a frozenset.
        """
        edge_ids = frozenset(edge_ids)
        for edge_id in edge_ids:
            self.check_edge(edge_id)
        return edge_ids

    def degree(self, vertex):
        return len(self.incidence[vertex])

    def other_end(self, edge_id, vertex):
        """
        Return the endpoint of `edge_id` opposite to `vertex`.
        """
        a, b = self.edges[edge_id]
        return b if a == vertex else a

    def neighbors(self, vertex):
        """
        Return the neighbours of `vertex`, with repetitions for parallel edges.
        """
        return tuple(self.other_end(edge_id, vertex) for edge_id in self.incidence[vertex])

    def edges_between(self, u, v):
        """
        Return the ids of all edges joining `u` and `v`.
        """
        return tuple(edge_id for edge_id in self.incidence[u] if self.other_end(edge_id, u) == v)

    def is_simple(self):
        """
        Return True when the graph has neither loops nor parallel edges.
        """
        seen = set()
        for a, b in self.edges:
            key = (min(a, b), max(a, b))
            if a == b or key in seen:
                return False
            seen.add(key)
        return True

    def boundary(self, side: Iterable[int]) -> FrozenSet[int]:
        """
        Return the edge cut delta(side): ids of edges with exactly one endpoint in `side`.
        """
        side = frozenset(side)
        return frozenset(
            edge_id for edge_id, (a, b) in enumerate(self.edges) if (a in side) != (b in side)
        )

    def is_connected_on(self, vertices: Iterable[int], removed_edges: FrozenSet[int] = frozenset()):
        """
        Return True when `vertices` induce a connected subgraph (ignoring `removed_edges`).
        """
        vertices = set(vertices)
        if not vertices:
            return True
        start = next(iter(vertices))
        seen = {start}
        stack = [start]
        while stack:
            vertex = stack.pop()
            for edge_id in self.incidence[vertex]:
                if edge_id in removed_edges:
                    continue
                other = self.other_end(edge_id, vertex)
                if other in vertices and other not in seen:
                    seen.add(other)
                    stack.append(other)
        return seen == vertices

    def is_connected(self):
        return self.is_connected_on(range(self.n))

    def components(self, edge_ids: Optional[Iterable[int]] = None):
        """
        Return the vertex sets of the connected components of the spanning subgraph on `edge_ids`.

        All edges are used when `edge_ids` is None. Components are ordered by their smallest vertex.
        """
        edge_ids = range(self.m) if edge_ids is None else edge_ids
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for edge_id in edge_ids:
            a, b = self.edges[edge_id]
            root_a, root_b = find(a), find(b)
            if root_a != root_b:
                parent[max(root_a, root_b)] = min(root_a, root_b)
        groups: Dict[int, list] = {}
        for vertex in range(self.n):
            groups.setdefault(find(vertex), []).append(vertex)
        return [frozenset(group) for _, group in sorted(groups.items())]

    def contract(self, edge_ids: Iterable[int]):
        """
        Contract the edges `edge_ids`.

        Returns `(graph, vertex_map, edge_map)`: new vertices are numbered by the smallest old vertex they
        contain, surviving edges keep their relative order, loops created by the contraction are discarded
        and absent from `edge_map`. Surviving edges keep the orientation of their endpoints, i.e. old
        `(a, b)` becomes `(vertex_map[a], vertex_map[b])`.
        """
        edge_ids = self.check_edges(edge_ids)
        groups = self.components(edge_ids)
        vertex_map = {}
        for new_vertex, group in enumerate(groups):
            for vertex in group:
                vertex_map[vertex] = new_vertex
        new_edges = []
        edge_map = {}
        for edge_id, (a, b) in enumerate(self.edges):
            if edge_id in edge_ids or vertex_map[a] == vertex_map[b]:
                continue
            edge_map[edge_id] = len(new_edges)
            new_edges.append((vertex_map[a], vertex_map[b]))
        return MultiGraph(n=len(groups), edges=tuple(new_edges)), vertex_map, edge_map

    def delete_vertices(self, vertices: Iterable[int]):
        """
        Delete `vertices` and their incident edges.

        Returns `(graph, vertex_map, edge_map)` with remaining vertices and edges renumbered in order.
        """
        removed = frozenset(vertices)
        vertex_map = {}
        for vertex in range(self.n):
            if vertex not in removed:
                vertex_map[vertex] = len(vertex_map)
        new_edges = []
        edge_map = {}
        for edge_id, (a, b) in enumerate(self.edges):
            if a in removed or b in removed:
                continue
            edge_map[edge_id] = len(new_edges)
            new_edges.append((vertex_map[a], vertex_map[b]))
        return MultiGraph(n=len(vertex_map), edges=tuple(new_edges)), vertex_map, edge_map

    def delete_edges(self, edge_ids: Iterable[int]):
        """
        Delete the edges `edge_ids`, returning `(graph, edge_map)`.
        """
        edge_ids = self.check_edges(edge_ids)
        edge_map = {}
        new_edges = []
        for edge_id, pair in enumerate(self.edges):
            if edge_id not in edge_ids:
                edge_map[edge_id] = len(new_edges)
                new_edges.append(pair)
        return MultiGraph(n=self.n, edges=tuple(new_edges), loops_allowed=self.loops_allowed), edge_map

    def relabel(self, permutation):
        """
        Return the graph with vertex `v` renamed `permutation[v]`; edge ids are kept.
        """
        return MultiGraph(
            n=self.n,
            edges=tuple((permutation[a], permutation[b]) for a, b in self.edges),
            loops_allowed=self.loops_allowed,
        )

    def to_networkx(self):
        """
        Return a `networkx.MultiGraph` whose edge keys are the edge ids.
        """
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        for edge_id, (a, b) in enumerate(self.edges):
            graph.add_edge(a, b, key=edge_id)
        return graph

    def to_simple_networkx(self):
        """
        Return a simple `networkx.Graph` with an edge `capacity` equal to the multiplicity; loops dropped.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for a, b in self.edges:
            if a == b:
                continue
            if graph.has_edge(a, b):
                graph[a][b]['capacity'] += 1
            else:
                graph.add_edge(a, b, capacity=1)
        return graph


@dataclass(frozen=True)
class PartialOrientation:
    """
    Per-edge direction state layered over a `MultiGraph`.
    """

    host: MultiGraph
    state: Tuple[EdgeState, ...] = None

    def __post_init__(self):
        """
        Default to all edges undirected and validate the state length.
        """
        state = self.state
        if state is None:
            state = (EdgeState.UNDIRECTED,) * self.host.m
        state = tuple(EdgeState(value) for value in state)
        if len(state) != self.host.m:
            raise ContractViolationError(
                'Orientation has {} states for {} edges.'.format(len(state), self.host.m)
            )
        object.__setattr__(self, 'state', state)

    @classmethod
    def undirected(cls, host):
        return cls(host=host)

    @classmethod
    def from_arcs(cls, host, arcs: Dict[int, Tuple[int, int]]):
        """
        Build an orientation from `{edge_id: (tail, head)}`.
        """
        state = [EdgeState.UNDIRECTED] * host.m
        for edge_id, (tail, head) in arcs.items():
            host.check_edge(edge_id)
            a, b = host.edges[edge_id]
            if (tail, head) == (a, b):
                state[edge_id] = EdgeState.FORWARD
            elif (tail, head) == (b, a):
                state[edge_id] = EdgeState.BACKWARD
            else:
                raise ContractViolationError('Arc {} is not edge {}.'.format((tail, head), edge_id))
        return cls(host=host, state=tuple(state))

    def is_full(self):
        """
        Return True when no edge is undirected.
        """
        return EdgeState.UNDIRECTED not in self.state

    def is_directed(self, edge_id):
        return self.state[edge_id] != EdgeState.UNDIRECTED

    def arc(self, edge_id):
        """
        Return `(tail, head)` of a directed edge, None for an undirected one.
        """
        a, b = self.host.edges[edge_id]
        state = self.state[edge_id]
        if state == EdgeState.FORWARD:
            return a, b
        if state == EdgeState.BACKWARD:
            return b, a
        return None

    def arcs(self):
        """
        Yield `(edge_id, tail, head)` for every directed edge.
        """
        for edge_id in range(self.host.m):
            arc = self.arc(edge_id)
            if arc is not None:
                yield edge_id, arc[0], arc[1]

    def directed_edges(self):
        return frozenset(edge_id for edge_id, state in enumerate(self.state) if state != EdgeState.UNDIRECTED)

    def out_degree(self, vertex):
        return sum(1 for edge_id in self.host.incidence[vertex] if self._end(edge_id, 0) == vertex)

    def in_degree(self, vertex):
        return sum(1 for edge_id in self.host.incidence[vertex] if self._end(edge_id, 1) == vertex)

    def _end(self, edge_id, index):
        arc = self.arc(edge_id)
        return None if arc is None else arc[index]

    def role(self, vertex):
        """
        Return the `VertexRole` of `vertex` in a full orientation.
        """
        out_degree = self.out_degree(vertex)
        if out_degree == self.host.degree(vertex):
            return VertexRole.SOURCE
        if out_degree == 0:
            return VertexRole.SINK
        return VertexRole.INTERNAL

    def extends(self, other):
        """
        Return True when this orientation agrees with `other` on every edge `other` directs.
        """
        if other.host != self.host:
            return False
        return all(
            theirs == EdgeState.UNDIRECTED or mine == theirs for mine, theirs in zip(self.state, other.state)
        )

    def with_states(self, updates: Dict[int, EdgeState]):
        """
        Return a copy with the states of `updates` applied.
        """
        state = list(self.state)
        for edge_id, value in updates.items():
            self.host.check_edge(edge_id)
            state[edge_id] = EdgeState(value)
        return PartialOrientation(host=self.host, state=tuple(state))

    def reversed(self):
        """
        Return the orientation with every arc reversed.
        """
        return PartialOrientation(host=self.host, state=tuple(value.reversed() for value in self.state))

    def transport(self, host, edge_map):
        """
        Carry this orientation to `host` through `edge_map` (old edge id -> new edge id).

        The new edge must list the images of the old endpoints in the same order, which `contract`,
        `delete_vertices` and `delete_edges` guarantee. Edges of `host` without a preimage are undirected.
        """
        state = [EdgeState.UNDIRECTED] * host.m
        for old_id, new_id in edge_map.items():
            state[new_id] = self.state[old_id]
        return PartialOrientation(host=host, state=tuple(state))

    def contract(self, edge_ids):
        """
        Contract `edge_ids` in the host and carry the orientation over; returns `(orientation, vertex_map, edge_map)`.
        """
        graph, vertex_map, edge_map = self.host.contract(edge_ids)
        return self.transport(graph, edge_map), vertex_map, edge_map

    def to_networkx(self):
        """
        Return a `networkx.MultiDiGraph` of the directed edges only, keyed by edge id.
        """
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.host.n))
        for edge_id, tail, head in self.arcs():
            graph.add_edge(tail, head, key=edge_id)
        return graph

    def out_arcs(self):
        """
        For each vertex, the heads of its out-arcs; used by the hot reachability loops.
        """
        heads = [[] for _ in range(self.host.n)]
        for _, tail, head in self.arcs():
            heads[tail].append(head)
        return heads


@dataclass(frozen=True)
class Bond:
    """
    A minimal edge cut `delta(side)`; both `side` and its complement induce connected subgraphs.
    """

    side: FrozenSet[int]
    edges: FrozenSet[int]

    def sort_key(self):
        return len(self.edges), tuple(sorted(self.edges))

    def is_directed_by(self, orientation: PartialOrientation):
        """
        Return True when every cut edge is an arc and all arcs leave `side`, or all arcs enter `side`.
        """
        leaving = entering = 0
        for edge_id in self.edges:
            arc = orientation.arc(edge_id)
            if arc is None:
                return False
            if arc[0] in self.side:
                leaving += 1
            else:
                entering += 1
        return leaving == 0 or entering == 0

    def direction_states(self, host: MultiGraph, outward=True):
        """
        Return `{edge_id: EdgeState}` directing every cut edge out of `side` (or into it).
        """
        states = {}
        for edge_id in self.edges:
            a, _ = host.edges[edge_id]
            a_inside = a in self.side
            states[edge_id] = EdgeState.FORWARD if a_inside == outward else EdgeState.BACKWARD
        return states


@dataclass(frozen=True)
class PlaneEmbedding:
    """
    Rotation system of a `MultiGraph`.

    A dart `2 * e` sits at endpoint `a` of edge `e` and `2 * e + 1` at endpoint `b`. `rotation[v]` lists the
    darts at `v` in counterclockwise order.
    """

    host: MultiGraph
    rotation: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'rotation', tuple(tuple(darts) for darts in self.rotation))

    @staticmethod
    def dart_vertex(host, dart):
        """
        Return the vertex at which `dart` sits.
        """
        return host.edges[dart >> 1][dart & 1]

    @cached_property
    def successor(self) -> Dict[int, int]:
        """
        Map every dart to the next dart counterclockwise around its vertex.
        """
        successor = {}
        for darts in self.rotation:
            for position, dart in enumerate(darts):
                successor[dart] = darts[(position + 1) % len(darts)]
        return successor
