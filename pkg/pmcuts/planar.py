# -*- coding: utf-8 -*-
"""
Face tracing, directed plane duals and the acyclic partition checkers that duality connects.

Darts: dart `2 e` sits at the first stored endpoint of edge `e`, dart `2 e + 1` at the second. The face
traced from a dart lies to its right, so the face to the left of an arc is the face traced from its head dart.
A dual arc runs from the face left of its primal arc to the face on its right.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
import numpy as np

from pmcuts import constants
from pmcuts.exceptions import BoundExceededError, ContractViolationError, InvalidEmbeddingError, NotPlanarError
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation, PlaneEmbedding
from pmcuts.graphs.properties import digirth, edge_connectivity, is_acyclic, is_strongly_connected
from pmcuts.matchings import bonds_of, even_subgraph_with_strong_contraction, is_even_subgraph

LOGGER = logging.getLogger(__name__)

KIND_MATCH = nx.algorithms.isomorphism.categorical_multiedge_match('kind', None)


def embed_planar(g: MultiGraph) -> PlaneEmbedding:
    """
    Return a rotation system of a simple planar graph obtained from networkx's planarity test.
    """
    if not g.is_simple():
        raise ContractViolationError('Only simple graphs are embedded.')
    planar, embedding = nx.check_planarity(g.to_simple_networkx())
    if not planar:
        raise NotPlanarError('Graph with {} vertices and {} edges is not planar.'.format(g.n, g.m))
    rotation = []
    for vertex in range(g.n):
        darts = []
        for other in reversed(list(embedding.neighbors_cw_order(vertex))):
            edge_id = g.edges_between(vertex, other)[0]
            darts.append(2 * edge_id + (0 if g.edges[edge_id][0] == vertex else 1))
        rotation.append(tuple(darts))
    return PlaneEmbedding(host=g, rotation=tuple(rotation))


def _validate_rotation(embedding: PlaneEmbedding):
    host = embedding.host
    if len(embedding.rotation) != host.n:
        raise InvalidEmbeddingError('Rotation lists {} vertices for {} vertices.'.format(
            len(embedding.rotation), host.n
        ))
    seen = set()
    for vertex, darts in enumerate(embedding.rotation):
        for dart in darts:
            if not 0 <= dart < 2 * host.m or dart in seen:
                raise InvalidEmbeddingError('Dart {} is unknown or repeated.'.format(dart))
            if PlaneEmbedding.dart_vertex(host, dart) != vertex:
                raise InvalidEmbeddingError('Dart {} is listed at vertex {}.'.format(dart, vertex))
            seen.add(dart)
    if len(seen) != 2 * host.m:
        raise InvalidEmbeddingError('Rotation misses {} darts.'.format(2 * host.m - len(seen)))


def faces(embedding: PlaneEmbedding) -> List[Tuple[int, ...]]:
    """
    Return the face boundary walks as dart tuples, ordered by their smallest dart.

    Raises `InvalidEmbeddingError` unless the rotation is a plane embedding of a connected host.
    """
    _validate_rotation(embedding)
    host = embedding.host
    successor = embedding.successor
    visited = set()
    walks = []
    for start in range(2 * host.m):
        if start in visited:
            continue
        walk = []
        dart = start
        while dart not in visited:
            visited.add(dart)
            walk.append(dart)
            dart = successor[dart ^ 1]
        if dart != start:
            raise InvalidEmbeddingError('Face trace from dart {} does not close.'.format(start))
        walks.append(tuple(walk))
    if host.n and host.n - host.m + len(walks) != 2:
        raise InvalidEmbeddingError(
            'Euler check failed: n - m + f = {} - {} + {} != 2.'.format(host.n, host.m, len(walks))
        )
    return walks


def face_vertices(embedding: PlaneEmbedding, walk):
    return tuple(PlaneEmbedding.dart_vertex(embedding.host, dart) for dart in walk)


@dataclass(frozen=True)
class DualPair:
    """
    A partially oriented plane graph and its directed dual; `edge_bijection[e]` is the dual edge of `e`.
    """

    primal: PlaneEmbedding
    primal_orientation: PartialOrientation
    dual: PlaneEmbedding
    dual_orientation: PartialOrientation
    edge_bijection: Dict[int, int]


def directed_dual(embedding: PlaneEmbedding, orientation: Optional[PartialOrientation] = None) -> DualPair:
    """
    Build the directed dual: one vertex per face, one edge per primal edge, arcs from left face to right face.

    Dual edge `e` joins the faces of darts `2 e` and `2 e + 1`, and the dual rotation at a face is its boundary
    walk, so taking the dual twice gives back the primal rotation.
    """
    orientation = orientation if orientation is not None else PartialOrientation.undirected(embedding.host)
    if orientation.host != embedding.host:
        raise ContractViolationError('Orientation and embedding have different hosts.')
    walks = faces(embedding)
    face_of = {}
    for index, walk in enumerate(walks):
        for dart in walk:
            face_of[dart] = index
    host = embedding.host
    dual_graph = MultiGraph(
        n=len(walks),
        edges=tuple((face_of[2 * edge_id], face_of[2 * edge_id + 1]) for edge_id in range(host.m)),
        loops_allowed=True,
    )
    dual = PlaneEmbedding(host=dual_graph, rotation=tuple(walks))
    return DualPair(
        primal=embedding,
        primal_orientation=orientation,
        dual=dual,
        dual_orientation=PartialOrientation(host=dual_graph, state=orientation.reversed().state),
        edge_bijection={edge_id: edge_id for edge_id in range(host.m)},
    )


def is_edge_cut(g: MultiGraph, edge_ids):
    """
    Return True when `edge_ids` equals `delta(S)` for some vertex set `S` (the empty set included).
    """
    edge_ids = g.check_edges(edge_ids)
    colour = {}
    for start in range(g.n):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            vertex = stack.pop()
            for edge_id in g.incidence[vertex]:
                other = g.other_end(edge_id, vertex)
                wanted = colour[vertex] ^ (1 if edge_id in edge_ids else 0)
                if other not in colour:
                    colour[other] = wanted
                    stack.append(other)
                elif colour[other] != wanted:
                    return False
    return True


def _directed_without_loops(d: PartialOrientation):
    """
    Return a `networkx.MultiDiGraph` of `d` without loops; an undirected edge becomes a pair of opposite edges.
    """
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(d.host.n))
    for edge_id, (a, b) in enumerate(d.host.edges):
        if a == b:
            continue
        arc = d.arc(edge_id)
        if arc is None:
            graph.add_edge(a, b, kind='edge')
            graph.add_edge(b, a, kind='edge')
        else:
            graph.add_edge(*arc, kind='arc')
    return graph


def _restricted_embedding(embedding: PlaneEmbedding, removed):
    graph, edge_map = embedding.host.delete_edges(removed)
    rotation = tuple(
        tuple(2 * edge_map[dart >> 1] + (dart & 1) for dart in darts if (dart >> 1) in edge_map)
        for darts in embedding.rotation
    )
    return PlaneEmbedding(host=graph, rotation=rotation), edge_map


@dataclass
class DualityReport:
    """
    Outcome of `duality_properties_check`; a clause is None when it was not applicable.
    """

    clauses: Dict[str, Optional[bool]] = field(default_factory=dict)

    @property
    def violations(self):
        return sorted(name for name, holds in self.clauses.items() if holds is False)

    @property
    def holds(self):
        return not self.violations


def duality_properties_check(pair: DualPair, samples=10, seed=0) -> DualityReport:
    """
    Check the four plane duality facts on one instance.

    `strong_acyclic`: strongly connected iff the dual is acyclic (full orientations only). `simple_connectivity`:
    simple iff the dual is 3-edge-connected. `cuts_even`: primal bonds and sampled cuts map to even dual edge sets,
    and sampled edge sets are cuts exactly when their images are even. `deletion_contraction`: deleting sampled
    edges commutes with contracting their duals, arc directions included.
    """
    report = DualityReport()
    primal = pair.primal.host
    dual = pair.dual.host
    rng = np.random.default_rng(seed)

    def image(edge_ids):
        return frozenset(pair.edge_bijection[edge_id] for edge_id in edge_ids)

    if pair.primal_orientation.is_full() and pair.dual_orientation.is_full():
        report.clauses['strong_acyclic'] = (
            is_strongly_connected(pair.primal_orientation) == is_acyclic(pair.dual_orientation)
        )
    else:
        report.clauses['strong_acyclic'] = None
    report.clauses['simple_connectivity'] = primal.is_simple() == (edge_connectivity(dual) >= 3)

    cuts_even = all(is_even_subgraph(dual, image(bond.edges)) for bond in bonds_of(primal))
    for _ in range(samples):
        side = frozenset(int(vertex) for vertex in np.flatnonzero(rng.integers(0, 2, size=primal.n)))
        cuts_even = cuts_even and is_even_subgraph(dual, image(primal.boundary(side)))
        chosen = frozenset(int(edge_id) for edge_id in np.flatnonzero(rng.integers(0, 2, size=primal.m)))
        cuts_even = cuts_even and is_edge_cut(primal, chosen) == is_even_subgraph(dual, image(chosen))
    report.clauses['cuts_even'] = cuts_even

    commutes = True
    attempts = 0
    while attempts < samples and primal.m > 1:
        attempts += 1
        size = int(rng.integers(1, min(3, primal.m)))
        removed = frozenset(int(edge_id) for edge_id in rng.choice(primal.m, size=size, replace=False))
        deleted, _ = primal.delete_edges(removed)
        if not deleted.is_connected():
            continue
        restricted, edge_map = _restricted_embedding(pair.primal, removed)
        left = directed_dual(restricted, pair.primal_orientation.transport(restricted.host, edge_map))
        right, _, _ = pair.dual_orientation.contract(image(removed))
        commutes = commutes and nx.is_isomorphic(
            _directed_without_loops(left.dual_orientation), _directed_without_loops(right), edge_match=KIND_MATCH,
        )
    report.clauses['deletion_contraction'] = commutes
    if report.violations:
        LOGGER.error('[PMCUTS] Duality clauses violated: %s', report.violations)
    return report


def _check_oriented(d: PartialOrientation):
    if not d.is_full():
        raise ContractViolationError('Acyclic partitions are computed for full orientations.')
    if digirth(d) < 3:
        raise ContractViolationError('Acyclic partitions require digirth at least 3.')
    if d.host.n > constants.NL_MAX_N:
        raise BoundExceededError('Exhaustive acyclic partition search is limited to {} vertices.'.format(
            constants.NL_MAX_N
        ))


def _monochromatic_cycle(heads, side):
    """
    Return the vertices of a directed cycle inside one class of `side`, in cycle order, or None.
    """
    n = len(heads)
    state = [0] * n
    for root in range(n):
        if state[root]:
            continue
        state[root] = 1
        path = [root]
        pending = [iter(heads[root])]
        while path:
            vertex = path[-1]
            for head in pending[-1]:
                if side[head] != side[vertex] or state[head] == 2:
                    continue
                if state[head] == 1:
                    return path[path.index(head):]
                state[head] = 1
                path.append(head)
                pending.append(iter(heads[head]))
                break
            else:
                state[vertex] = 2
                path.pop()
                pending.pop()
    return None


def neumann_lara_partition(d: PartialOrientation) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """
    Split the vertices of an oriented graph into two sets inducing acyclic subdigraphs, or return None.

    Every vertex starts in `X`, vertex 0 fixed there. While some class holds a directed cycle, the search
    branches on which free vertex of that cycle moves to `Y`; a moved vertex is fixed, and so is every cycle
    vertex tried before it in the same branch. A cycle without free vertices prunes the branch.
    """
    _check_oriented(d)
    n = d.host.n
    if is_acyclic(d):
        return frozenset(range(n)), frozenset()
    heads = d.out_arcs()
    side = [0] * n
    fixed = [False] * n
    fixed[0] = True

    def resolve():
        cycle = _monochromatic_cycle(heads, side)
        if cycle is None:
            return True
        kept = []
        for vertex in cycle:
            if fixed[vertex]:
                continue
            side[vertex] = 1
            fixed[vertex] = True
            if resolve():
                return True
            side[vertex] = 0
            kept.append(vertex)
        for vertex in kept:
            fixed[vertex] = False
        return False

    if not resolve():
        return None
    first = frozenset(vertex for vertex in range(n) if side[vertex] == 0)
    return first, frozenset(range(n)) - first


def cut_complement_acyclic(d: PartialOrientation):
    """
    Return an edge cut `C` with `d - C` acyclic, or None.
    """
    partition = neumann_lara_partition(d)
    if partition is None:
        return None
    return d.host.boundary(partition[0])


@dataclass(frozen=True)
class CrosscheckReport:
    """
    Both sides of the plane duality between acyclic 2-partitions and strongly connecting even subgraphs.

    `even_subgraph` is the dual witness mapped back to primal edge ids.
    """

    partition: Optional[Tuple[FrozenSet[int], FrozenSet[int]]]
    even_subgraph: Optional[FrozenSet[int]]

    @property
    def agree(self):
        return (self.partition is None) == (self.even_subgraph is None)


def nl_hochstaettler_crosscheck(embedding: PlaneEmbedding, orientation: PartialOrientation) -> CrosscheckReport:
    """
    Run the acyclic partition search on `orientation` and the even subgraph search on its dual.
    """
    if not embedding.host.is_simple():
        raise ContractViolationError('The cross-check needs a simple plane graph.')
    partition = neumann_lara_partition(orientation)
    pair = directed_dual(embedding, orientation)
    result = even_subgraph_with_strong_contraction(pair.dual_orientation)
    even = None
    if result.witness is not None:
        inverse = {dual_id: primal_id for primal_id, dual_id in pair.edge_bijection.items()}
        even = frozenset(inverse[edge_id] for edge_id in result.witness)
    report = CrosscheckReport(partition=partition, even_subgraph=even)
    if not report.agree:
        LOGGER.error('[PMCUTS] Acyclic partition and dual even subgraph disagree: %s', report)
    return report
