# -*- coding: utf-8 -*-
"""
Isomorph-free generation of small cubic graphs and streams of their orientations.

Three constructions are used, each followed by canonical form rejection:

* 3-connected graphs grow from K4 by edge insertion (subdivide two distinct edges and join the new
  vertices); every 3-connected cubic graph arises this way through 3-connected graphs.
* Bipartite graphs grow from the 2-vertex triple edge: two edges `(a, b)`, `(c, d)` with `a`, `c` in the
  same colour class are replaced by a new vertex `x` on `a`, `c` and a new vertex `y` on `b`, `d`, joined by
  `x y`. Intermediate levels keep multigraphs, which makes every connected cubic bipartite graph reachable.
* Anything else is built vertex by vertex in breadth first order and is bounded by
  `PMCUTS_FULL_GENERATION_MAX_N`.
"""
import itertools
import logging
from typing import Iterator

from pmcuts import constants
from pmcuts.exceptions import BoundExceededError, ContractViolationError
from pmcuts.graphs.canonical import apply_edge_automorphism, canonical_form, edge_automorphisms
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation
from pmcuts.graphs.named import k4
from pmcuts.graphs.properties import digirth, girth, is_bipartite, is_three_connected
from pmcuts.search import check_sweep_bound, full_orientation_states, is_orbit_representative

LOGGER = logging.getLogger(__name__)


def _insert_edge(g: MultiGraph, first, second):
    """
    Subdivide edges `first` and `second` and join the two new vertices.
    """
    a, b = g.edges[first]
    c, d = g.edges[second]
    x, y = g.n, g.n + 1
    edges = [pair for edge_id, pair in enumerate(g.edges) if edge_id not in (first, second)]
    edges.extend([(a, x), (x, b), (c, y), (y, d), (x, y)])
    return MultiGraph(n=g.n + 2, edges=tuple(edges))


def _insert_bipartite(g: MultiGraph, white, first, second):
    """
    Replace `(a, b)` and `(c, d)` (white ends `a`, `c`) by `a x`, `c x`, `b y`, `d y` and `x y`.
    """
    a, b = g.edges[first]
    c, d = g.edges[second]
    if a not in white:
        a, b = b, a
    if c not in white:
        c, d = d, c
    x, y = g.n, g.n + 1
    edges = [pair for edge_id, pair in enumerate(g.edges) if edge_id not in (first, second)]
    edges.extend([(a, x), (c, x), (b, y), (d, y), (x, y)])
    return MultiGraph(n=g.n + 2, edges=tuple(edges))


def _next_level(graphs, augment):
    seen = {}
    for graph in graphs:
        for child in augment(graph):
            key = canonical_form(child)
            if key not in seen:
                seen[key] = child
    return [seen[key] for key in sorted(seen)]


def _three_connected_levels(n):
    level = [k4()]
    for size in range(6, n + 1, 2):
        level = _next_level(
            level,
            lambda graph: (_insert_edge(graph, i, j) for i, j in itertools.combinations(range(graph.m), 2)),
        )
        LOGGER.debug('[PMCUTS] 3-connected cubic graphs on %s vertices: %s', size, len(level))
    return level


def _bipartite_levels(n):
    def augment(graph):
        white = is_bipartite(graph)[0]
        for i, j in itertools.combinations(range(graph.m), 2):
            yield _insert_bipartite(graph, white, i, j)

    level = [MultiGraph(n=2, edges=((0, 1),) * 3)]
    for size in range(4, n + 1, 2):
        level = _next_level(level, augment)
        LOGGER.debug('[PMCUTS] Cubic bipartite multigraphs on %s vertices: %s', size, len(level))
    return [graph for graph in level if graph.is_simple()]


def _breadth_first_graphs(n):
    """
    Yield connected simple cubic graphs on `n` vertices labelled in breadth first order.

    The lowest vertex below degree 3 is completed first, and fresh vertices are used in increasing order.
    """
    adjacency = [set() for _ in range(n)]
    used = [1]

    def completions():
        vertex = next((v for v in range(used[0]) if len(adjacency[v]) < 3), None)
        if vertex is None:
            if used[0] == n:
                yield MultiGraph(
                    n=n, edges=tuple(sorted((a, b) for a in range(n) for b in adjacency[a] if a < b)),
                )
            return
        slots = 3 - len(adjacency[vertex])
        touched = [
            other for other in range(vertex + 1, used[0])
            if len(adjacency[other]) < 3 and other not in adjacency[vertex]
        ]
        fresh = list(range(used[0], min(n, used[0] + slots)))
        for chosen in itertools.combinations(touched + fresh, slots):
            new = [other for other in chosen if other >= used[0]]
            if new != fresh[:len(new)]:
                continue
            for other in chosen:
                adjacency[vertex].add(other)
                adjacency[other].add(vertex)
            used[0] += len(new)
            yield from completions()
            used[0] -= len(new)
            for other in chosen:
                adjacency[vertex].discard(other)
                adjacency[other].discard(vertex)

    yield from completions()


def _all_connected(n):
    seen = {}
    for graph in _breadth_first_graphs(n):
        key = canonical_form(graph)
        if key not in seen:
            seen[key] = graph
    return [seen[key] for key in sorted(seen)]


def generate_cubic(n, bipartite=False, girth_min=None, three_connected=False) -> Iterator[MultiGraph]:
    """
    Yield one representative of every isomorphism class of connected simple cubic graphs on `n` vertices.

    Filters: `bipartite`, `girth_min` (girth at least this value) and `three_connected`.
    """
    if n % 2 or n < 4:
        raise ContractViolationError('Cubic graphs need an even vertex count of at least 4, got {}.'.format(n))
    if n > constants.GENERATION_MAX_N:
        raise BoundExceededError(
            'Generation is limited to {} vertices; ingest graph6 files from an external generator such as '
            'geng or minibaum for n = {}.'.format(constants.GENERATION_MAX_N, n)
        )
    if bipartite:
        graphs = _bipartite_levels(n)
    elif three_connected:
        graphs = _three_connected_levels(n)
    else:
        if n > constants.FULL_GENERATION_MAX_N:
            raise BoundExceededError(
                'Unfiltered generation is limited to {} vertices; request three_connected or bipartite graphs, or '
                'ingest graph6 files from an external generator.'.format(constants.FULL_GENERATION_MAX_N)
            )
        graphs = _all_connected(n)
    emitted = 0
    for graph in graphs:
        if bipartite and is_bipartite(graph) is None:
            continue
        if girth_min is not None and girth(graph) < girth_min:
            continue
        if three_connected and not is_three_connected(graph):
            continue
        emitted += 1
        yield graph
    LOGGER.info('[PMCUTS] Generated [%s] cubic graphs on [%s] vertices.', emitted, n)


def orientations(g: MultiGraph, digirth_min=None, up_to_automorphism=False, digirth_max=None):
    """
    Yield every full orientation of `g` whose digirth lies in `[digirth_min, digirth_max]`.

    With `up_to_automorphism`, only the smallest orientation of each automorphism orbit is kept.
    """
    check_sweep_bound(g)
    mappings = edge_automorphisms(g)[1:] if up_to_automorphism else []
    for state in full_orientation_states(g.m):
        if mappings and not is_orbit_representative(state, mappings):
            continue
        orientation = PartialOrientation(host=g, state=state)
        if digirth_min is not None or digirth_max is not None:
            value = digirth(orientation)
            if digirth_min is not None and value < digirth_min:
                continue
            if digirth_max is not None and value > digirth_max:
                continue
        yield orientation


def orbit_representative(orientation: PartialOrientation):
    """
    Return the smallest orientation in the automorphism orbit of `orientation`.
    """
    states = [orientation.state] + [
        apply_edge_automorphism(orientation.state, mapping) for mapping in edge_automorphisms(orientation.host)
    ]
    return PartialOrientation(host=orientation.host, state=min(states))
