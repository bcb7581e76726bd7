# -*- coding: utf-8 -*-
"""
Utility functions shared by the pmcuts management commands.

Every driver works on one `GraphRecord` at a time and returns a plain result object, so the same code runs in
the foreground and in the worker processes of `run_batch` and `--jobs`.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional

import networkx as nx

from pmcuts import constants
from pmcuts.choices import CONJECTURE_CLASSES, CampaignStatus, CertificateKind, Conjecture, Construction, SearchMode
from pmcuts.exceptions import (
    BoundExceededError,
    ContractViolationError,
    GraphFormatError,
    InvalidCommandOptionsError,
    InvalidEmbeddingError,
    NotPlanarError,
    UnsupportedFormatError,
    WiringCollisionError,
)
from pmcuts.gadgets import (
    c4_reduction,
    contract_triangle,
    cubic_expansion,
    dplus,
    orient_extremal_sinks_sources,
    reconstruct_hat_wiring,
    split_vertex,
    tilde_construction,
)
from pmcuts.generate import orientations
from pmcuts.graphs.formats import GraphRecord, iter_file_records, write_graph6, write_sidecar
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation, PlaneEmbedding
from pmcuts.graphs.properties import (
    cyclic_connectivity,
    edge_connectivity,
    find_induced_four_cycle,
    find_triangle,
    girth,
    is_bipartite,
    is_cubic,
    is_three_connected,
    vertex_connectivity,
)
from pmcuts.matchings import (
    count_perfect_matchings,
    even_subgraph_with_strong_contraction,
    is_hamiltonian,
    min_cut_in_perfect_matching,
)
from pmcuts.planar import directed_dual, embed_planar, faces, neumann_lara_partition
from pmcuts.search import (
    Certificate,
    GoodMatchingCheck,
    SearchProblem,
    can_edge_be_a_arc,
    every_matching_cut_certificate,
    exists_orientation_all_pm_cut,
    verify_certificate,
)

LOGGER = logging.getLogger(__name__)

# Failures of a single input that a campaign records and moves past.
ITEM_ERRORS = (
    BoundExceededError,
    ContractViolationError,
    GraphFormatError,
    InvalidEmbeddingError,
    NotPlanarError,
    UnsupportedFormatError,
    WiringCollisionError,
)


def is_planar(g: MultiGraph):
    return nx.check_planarity(g.to_simple_networkx())[0]


@dataclass
class GraphAnalysis:
    """
    Parameters of one graph reported by `analyze_graphs`.
    """

    source: str
    n: int
    m: int
    cubic: bool
    bipartite: bool
    planar: bool
    girth: float
    edge_connectivity: int
    vertex_connectivity: int
    cyclic_connectivity: Optional[float]
    perfect_matchings: int
    min_cut_in_perfect_matching: Optional[float]
    hamiltonian: bool
    faces: Optional[int] = None


def analyze_graph(graph: MultiGraph, source='', embedding: Optional[PlaneEmbedding] = None) -> GraphAnalysis:
    """
    Compute the report of `analyze_graphs` for one graph.
    """
    cubic = is_cubic(graph)
    connected = graph.is_connected()
    return GraphAnalysis(
        source=source,
        n=graph.n,
        m=graph.m,
        cubic=cubic,
        bipartite=is_bipartite(graph) is not None,
        planar=is_planar(graph),
        girth=girth(graph),
        edge_connectivity=edge_connectivity(graph),
        vertex_connectivity=vertex_connectivity(graph),
        cyclic_connectivity=cyclic_connectivity(graph) if cubic and connected else None,
        perfect_matchings=count_perfect_matchings(graph),
        min_cut_in_perfect_matching=min_cut_in_perfect_matching(graph) if cubic else None,
        hamiltonian=is_hamiltonian(graph) is not None,
        faces=len(faces(embedding)) if embedding is not None else None,
    )


@dataclass
class CampaignItem:
    """
    Outcome of one input record of a campaign.
    """

    index: int
    source: str
    status: str
    reason: str = ''
    graph: Optional[MultiGraph] = None
    orientation: Optional[PartialOrientation] = None
    certificate: Optional[Certificate] = None
    analysis: Optional[GraphAnalysis] = None
    details: Dict[str, object] = field(default_factory=dict)


@dataclass
class CampaignReport:
    """
    Items of a campaign in input order.
    """

    command: str
    items: List[CampaignItem] = field(default_factory=list)

    @property
    def counts(self):
        counts = {status: 0 for status, _ in CampaignStatus.choices}
        for item in self.items:
            counts[item.status] += 1
        return counts

    @property
    def exit_code(self):
        """
        Counterexamples win over incomplete runs, which win over per-item errors.
        """
        statuses = {item.status for item in self.items}
        if CampaignStatus.Counterexample in statuses:
            return constants.EXIT_COUNTEREXAMPLE
        if CampaignStatus.Incomplete in statuses:
            return constants.EXIT_INCOMPLETE
        if CampaignStatus.Error in statuses:
            return constants.EXIT_USAGE
        return constants.EXIT_COMPLETE


def map_in_order(function, items, jobs=1):
    """
    Apply `function` to `items` with `jobs` worker processes and return the results in input order.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, items))


def read_records(paths):
    """
    Read every record of every input file, recording unreadable files as error records.
    """
    records = []
    for path in paths:
        try:
            file_records = list(iter_file_records(path))
        except OSError as error:
            LOGGER.error('[PMCUTS] Could not read %s: %s', path, error)
            file_records = [GraphRecord(index=-1, source=str(path), error=error)]
        records.extend(file_records)
    for index, record in enumerate(records):
        record.index = index
    return records


def _item(record: GraphRecord, status, reason='', orientation=None, **kwargs):
    return CampaignItem(
        index=record.index, source=record.source, status=status, reason=reason, graph=record.graph,
        orientation=orientation if orientation is not None else record.orientation, **kwargs
    )


def _emit(record: GraphRecord, certificate: Certificate, problem: SearchProblem, **kwargs):
    """
    Re-verify a counterexample certificate before it is reported.
    """
    result = verify_certificate(certificate, problem)
    if not result.valid:
        LOGGER.error('[PMCUTS] Certificate for %s failed verification: %s', record.source, result.reason)
        return _item(record, CampaignStatus.Error, 'Certificate failed verification: {}'.format(result.reason))
    return _item(record, CampaignStatus.Counterexample, certificate=certificate, **kwargs)


def analyze_record(record: GraphRecord) -> CampaignItem:
    """
    Analyze one record, keeping parse and bound errors on the item.
    """
    if record.error is not None:
        return _item(record, CampaignStatus.Error, str(record.error))
    try:
        analysis = analyze_graph(record.graph, record.source, record.embedding)
    except ITEM_ERRORS as error:
        LOGGER.error('[PMCUTS] Analysis of %s failed: %s', record.source, error)
        return _item(record, CampaignStatus.Error, str(error))
    return _item(record, CampaignStatus.Holds, analysis=analysis)


def class_mismatch(conjecture, graph: MultiGraph):
    """
    Return why `graph` is outside the graph class of `conjecture`, or an empty string.
    """
    bipartite, planar, _ = CONJECTURE_CLASSES[conjecture]
    if conjecture == Conjecture.Hochstaettler:
        if edge_connectivity(graph) < 3:
            return 'not 3-edge-connected'
    elif conjecture != Conjecture.NeumannLara:
        if not is_cubic(graph):
            return 'not cubic'
        if not is_three_connected(graph):
            return 'not 3-connected'
    if bipartite and is_bipartite(graph) is None:
        return 'not bipartite'
    if planar and not is_planar(graph):
        return 'not planar'
    return ''


def _reduction(conjecture, graph: MultiGraph):
    """
    Return the reduction that covers `graph` in a campaign over all smaller graphs of its class, or ''.
    """
    if conjecture == Conjecture.Tait and graph.n > 4 and find_triangle(graph) is not None:
        return 'triangle contraction'
    if conjecture == Conjecture.Tutte and girth(graph) < 6:
        return 'girth below 6'
    return ''


def _verify_undirected(record: GraphRecord):
    graph = record.graph
    cycle = is_hamiltonian(graph)
    if cycle is not None:
        return _item(record, CampaignStatus.Holds, details={'hamiltonian_cycle': list(cycle)})
    certificate = every_matching_cut_certificate(graph)
    return _emit(record, certificate, SearchProblem(host=graph))


def _verify_matching_conjecture(record: GraphRecord, filters):
    """
    Decide whether some orientation of the record makes every perfect matching contain a directed cut.
    """
    graph = record.graph
    if record.orientation is not None:
        good = GoodMatchingCheck(graph)(record.orientation)
        if good is not None:
            return _item(record, CampaignStatus.Holds, details={'good_matching': sorted(good)})
        problem = SearchProblem(host=graph, fixed=record.orientation)
        return _emit(record, exists_orientation_all_pm_cut(problem), problem)
    if filters and graph.m:
        certificate = can_edge_be_a_arc(graph, 0)
        if certificate.kind == CertificateKind.Refuted:
            return _item(record, CampaignStatus.Holds, 'edge 0 cannot be an a-arc', details=certificate.stats)
    problem = SearchProblem(host=graph)
    certificate = exists_orientation_all_pm_cut(problem)
    if certificate.kind == CertificateKind.Refuted:
        return _item(record, CampaignStatus.Holds, details=certificate.stats)
    return _emit(record, certificate, problem)


def _check_directed_instances(record: GraphRecord, check, digirth_min=None):
    """
    Run `check` on the record's orientation, or on every full orientation of digirth at least `digirth_min`.

    `check` returns a witness or None.
    """
    if record.orientation is not None:
        if not record.orientation.is_full():
            return _item(record, CampaignStatus.Skipped, 'orientation is not full')
        instances = [record.orientation]
    else:
        instances = orientations(record.graph, digirth_min=digirth_min)
    checked = 0
    for orientation in instances:
        checked += 1
        if check(orientation) is None:
            return _item(
                record, CampaignStatus.Counterexample, orientation=orientation, details={'checked': checked},
            )
    return _item(record, CampaignStatus.Holds, details={'checked': checked})


def _strong_even_subgraph(orientation):
    result = even_subgraph_with_strong_contraction(orientation)
    return result.witness


def verify_record(record: GraphRecord, conjecture, filters=True, max_n=None) -> CampaignItem:
    """
    Check one record against `conjecture`.

    Records outside the conjecture's class or above `max_n` are skipped, reduction filters can be switched off
    with `filters`, and size bounds turn into an incomplete status.
    """
    if record.error is not None:
        return _item(record, CampaignStatus.Error, str(record.error))
    graph = record.graph
    if max_n is not None and graph.n > max_n:
        return _item(record, CampaignStatus.Skipped, 'more than {} vertices'.format(max_n))
    mismatch = class_mismatch(conjecture, graph)
    if mismatch:
        LOGGER.warning('[PMCUTS] %s skipped for %s: %s', record.source, conjecture, mismatch)
        return _item(record, CampaignStatus.Skipped, mismatch)
    directed = CONJECTURE_CLASSES[conjecture][2]
    try:
        if not directed:
            reduction = _reduction(conjecture, graph) if filters else ''
            if reduction:
                return _item(record, CampaignStatus.Reduced, reduction)
            return _verify_undirected(record)
        if conjecture == Conjecture.NeumannLara:
            return _check_directed_instances(record, neumann_lara_partition, digirth_min=3)
        if conjecture == Conjecture.Hochstaettler:
            return _check_directed_instances(record, _strong_even_subgraph)
        return _verify_matching_conjecture(record, filters)
    except BoundExceededError as error:
        LOGGER.warning('[PMCUTS] %s is incomplete: %s', record.source, error)
        return _item(record, CampaignStatus.Incomplete, str(error))
    except ITEM_ERRORS as error:
        LOGGER.error('[PMCUTS] %s failed: %s', record.source, error)
        return _item(record, CampaignStatus.Error, str(error))


def search_record(record: GraphRecord, mode, edge_id=0, fixed: Optional[PartialOrientation] = None):
    """
    Run the orientation search of `search_orientations` on one record.

    `fixed` replaces the record's own orientation when given; it must belong to the same graph.
    """
    if record.error is not None:
        return _item(record, CampaignStatus.Error, str(record.error))
    graph = record.graph
    fixed = fixed if fixed is not None else record.orientation
    try:
        if fixed is not None and fixed.host != graph:
            raise ContractViolationError('The fixed orientation belongs to a different graph.')
        if mode == SearchMode.AArc:
            problem = SearchProblem(host=graph, fixed=fixed, restrict_to_edge=edge_id)
            certificate = can_edge_be_a_arc(graph, edge_id, fixed)
        else:
            problem = SearchProblem(host=graph, fixed=fixed)
            certificate = exists_orientation_all_pm_cut(problem)
    except ITEM_ERRORS as error:
        LOGGER.error('[PMCUTS] Search on %s failed: %s', record.source, error)
        return _item(record, CampaignStatus.Error, str(error))
    result = verify_certificate(certificate, problem)
    if not result.valid:
        LOGGER.error('[PMCUTS] Certificate for %s failed verification: %s', record.source, result.reason)
        return _item(record, CampaignStatus.Error, 'Certificate failed verification: {}'.format(result.reason))
    status = CampaignStatus.Holds
    if mode == SearchMode.AllPmCut and certificate.kind == CertificateKind.OrientationFound:
        status = CampaignStatus.Counterexample
    return _item(record, status, certificate=certificate, details={'exhaustive': result.exhaustive})


@dataclass
class ConstructionState:
    """
    Value threaded through a chain of constructions.
    """

    orientation: PartialOrientation
    embedding: Optional[PlaneEmbedding] = None
    gadget: Optional[object] = None
    history: List[str] = field(default_factory=list)

    @property
    def graph(self):
        return self.orientation.host


def _a_arc_orientation(state: ConstructionState, edge_id):
    """
    Return an orientation in which `edge_id` is an a-arc, keeping the current one when it already qualifies.
    """
    if state.orientation.is_directed(edge_id):
        return state.orientation
    certificate = can_edge_be_a_arc(state.graph, edge_id, state.orientation)
    if not certificate.found:
        raise ContractViolationError('Edge {} cannot be an a-arc.'.format(edge_id))
    return certificate.orientation


def _split(state: ConstructionState, edge_id):
    if state.gadget is None:
        state.gadget = split_vertex(_a_arc_orientation(state, edge_id), edge_id)
    return state.gadget


def apply_construction(state: ConstructionState, step, edge_id=0, vertices=None, variant='uv') -> ConstructionState:
    """
    Apply one construction step and return the new state.

    `split`, `hat` and `tilde` act on the split gadget of the a-arc `edge_id`; the other steps act on the
    current orientation. `vertices` selects the triangle or 4-cycle; the first one found is used otherwise.
    """
    embedding = None
    gadget = None
    if step == Construction.Split:
        gadget = _split(state, edge_id)
        orientation = gadget.orientation
    elif step == Construction.Hat:
        found = reconstruct_hat_wiring(_split(state, edge_id))
        if found is None:
            raise ContractViolationError('No hat wiring covers every perfect matching.')
        orientation = found[1]
    elif step == Construction.Tilde:
        orientation = tilde_construction(_split(state, edge_id)).orientation
    elif step == Construction.Orient:
        orientation = orient_extremal_sinks_sources(state.orientation).orientation
    elif step == Construction.DPlus:
        orientation = dplus(state.orientation).orientation
    elif step == Construction.ContractTriangle:
        triangle = vertices or find_triangle(state.graph)
        if triangle is None:
            raise ContractViolationError('The graph has no triangle.')
        orientation = contract_triangle(state.orientation, triangle).orientation
    elif step == Construction.C4Reduce:
        cycle = vertices or find_induced_four_cycle(state.graph)
        if cycle is None:
            raise ContractViolationError('The graph has no induced 4-cycle.')
        reductions = c4_reduction(state.graph, cycle)
        orientation = PartialOrientation.undirected(reductions[0 if variant == 'uv' else 1].graph)
    elif step == Construction.Expand:
        orientation = cubic_expansion(state.orientation, state.embedding).orientation
    elif step == Construction.Dual:
        pair = directed_dual(state.embedding or embed_planar(state.graph), state.orientation)
        orientation = pair.dual_orientation
        embedding = pair.dual
    else:
        raise InvalidCommandOptionsError('Unknown construction {!r}.'.format(step))
    LOGGER.info('[PMCUTS] Construction [%s] built a graph on [%s] vertices.', step, orientation.host.n)
    return ConstructionState(
        orientation=orientation, embedding=embedding, gadget=gadget if step == Construction.Split else None,
        history=state.history + [step],
    )


def format_orientation(orientation: PartialOrientation):
    """
    Encode a construction result as graph6, or as a sidecar record when some edge is directed.

    Returns None for multigraphs, which only the JSON output can carry.
    """
    if not orientation.host.is_simple():
        return None
    if orientation.directed_edges():
        return write_sidecar(orientation)
    return write_graph6(orientation.host)


def run_campaign(command, records, function, jobs=1) -> CampaignReport:
    """
    Apply a per-record driver to every record and collect the items in input order.
    """
    items = map_in_order(function, records, jobs)
    report = CampaignReport(command=command, items=items)
    LOGGER.info('[PMCUTS] Campaign [%s] finished. Counts: [%s]', command, report.counts)
    return report


def verify_campaign(conjecture, records, filters=True, max_n=None, jobs=1):
    return run_campaign(
        'verify {}'.format(conjecture), records,
        partial(verify_record, conjecture=conjecture, filters=filters, max_n=max_n), jobs,
    )


def combine_exit_codes(codes):
    """
    Return the exit code of several runs with the precedence of `CampaignReport.exit_code`.
    """
    codes = set(codes)
    for code in (constants.EXIT_COUNTEREXAMPLE, constants.EXIT_INCOMPLETE, constants.EXIT_USAGE):
        if code in codes:
            return code
    return constants.EXIT_COMPLETE
