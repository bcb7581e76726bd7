# -*- coding: utf-8 -*-
"""
Branching search for partial orientations in which every perfect matching contains a directed cut.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Optional, Tuple

from pmcuts import constants
from pmcuts.choices import CertificateKind
from pmcuts.enums import EdgeState
from pmcuts.exceptions import BoundExceededError, ContractViolationError
from pmcuts.graphs.canonical import apply_edge_automorphism, edge_automorphisms
from pmcuts.graphs.multigraph import Bond, MultiGraph, PartialOrientation
from pmcuts.matchings import bonds_within_matching, enumerate_perfect_matchings, is_perfect_matching

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchProblem:
    """
    A host graph, the arcs fixed in advance, and optionally the edge whose matchings alone are constrained.
    """

    host: MultiGraph
    fixed: PartialOrientation = None
    restrict_to_edge: Optional[int] = None

    def __post_init__(self):
        fixed = self.fixed if self.fixed is not None else PartialOrientation.undirected(self.host)
        if fixed.host != self.host:
            raise ContractViolationError('Fixed orientation belongs to a different host graph.')
        object.__setattr__(self, 'fixed', fixed)
        if self.restrict_to_edge is not None:
            self.host.check_edge(self.restrict_to_edge)

    def constrained_matchings(self):
        """
        Return the perfect matchings (as edge id frozensets) that must contain a directed cut.
        """
        return [
            matching.edges for matching in enumerate_perfect_matchings(self.host)
            if self.restrict_to_edge is None or self.restrict_to_edge in matching.edges
        ]


@dataclass(frozen=True)
class Certificate:
    """
    Machine checkable outcome of an orientation search or sweep.

    `witnesses` pairs every constrained matching with a bond it contains that `orientation` directs.
    """

    kind: str
    host: MultiGraph
    orientation: Optional[PartialOrientation] = None
    witnesses: Tuple[Tuple[FrozenSet[int], Bond], ...] = ()
    good_matching: Optional[FrozenSet[int]] = None
    a_arc: Optional[Tuple[int, int, int]] = None
    stats: Dict[str, int] = field(default_factory=dict)

    @property
    def found(self):
        return self.kind in (CertificateKind.OrientationFound, CertificateKind.Vacuous)


@dataclass(frozen=True)
class VerificationResult:
    """
    Outcome of `verify_certificate`; `exhaustive` is False when a refutation was too large to re-check.
    """

    valid: bool
    reason: str = ''
    exhaustive: bool = True

    def __bool__(self):
        return self.valid


class _MatchingCutSearch:
    """
    Depth first search over bond directions; the orientation is a flat state list undone through a trail.
    """

    def __init__(self, problem: SearchProblem):
        self.problem = problem
        self.host = problem.host
        self.state = list(problem.fixed.state)
        self.nodes = 0
        self.matchings = problem.constrained_matchings()
        self.options = []
        for edges in self.matchings:
            choices = []
            for bond in bonds_within_matching(self.host, edges):
                for outward in (True, False):
                    choices.append((bond, tuple(sorted(bond.direction_states(self.host, outward).items()))))
            self.options.append(choices)
        self.order = sorted(
            range(len(self.matchings)),
            key=lambda index: (len(self.options[index]), sorted(self.matchings[index])),
        )

    def _directed(self, option):
        return all(self.state[edge_id] == value for edge_id, value in option[1])

    def _compatible(self, option):
        return all(self.state[edge_id] in (EdgeState.UNDIRECTED, value) for edge_id, value in option[1])

    def _pick(self):
        """
        Return `(index, options)` of the uncovered matching with fewest compatible options.

        Returns `(None, None)` when every matching is covered and `(index, [])` on a conflict.
        """
        best_index, best_options = None, None
        for index in self.order:
            options = self.options[index]
            if any(self._directed(option) for option in options):
                continue
            compatible = [option for option in options if self._compatible(option)]
            if not compatible:
                return index, []
            if best_options is None or len(compatible) < len(best_options):
                best_index, best_options = index, compatible
        return best_index, best_options

    def solve(self):
        self.nodes += 1
        index, options = self._pick()
        if index is None:
            return True
        for option in options:
            trail = [edge_id for edge_id, _ in option[1] if self.state[edge_id] == EdgeState.UNDIRECTED]
            for edge_id, value in option[1]:
                self.state[edge_id] = value
            if self.solve():
                return True
            for edge_id in trail:
                self.state[edge_id] = EdgeState.UNDIRECTED
        return False

    def witnesses(self, orientation):
        result = []
        for edges, options in zip(self.matchings, self.options):
            bond = next(option[0] for option in options if option[0].is_directed_by(orientation))
            result.append((edges, bond))
        return tuple(result)


def exists_orientation_all_pm_cut(problem: SearchProblem) -> Certificate:
    """
    Decide whether the fixed arcs extend to a partial orientation directing a bond in every constrained matching.
    """
    search = _MatchingCutSearch(problem)
    stats = {'matchings': len(search.matchings)}
    if not search.matchings:
        LOGGER.info('[PMCUTS] No constrained perfect matchings; the search succeeds vacuously.')
        return Certificate(
            kind=CertificateKind.Vacuous, host=problem.host, orientation=problem.fixed, stats=dict(stats, nodes=0),
        )
    found = search.solve()
    stats['nodes'] = search.nodes
    LOGGER.info(
        '[PMCUTS] Orientation search finished. Found: [%s], matchings: [%s], nodes: [%s]',
        found, stats['matchings'], stats['nodes'],
    )
    if not found:
        return Certificate(kind=CertificateKind.Refuted, host=problem.host, stats=stats)
    orientation = PartialOrientation(host=problem.host, state=tuple(search.state))
    return Certificate(
        kind=CertificateKind.OrientationFound,
        host=problem.host,
        orientation=orientation,
        witnesses=search.witnesses(orientation),
        stats=stats,
    )


def can_edge_be_a_arc(g: MultiGraph, edge_id: int, fixed: Optional[PartialOrientation] = None) -> Certificate:
    """
    Decide whether `edge_id` can be an a-arc: every perfect matching containing it contains a directed cut.

    An edge left undirected by the search is directed forward; the certificate records the arc.
    """
    g.check_edge(edge_id)
    certificate = exists_orientation_all_pm_cut(SearchProblem(host=g, fixed=fixed, restrict_to_edge=edge_id))
    if certificate.kind != CertificateKind.OrientationFound:
        return certificate
    orientation = certificate.orientation
    if not orientation.is_directed(edge_id):
        orientation = orientation.with_states({edge_id: EdgeState.FORWARD})
    tail, head = orientation.arc(edge_id)
    return Certificate(
        kind=certificate.kind,
        host=g,
        orientation=orientation,
        witnesses=certificate.witnesses,
        a_arc=(edge_id, tail, head),
        stats=certificate.stats,
    )


class GoodMatchingCheck:
    """
    Callable returning a perfect matching without directed bond for a given orientation, or None.

    Matchings and their bonds are computed once per host.
    """

    def __init__(self, host: MultiGraph, restrict_to_edge=None):
        self.host = host
        self.entries = []
        for matching in enumerate_perfect_matchings(host):
            if restrict_to_edge is not None and restrict_to_edge not in matching.edges:
                continue
            self.entries.append((matching.edges, bonds_within_matching(host, matching.edges)))

    def __call__(self, orientation: PartialOrientation):
        for edges, bonds in self.entries:
            if not any(bond.is_directed_by(orientation) for bond in bonds):
                return edges
        return None


def has_good_matching(orientation: PartialOrientation):
    """
    Return True when some perfect matching contains no directed bond.
    """
    return GoodMatchingCheck(orientation.host)(orientation) is not None


@dataclass(frozen=True)
class SweepReport:
    """
    Counts of a sweep over full orientations, with the first failing orientation.
    """

    total: int
    checked: int
    passed: int
    counterexample: Optional[PartialOrientation] = None
    orbits: bool = False

    @property
    def failed(self):
        return self.checked - self.passed

    @property
    def universal(self):
        return self.passed == self.checked


def full_orientation_states(m):
    """
    Yield every full orientation state tuple of `m` edges; bit `e` of the counter set means BACKWARD.
    """
    for bits in itertools.product((EdgeState.FORWARD, EdgeState.BACKWARD), repeat=m):
        yield tuple(reversed(bits))


def check_sweep_bound(g: MultiGraph):
    if g.m > constants.SWEEP_MAX_EDGES:
        raise BoundExceededError(
            'A full sweep visits 2^{} orientations, above the bound of 2^{}; use up_to_symmetry to cut the number of '
            'checks or raise PMCUTS_SWEEP_MAX_EDGES.'.format(g.m, constants.SWEEP_MAX_EDGES)
        )


def is_orbit_representative(state, mappings):
    """
    Return True when `state` is the smallest state of its orbit under the edge automorphisms `mappings`.
    """
    return all(apply_edge_automorphism(state, mapping) >= state for mapping in mappings)


def sweep_all_orientations(g: MultiGraph, check: Callable[[PartialOrientation], bool], up_to_symmetry=False):
    """
    Apply `check` to every full orientation of `g`, or to one per automorphism orbit.
    """
    check_sweep_bound(g)
    mappings = edge_automorphisms(g)[1:] if up_to_symmetry else []
    total = checked = passed = 0
    counterexample = None
    for state in full_orientation_states(g.m):
        total += 1
        if mappings and not is_orbit_representative(state, mappings):
            continue
        checked += 1
        orientation = PartialOrientation(host=g, state=state)
        if check(orientation):
            passed += 1
        elif counterexample is None:
            counterexample = orientation
    LOGGER.info('[PMCUTS] Sweep finished. Checked: [%s], passed: [%s], total: [%s]', checked, passed, total)
    return SweepReport(
        total=total, checked=checked, passed=passed, counterexample=counterexample, orbits=up_to_symmetry,
    )


def find_all_pm_cut_orientation(g: MultiGraph, up_to_symmetry=False):
    """
    Sweep full orientations for one in which every perfect matching contains a directed cut.

    Returns a good-matching certificate for the first orientation when none qualifies, otherwise an
    orientation-found certificate.
    """
    check = GoodMatchingCheck(g)
    report = sweep_all_orientations(g, lambda orientation: check(orientation) is not None, up_to_symmetry)
    if report.counterexample is not None:
        problem = SearchProblem(host=g)
        search = _MatchingCutSearch(problem)
        return Certificate(
            kind=CertificateKind.OrientationFound,
            host=g,
            orientation=report.counterexample,
            witnesses=search.witnesses(report.counterexample),
            stats={'matchings': len(search.matchings), 'nodes': report.checked},
        )
    first = PartialOrientation(host=g, state=next(full_orientation_states(g.m)))
    return Certificate(
        kind=CertificateKind.GoodMatching,
        host=g,
        orientation=first,
        good_matching=check(first),
        stats={'matchings': len(check.entries), 'nodes': report.checked},
    )


def _bond_is_valid(g: MultiGraph, bond: Bond):
    everything = frozenset(range(g.n))
    return (
        0 < len(bond.side) < g.n
        and bond.edges == g.boundary(bond.side)
        and g.is_connected_on(bond.side)
        and g.is_connected_on(everything - bond.side)
    )


def _verify_refutation(problem: SearchProblem):
    g = problem.host
    if g.m > constants.REFUTATION_BRUTE_FORCE_MAX_EDGES:
        return VerificationResult(valid=True, reason='Refutation too large to re-check.', exhaustive=False)
    check = GoodMatchingCheck(g, restrict_to_edge=problem.restrict_to_edge)
    free = [edge_id for edge_id in range(g.m) if not problem.fixed.is_directed(edge_id)]
    for values in itertools.product((EdgeState.FORWARD, EdgeState.BACKWARD), repeat=len(free)):
        orientation = problem.fixed.with_states(dict(zip(free, values)))
        if check(orientation) is None:
            return VerificationResult(valid=False, reason='An extension of the fixed arcs covers every matching.')
    return VerificationResult(valid=True)


def verify_certificate(certificate: Certificate, problem: SearchProblem) -> VerificationResult:
    """
    Re-check a certificate against its problem without reusing any search state.
    """
    g = problem.host
    if certificate.host != g:
        return VerificationResult(valid=False, reason='Certificate host differs from the problem host.')
    kind = certificate.kind
    constrained = set(problem.constrained_matchings())
    if kind == CertificateKind.Vacuous:
        if constrained:
            return VerificationResult(valid=False, reason='Constrained matchings exist.')
        return VerificationResult(valid=True)
    if kind == CertificateKind.Refuted:
        return _verify_refutation(problem)
    if kind == CertificateKind.AllMatchingsCut:
        return _verify_witnesses(g, certificate.witnesses, constrained)
    orientation = certificate.orientation
    if orientation is None or orientation.host != g:
        return VerificationResult(valid=False, reason='Certificate carries no orientation of the host.')
    if not orientation.extends(problem.fixed):
        return VerificationResult(valid=False, reason='Orientation does not extend the fixed arcs.')
    if kind == CertificateKind.GoodMatching:
        edges = certificate.good_matching
        if edges is None or not is_perfect_matching(g, edges):
            return VerificationResult(valid=False, reason='Good matching is not a perfect matching.')
        if any(bond.is_directed_by(orientation) for bond in bonds_within_matching(g, edges)):
            return VerificationResult(valid=False, reason='Good matching contains a directed cut.')
        return VerificationResult(valid=True)
    if kind != CertificateKind.OrientationFound:
        return VerificationResult(valid=False, reason='Unknown certificate kind {!r}.'.format(kind))
    if certificate.a_arc is not None:
        edge_id, tail, head = certificate.a_arc
        if orientation.arc(edge_id) != (tail, head):
            return VerificationResult(valid=False, reason='Recorded a-arc is not directed as stated.')
    return _verify_witnesses(g, certificate.witnesses, constrained, orientation)


def _verify_witnesses(g: MultiGraph, witnesses, constrained, orientation=None):
    """
    Check that every constrained matching has a witness bond inside it, directed when `orientation` is given.
    """
    covered = set()
    for edges, bond in witnesses:
        if edges not in constrained:
            return VerificationResult(valid=False, reason='Witness for a matching that is not constrained.')
        if not bond.edges <= edges:
            return VerificationResult(valid=False, reason='Witness bond is not inside its matching.')
        if not _bond_is_valid(g, bond):
            return VerificationResult(valid=False, reason='Witness is not a bond.')
        if orientation is not None and not bond.is_directed_by(orientation):
            return VerificationResult(valid=False, reason='Witness bond is not directed.')
        covered.add(edges)
    if covered != constrained:
        return VerificationResult(
            valid=False, reason='{} constrained matchings lack a witness.'.format(len(constrained - covered)),
        )
    return VerificationResult(valid=True)


def every_matching_cut_certificate(g: MultiGraph) -> Optional[Certificate]:
    """
    Return a certificate that every perfect matching of `g` contains a cut, or None when some matching has none.

    For a cubic graph the certificate proves that `g` has no Hamiltonian cycle.
    """
    witnesses = []
    for matching in enumerate_perfect_matchings(g):
        bonds = bonds_within_matching(g, matching.edges)
        if not bonds:
            return None
        witnesses.append((matching.edges, bonds[0]))
    return Certificate(
        kind=CertificateKind.AllMatchingsCut, host=g, witnesses=tuple(witnesses), stats={'matchings': len(witnesses)},
    )
