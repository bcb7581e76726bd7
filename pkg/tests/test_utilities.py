# -*- coding: utf-8 -*-
"""
Tests for the per record drivers shared by the pmcuts management commands.
"""
import logging

import ddt
import mock
import pytest
from testfixtures import LogCapture

from pmcuts import constants
from pmcuts.choices import CampaignStatus, CertificateKind, Conjecture, Construction, SearchMode
from pmcuts.exceptions import ContractViolationError, GraphFormatError, InvalidCommandOptionsError
from pmcuts.graphs.formats import iter_text_records
from pmcuts.graphs.multigraph import MultiGraph, PartialOrientation
from pmcuts.graphs.named import cube, k4, k33, petersen, prism
from pmcuts.graphs.properties import is_cubic
from pmcuts.search import VerificationResult
from pmcuts.utils import (
    CampaignItem,
    CampaignReport,
    ConstructionState,
    analyze_record,
    apply_construction,
    class_mismatch,
    combine_exit_codes,
    format_orientation,
    map_in_order,
    read_records,
    search_record,
    verify_campaign,
    verify_record,
)
from test_utils import constants as test_constants
from test_utils.factories import GraphRecordFactory
from test_utils.testcase import PmcutsTestCase

TRIANGLE = MultiGraph(n=3, edges=((0, 1), (0, 2), (1, 2)))
SQUARE = MultiGraph(n=4, edges=((0, 1), (1, 2), (2, 3), (0, 3)))
THETA = MultiGraph(n=2, edges=((0, 1), (0, 1), (0, 1)))
SINGLE_EDGE = MultiGraph(n=2, edges=((0, 1),))


def k4_sidecar_record():
    return next(iter_text_records(test_constants.K4_SIDECAR.splitlines(), source='sidecar'))


@ddt.ddt
class TestClassMismatch(PmcutsTestCase):
    """
    Validate the graph class checks of the conjectures.
    """

    @ddt.data(
        (Conjecture.Tait, k4(), ''),
        (Conjecture.Tait, petersen(), 'not planar'),
        (Conjecture.Tait, THETA, 'not 3-connected'),
        (Conjecture.Tait, TRIANGLE, 'not cubic'),
        (Conjecture.Barnette, k4(), 'not bipartite'),
        (Conjecture.Barnette, cube(), ''),
        (Conjecture.Tutte, k33(), ''),
        (Conjecture.KV, petersen(), 'not bipartite'),
        (Conjecture.HochstaettlerPrime, petersen(), ''),
        (Conjecture.NeumannLara, TRIANGLE, ''),
        (Conjecture.NeumannLara, k33(), 'not planar'),
        (Conjecture.Hochstaettler, SQUARE, 'not 3-edge-connected'),
        (Conjecture.Hochstaettler, petersen(), ''),
    )
    @ddt.unpack
    def test_class_mismatch(self, conjecture, graph, expected):
        """
        Validate the reason reported for graphs outside a conjecture's class.
        """
        assert class_mismatch(conjecture, graph) == expected


@ddt.ddt
class TestVerifyRecord(PmcutsTestCase):
    """
    Validate `verify_record` for undirected and directed conjectures.
    """

    def test_tait_on_k4(self):
        """
        Validate that K4 holds for Tait with a Hamiltonian cycle as evidence.
        """
        item = verify_record(GraphRecordFactory(graph=k4()), Conjecture.Tait)
        assert item.status == CampaignStatus.Holds
        cycle = item.details['hamiltonian_cycle']
        assert sorted(cycle) == [0, 1, 2, 3]

    def test_prism_reduction_filter(self):
        """
        Validate that triangle contraction covers the prism unless filters are off.
        """
        record = GraphRecordFactory(graph=prism())
        item = verify_record(record, Conjecture.Tait)
        assert item.status == CampaignStatus.Reduced
        assert item.reason == 'triangle contraction'

        item = verify_record(record, Conjecture.Tait, filters=False)
        assert item.status == CampaignStatus.Holds
        cycle = item.details['hamiltonian_cycle']
        assert sorted(cycle) == list(range(6))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            assert prism().edges_between(a, b)

    def test_tutte_girth_filter(self):
        """
        Validate that graphs of girth below 6 are covered by the Tutte reduction filter.
        """
        item = verify_record(GraphRecordFactory(graph=k33()), Conjecture.Tutte)
        assert item.status == CampaignStatus.Reduced
        assert item.reason == 'girth below 6'

    def test_class_mismatch_is_skipped(self):
        """
        Validate that a graph outside the class is skipped with a warning.
        """
        record = GraphRecordFactory(graph=petersen(), source='petersen')
        with LogCapture('pmcuts.utils', level=logging.WARNING) as logger:
            item = verify_record(record, Conjecture.Tait)
            logger.check_present(
                ('pmcuts.utils', 'WARNING', '[PMCUTS] petersen skipped for tait: not planar'),
            )
        assert item.status == CampaignStatus.Skipped
        assert item.reason == 'not planar'

    def test_max_n(self):
        """
        Validate that records above `max_n` are skipped.
        """
        item = verify_record(GraphRecordFactory(graph=petersen()), Conjecture.HochstaettlerPrime, max_n=8)
        assert item.status == CampaignStatus.Skipped
        assert item.reason == 'more than 8 vertices'

    def test_error_record(self):
        """
        Validate that a record carrying a parse error becomes an error item.
        """
        record = GraphRecordFactory(graph=None, error=GraphFormatError('Bad line'))
        item = verify_record(record, Conjecture.Tait)
        assert item.status == CampaignStatus.Error
        assert item.reason == 'Bad line'

    def test_non_hamiltonian_counterexample(self):
        """
        Validate that a non Hamiltonian graph yields a verified every-matching-cut certificate.
        """
        with mock.patch('pmcuts.utils.class_mismatch', return_value=''):
            item = verify_record(GraphRecordFactory(graph=petersen()), Conjecture.Tutte, filters=False)
        assert item.status == CampaignStatus.Counterexample
        assert item.certificate.kind == CertificateKind.AllMatchingsCut
        assert len(item.certificate.witnesses) == 6

    def test_kv_edge_filter(self):
        """
        Validate that K3,3 holds for the bipartite directed conjecture, with and without the a-arc filter.
        """
        record = GraphRecordFactory(graph=k33())
        item = verify_record(record, Conjecture.KV)
        assert item.status == CampaignStatus.Holds
        assert item.reason == 'edge 0 cannot be an a-arc'

        item = verify_record(record, Conjecture.KV, filters=False)
        assert item.status == CampaignStatus.Holds
        assert item.reason == ''

    def test_petersen_hochstaettler_prime(self):
        """
        Validate that the Petersen graph has no orientation in which every perfect matching contains a directed cut.
        """
        item = verify_record(GraphRecordFactory(graph=petersen()), Conjecture.HochstaettlerPrime)
        assert item.status == CampaignStatus.Holds

    def test_oriented_record_with_good_matching(self):
        """
        Validate that a given orientation is checked for a good matching.
        """
        item = verify_record(k4_sidecar_record(), Conjecture.NeumannLaraPrime)
        assert item.status == CampaignStatus.Holds
        assert item.details['good_matching'] == [0, 5]

    def test_directed_counterexample_is_verified(self):
        """
        Validate that an orientation found by the search is reported as a verified counterexample.
        """
        record = GraphRecordFactory(graph=SINGLE_EDGE)
        with mock.patch('pmcuts.utils.class_mismatch', return_value=''):
            item = verify_record(record, Conjecture.KV)
        assert item.status == CampaignStatus.Counterexample
        assert item.certificate.kind == CertificateKind.OrientationFound

    def test_failed_certificate_is_an_error(self):
        """
        Validate that a certificate failing verification is never reported as a counterexample.
        """
        record = GraphRecordFactory(graph=SINGLE_EDGE, source='edge')
        forged = VerificationResult(valid=False, reason='forged')
        with mock.patch('pmcuts.utils.class_mismatch', return_value=''), \
                mock.patch('pmcuts.utils.verify_certificate', return_value=forged), \
                LogCapture('pmcuts.utils', level=logging.ERROR) as logger:
            item = verify_record(record, Conjecture.KV)
            logger.check_present(
                ('pmcuts.utils', 'ERROR', '[PMCUTS] Certificate for edge failed verification: forged'),
            )
        assert item.status == CampaignStatus.Error
        assert item.reason == 'Certificate failed verification: forged'

    def test_neumann_lara_orientations(self):
        """
        Validate that every orientation of the triangle is checked for an acyclic two-colouring.
        """
        item = verify_record(GraphRecordFactory(graph=TRIANGLE), Conjecture.NeumannLara)
        assert item.status == CampaignStatus.Holds
        assert item.details['checked'] == 8

    def test_partial_orientation_is_skipped(self):
        """
        Validate that the Neumann-Lara check skips partial orientations.
        """
        item = verify_record(k4_sidecar_record(), Conjecture.NeumannLara)
        assert item.status == CampaignStatus.Skipped
        assert item.reason == 'orientation is not full'

    def test_bound_exceeded_is_incomplete(self):
        """
        Validate that a size bound turns into an incomplete item.
        """
        with mock.patch.object(constants, 'CYCLE_SPACE_MAX_DIM', 1):
            item = verify_record(GraphRecordFactory(graph=k4()), Conjecture.Hochstaettler)
        assert item.status == CampaignStatus.Incomplete
        assert 'exceeds the exhaustive bound 1' in item.reason


class TestSearchRecord(PmcutsTestCase):
    """
    Validate `search_record`.
    """

    def test_a_arc_found(self):
        """
        Validate that an a-arc search that succeeds holds with a certificate.
        """
        item = search_record(GraphRecordFactory(graph=petersen()), SearchMode.AArc)
        assert item.status == CampaignStatus.Holds
        assert item.certificate.kind == CertificateKind.OrientationFound
        assert item.details == {'exhaustive': True}

    def test_a_arc_refuted(self):
        """
        Validate that a refuted a-arc search holds with a re-checked refutation.
        """
        item = search_record(GraphRecordFactory(graph=k4()), SearchMode.AArc, edge_id=2)
        assert item.status == CampaignStatus.Holds
        assert item.certificate.kind == CertificateKind.Refuted
        assert item.details == {'exhaustive': True}

    def test_all_pm_cut_counterexample(self):
        """
        Validate that an orientation directing a cut in every perfect matching is a counterexample.
        """
        item = search_record(GraphRecordFactory(graph=SINGLE_EDGE), SearchMode.AllPmCut)
        assert item.status == CampaignStatus.Counterexample
        assert item.certificate.orientation.is_directed(0)

    def test_fixed_orientation_of_another_graph(self):
        """
        Validate that a fixed orientation of a different graph is an error item.
        """
        item = search_record(
            GraphRecordFactory(graph=k4()), SearchMode.AArc, fixed=PartialOrientation.undirected(k33()),
        )
        assert item.status == CampaignStatus.Error
        assert item.reason == 'The fixed orientation belongs to a different graph.'

    def test_unknown_edge(self):
        """
        Validate that an edge id outside the graph is an error item.
        """
        item = search_record(GraphRecordFactory(graph=k4()), SearchMode.AArc, edge_id=99)
        assert item.status == CampaignStatus.Error


class TestAnalyzeRecord(PmcutsTestCase):
    """
    Validate `analyze_record`.
    """

    def test_analysis(self):
        """
        Validate the analysis of the Petersen graph.
        """
        item = analyze_record(GraphRecordFactory(graph=petersen()))
        assert item.status == CampaignStatus.Holds
        analysis = item.analysis
        assert analysis.girth == 5
        assert analysis.cyclic_connectivity == 5
        assert analysis.perfect_matchings == 6
        assert analysis.min_cut_in_perfect_matching == 5
        assert not analysis.hamiltonian
        assert not analysis.planar

    def test_non_cubic_analysis(self):
        """
        Validate that cubic-only parameters are left out for other graphs.
        """
        analysis = analyze_record(GraphRecordFactory(graph=TRIANGLE)).analysis
        assert not analysis.cubic
        assert analysis.cyclic_connectivity is None
        assert analysis.min_cut_in_perfect_matching is None
        assert analysis.perfect_matchings == 0
        assert analysis.hamiltonian

    def test_error_record(self):
        """
        Validate that a parse error is kept on the item.
        """
        item = analyze_record(GraphRecordFactory(graph=None, error=GraphFormatError('Bad line')))
        assert item.status == CampaignStatus.Error
        assert item.analysis is None


class TestConstructions(PmcutsTestCase):
    """
    Validate `apply_construction` chains.
    """

    def start(self, graph):
        return ConstructionState(orientation=PartialOrientation.undirected(graph))

    def test_split_then_tilde(self):
        """
        Validate that the tilde step reuses the split gadget of the previous step.
        """
        state = apply_construction(self.start(petersen()), Construction.Split)
        assert state.graph.n == 12
        assert state.gadget is not None
        assert state.history == [Construction.Split]

        state = apply_construction(state, Construction.Tilde)
        assert state.graph.n == 32
        assert state.gadget is None
        assert state.history == [Construction.Split, Construction.Tilde]

    def test_split_needs_a_arc(self):
        """
        Validate that a split at an edge that cannot be an a-arc is refused.
        """
        with pytest.raises(ContractViolationError, match='Edge 0 cannot be an a-arc.'):
            apply_construction(self.start(k4()), Construction.Split)

    def test_reductions(self):
        """
        Validate the triangle contraction and both 4-cycle reductions.
        """
        assert apply_construction(self.start(prism()), Construction.ContractTriangle).graph.n == 4
        for variant in ('uv', 'vw'):
            state = apply_construction(self.start(cube()), Construction.C4Reduce, variant=variant)
            assert state.graph.n == 6
            assert is_cubic(state.graph)
        with pytest.raises(ContractViolationError, match='no triangle'):
            apply_construction(self.start(cube()), Construction.ContractTriangle)

    def test_orient_and_expand(self):
        """
        Validate the completion and the cubic expansion steps.
        """
        state = apply_construction(self.start(k33()), Construction.Orient)
        assert state.orientation.is_full()

        with LogCapture('pmcuts.utils', level=logging.INFO) as logger:
            state = apply_construction(self.start(k4()), Construction.Expand)
            logger.check_present(
                ('pmcuts.utils', 'INFO', '[PMCUTS] Construction [expand] built a graph on [12] vertices.'),
            )
        assert state.graph.n == 12

    def test_dual(self):
        """
        Validate that the dual step carries the dual embedding.
        """
        state = apply_construction(self.start(prism()), Construction.Dual)
        assert state.graph.n == 5
        assert state.graph.m == 9
        assert state.embedding is not None

    def test_unknown_step(self):
        """
        Validate that unknown steps are usage errors.
        """
        with pytest.raises(InvalidCommandOptionsError):
            apply_construction(self.start(k4()), 'twist')

    def test_format_orientation(self):
        """
        Validate the text output of construction results.
        """
        assert format_orientation(PartialOrientation.undirected(k4())) == test_constants.K4_GRAPH6
        assert format_orientation(k4_sidecar_record().orientation) == test_constants.K4_SIDECAR
        assert format_orientation(PartialOrientation.undirected(THETA)) is None


@ddt.ddt
class TestCampaigns(PmcutsTestCase):
    """
    Validate campaign reports, record reading and exit codes.
    """

    @ddt.data(
        ([], constants.EXIT_COMPLETE),
        ([CampaignStatus.Holds, CampaignStatus.Skipped, CampaignStatus.Reduced], constants.EXIT_COMPLETE),
        ([CampaignStatus.Holds, CampaignStatus.Error], constants.EXIT_USAGE),
        ([CampaignStatus.Error, CampaignStatus.Incomplete], constants.EXIT_INCOMPLETE),
        (
            [CampaignStatus.Incomplete, CampaignStatus.Counterexample, CampaignStatus.Error],
            constants.EXIT_COUNTEREXAMPLE,
        ),
    )
    @ddt.unpack
    def test_exit_code(self, statuses, expected):
        """
        Validate the precedence of campaign exit codes.
        """
        report = CampaignReport(command='test', items=[
            CampaignItem(index=index, source='test', status=status) for index, status in enumerate(statuses)
        ])
        assert report.exit_code == expected
        assert sum(report.counts.values()) == len(statuses)

    @ddt.data(
        ([0, 0], 0),
        ([0, 3], 3),
        ([3, 2, 0], 2),
        ([2, 1, 3], 1),
    )
    @ddt.unpack
    def test_combine_exit_codes(self, codes, expected):
        """
        Validate that combined runs keep the strongest exit code.
        """
        assert combine_exit_codes(codes) == expected

    def test_map_in_order(self):
        """
        Validate that results keep input order with and without workers.
        """
        assert map_in_order(abs, [-3, 1, -2]) == [3, 1, 2]
        assert map_in_order(abs, [-3, 1, -2], jobs=2) == [3, 1, 2]

    def test_read_records(self):
        """
        Validate that unreadable files become error records and records are numbered across files.
        """
        path = self.write_input('graphs.g6', 'C~\nBw\n')
        missing = self.write_input('ignored.g6', '') + '.missing'
        with LogCapture('pmcuts.utils', level=logging.ERROR) as logger:
            records = read_records([path, missing])
            assert len(logger.records) == 1
        assert [record.index for record in records] == [0, 1, 2]
        assert records[0].graph == k4()
        assert records[1].graph == TRIANGLE
        assert records[2].source == missing
        assert isinstance(records[2].error, OSError)

    def test_verify_campaign(self):
        """
        Validate the statuses and counts of a small Tait campaign.
        """
        records = [GraphRecordFactory(index=index, graph=graph) for index, graph in enumerate((k4(), prism(), k33()))]
        report = verify_campaign(Conjecture.Tait, records)
        assert report.command == 'verify tait'
        assert [item.status for item in report.items] == [
            CampaignStatus.Holds, CampaignStatus.Reduced, CampaignStatus.Skipped,
        ]
        assert report.counts[CampaignStatus.Holds] == 1
        assert report.exit_code == constants.EXIT_COMPLETE

    def test_incomplete_campaign(self):
        """
        Validate that a campaign hitting a size bound exits as incomplete.
        """
        with mock.patch.object(constants, 'CYCLE_SPACE_MAX_DIM', 1):
            report = verify_campaign(Conjecture.Hochstaettler, [GraphRecordFactory(graph=k4())])
        assert report.items[0].status == CampaignStatus.Incomplete
        assert report.exit_code == constants.EXIT_INCOMPLETE
