# -*- coding: utf-8 -*-
"""
Tests for the django management command `verify_conjecture`.
"""
import json
import os
from io import StringIO

import mock
from ddt import data, ddt, unpack

from django.core.management import CommandError, call_command

from pmcuts import constants
from pmcuts.choices import CampaignStatus, CertificateKind
from pmcuts.graphs.formats import write_graph6
from pmcuts.graphs.named import k4, petersen, prism
from pmcuts.search import SearchProblem, verify_certificate
from pmcuts.serializers import load_certificate
from test_utils.testcase import PmcutsTestCase


@ddt
class VerifyConjectureCommandTests(PmcutsTestCase):
    """
    Test command `verify_conjecture`.
    """

    command = 'verify_conjecture'

    def setUp(self):
        super().setUp()
        self.graphs = self.write_input(
            'graphs.g6', '\n'.join(write_graph6(graph) for graph in (k4(), prism(), petersen())) + '\n',
        )

    def run_command(self, *args, returncode=constants.EXIT_COMPLETE):
        out = StringIO()
        if returncode == constants.EXIT_COMPLETE:
            call_command(self.command, *args, stdout=out)
        else:
            with self.assertRaises(CommandError) as context:
                call_command(self.command, *args, stdout=out)
            assert context.exception.returncode == returncode
        return json.loads(out.getvalue())

    def test_tait_campaign(self):
        """
        Test the statuses of a Tait campaign over a small file.
        """
        report = self.run_command(self.graphs, '--conjecture', 'tait')
        assert report['command'] == 'verify tait'
        assert [item['status'] for item in report['items']] == [
            CampaignStatus.Holds, CampaignStatus.Reduced, CampaignStatus.Skipped,
        ]
        assert report['items'][2]['reason'] == 'not planar'

    def test_no_filters(self):
        """
        Test that `--no-filters` checks the prism directly.
        """
        report = self.run_command(self.graphs, '--conjecture', 'tait', '--no-filters')
        assert report['items'][1]['status'] == CampaignStatus.Holds
        assert len(report['items'][1]['details']['hamiltonian_cycle']) == 6

    def test_max_n(self):
        """
        Test that `--max-n` skips larger graphs.
        """
        report = self.run_command(self.graphs, '--conjecture', 'hochstaettler-prime', '--max-n', '4')
        assert report['items'][1]['status'] == CampaignStatus.Skipped
        assert report['items'][1]['reason'] == 'more than 4 vertices'

    @data(
        ('tait', 1 + 2 + 4),
        ('barnette', 0 + 1 + 1),
    )
    @unpack
    def test_generated_graphs(self, conjecture, expected):
        """
        Test that generated 3-connected cubic graphs of the conjecture class are checked.
        """
        report = self.run_command('--conjecture', conjecture, '--generate-up-to', '8')
        assert len(report['items']) == expected
        assert all(item['source'].startswith('generated:') for item in report['items'])
        assert report['counts'][CampaignStatus.Counterexample] == 0

    def test_generated_and_file_records_are_numbered(self):
        """
        Test that file records follow the generated ones.
        """
        report = self.run_command(self.graphs, '--conjecture', 'tait', '--generate-up-to', '4')
        assert [item['index'] for item in report['items']] == [0, 1, 2, 3]
        assert report['items'][0]['source'] == 'generated:4#0'

    def test_counterexample_certificate(self):
        """
        Test that counterexamples exit with code 1 and leave a verifiable certificate.
        """
        directory = os.path.join(self.temp_dir, 'certificates')
        path = self.write_input('petersen.g6', write_graph6(petersen()))
        with mock.patch('pmcuts.utils.class_mismatch', return_value=''):
            report = self.run_command(
                path, '--conjecture', 'tutte', '--no-filters', '--certificate-dir', directory,
                returncode=constants.EXIT_COUNTEREXAMPLE,
            )
        assert report['items'][0]['certificate']['kind'] == CertificateKind.AllMatchingsCut
        with open(os.path.join(directory, 'certificate-0.json')) as handle:
            certificate = load_certificate(json.load(handle))
        self.assertVerified(verify_certificate(certificate, SearchProblem(host=certificate.host)))

    def test_incomplete(self):
        """
        Test that hitting a size bound exits with the incomplete code.
        """
        path = self.write_input('k4.g6', write_graph6(k4()))
        with mock.patch.object(constants, 'CYCLE_SPACE_MAX_DIM', 1):
            report = self.run_command(
                path, '--conjecture', 'hochstaettler', returncode=constants.EXIT_INCOMPLETE,
            )
        assert report['counts'][CampaignStatus.Incomplete] == 1

    def test_missing_input_file(self):
        """
        Test that an unreadable input file is an error item.
        """
        missing = os.path.join(self.temp_dir, 'missing.g6')
        report = self.run_command(missing, '--conjecture', 'tait', returncode=constants.EXIT_USAGE)
        assert report['items'][0]['status'] == CampaignStatus.Error
        assert report['items'][0]['source'] == missing

    def test_no_inputs(self):
        """
        Test that the command needs input files or generated graphs.
        """
        with self.assertRaises(CommandError) as context:
            call_command(self.command, '--conjecture', 'tait')
        assert context.exception.returncode == constants.EXIT_USAGE
