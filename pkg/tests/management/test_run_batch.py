# -*- coding: utf-8 -*-
"""
Tests for the django management command `run_batch`.
"""
import json
import os
from io import StringIO

from django.core.management import CommandError, call_command

from pmcuts import constants
from pmcuts.choices import CampaignStatus
from pmcuts.graphs.formats import write_graph6
from pmcuts.graphs.named import petersen, prism
from pmcuts.management.commands.run_batch import batch_file, read_manifest
from test_utils import constants as test_constants
from test_utils.testcase import PmcutsTestCase


class RunBatchCommandTests(PmcutsTestCase):
    """
    Test command `run_batch`.
    """

    command = 'run_batch'

    def setUp(self):
        super().setUp()
        self.k4 = self.write_input('k4.g6', test_constants.K4_GRAPH6)
        self.others = self.write_input('others.g6', '{}\n{}\n'.format(write_graph6(prism()), write_graph6(petersen())))
        self.bad = self.write_input('bad.g6', test_constants.TRIANGLE_BAD_PADDING)
        self.edge = self.write_input('edge.g6', test_constants.EDGE_GRAPH6)

    def manifest(self, *paths):
        return self.write_input('manifest.txt', '# inputs\n' + '\n\n'.join(paths) + '\n')

    def run_command(self, *args, returncode=constants.EXIT_COMPLETE):
        out = StringIO()
        if returncode == constants.EXIT_COMPLETE:
            call_command(self.command, *args, stdout=out)
        else:
            with self.assertRaises(CommandError) as context:
                call_command(self.command, *args, stdout=out)
            assert context.exception.returncode == returncode
        return json.loads(out.getvalue())

    def test_read_manifest(self):
        """
        Test that blank lines and comments are ignored.
        """
        path = self.write_input('list.txt', '# header\n{}  # first\n\n{}\n'.format(self.k4, self.others))
        assert read_manifest(path) == [self.k4, self.others]

    def test_batch_file(self):
        """
        Test the per file report of a verify run.
        """
        result = batch_file(self.others, 'verify', conjecture='tait')
        assert result['input'] == self.others
        assert result['exit_code'] == constants.EXIT_COMPLETE
        assert [item['status'] for item in result['report']['items']] == [
            CampaignStatus.Reduced, CampaignStatus.Skipped,
        ]

    def test_analyze_batch(self):
        """
        Test that reports are merged in manifest order and item errors set the exit code.
        """
        report = self.run_command(self.manifest(self.k4, self.bad, self.others), returncode=constants.EXIT_USAGE)
        assert report['command'] == 'analyze'
        assert [result['input'] for result in report['files']] == [self.k4, self.bad, self.others]
        assert [result['exit_code'] for result in report['files']] == [0, 3, 0]
        assert len(report['files'][2]['report']['items']) == 2

    def test_verify_batch(self):
        """
        Test a verify run over several files.
        """
        report = self.run_command(
            self.manifest(self.k4, self.others), '--command', 'verify', '--conjecture', 'tait', '--no-filters',
        )
        assert report['exit_code'] == constants.EXIT_COMPLETE
        assert report['files'][1]['report']['items'][0]['status'] == CampaignStatus.Holds

    def test_search_batch_counterexample(self):
        """
        Test that a counterexample in one file wins over errors in another.
        """
        report = self.run_command(
            self.manifest(self.bad, self.edge), '--command', 'search', '--mode', 'all-pm-cut',
            returncode=constants.EXIT_COUNTEREXAMPLE,
        )
        assert report['exit_code'] == constants.EXIT_COUNTEREXAMPLE
        assert [result['exit_code'] for result in report['files']] == [3, 1]

    def test_verify_needs_conjecture(self):
        """
        Test that the verify command needs a conjecture.
        """
        with self.assertRaises(CommandError) as context:
            call_command(self.command, self.manifest(self.k4), '--command', 'verify')
        assert context.exception.returncode == constants.EXIT_USAGE

    def test_missing_manifest(self):
        """
        Test that an unreadable manifest is a usage error.
        """
        with self.assertRaises(CommandError) as context:
            call_command(self.command, os.path.join(self.temp_dir, 'missing.txt'))
        assert context.exception.returncode == constants.EXIT_USAGE
        assert str(context.exception).startswith('Could not read manifest')
