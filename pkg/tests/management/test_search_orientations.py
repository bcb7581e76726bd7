# -*- coding: utf-8 -*-
"""
Tests for the django management command `search_orientations`.
"""
import json
import os
from io import StringIO

from django.core.management import CommandError, call_command

from pmcuts import constants
from pmcuts.choices import CampaignStatus, CertificateKind
from pmcuts.graphs.formats import write_graph6
from pmcuts.graphs.named import k33, petersen
from test_utils import constants as test_constants
from test_utils.testcase import PmcutsTestCase


class SearchOrientationsCommandTests(PmcutsTestCase):
    """
    Test command `search_orientations`.
    """

    command = 'search_orientations'

    def run_command(self, *args, returncode=constants.EXIT_COMPLETE):
        out = StringIO()
        if returncode == constants.EXIT_COMPLETE:
            call_command(self.command, *args, stdout=out)
        else:
            with self.assertRaises(CommandError) as context:
                call_command(self.command, *args, stdout=out)
            assert context.exception.returncode == returncode
        return json.loads(out.getvalue())

    def test_a_arc_search(self):
        """
        Test that the a-arc search reports a verified certificate per graph.
        """
        path = self.write_input('graphs.g6', '{}\n{}\n'.format(write_graph6(petersen()), test_constants.K4_GRAPH6))
        report = self.run_command(path, '--mode', 'a-arc', '--edge', '0')
        assert report['command'] == 'search a-arc'
        found, refuted = (item['certificate'] for item in report['items'])
        assert found['kind'] == CertificateKind.OrientationFound
        assert found['a_arc']['edge'] == 0
        assert len(found['witnesses']) == 2
        assert refuted['kind'] == CertificateKind.Refuted
        assert report['items'][1]['details'] == {'exhaustive': True}
        assert report['counts'][CampaignStatus.Holds] == 2

    def test_all_pm_cut_counterexample(self):
        """
        Test that an orientation found in all-pm-cut mode exits with the counterexample code.
        """
        path = self.write_input('edge.g6', test_constants.EDGE_GRAPH6)
        report = self.run_command(path, '--mode', 'all-pm-cut', returncode=constants.EXIT_COUNTEREXAMPLE)
        item = report['items'][0]
        assert item['status'] == CampaignStatus.Counterexample
        assert item['certificate']['orientation'] in ('O:1', 'O:2')

    def test_fixed_orientation(self):
        """
        Test that fixed arcs are passed to the search.
        """
        path = self.write_input('k4.g6', test_constants.K4_GRAPH6)
        fixed = self.write_input('k4.sidecar', test_constants.K4_SIDECAR)
        report = self.run_command(path, '--fix-orientation', fixed)
        assert report['items'][0]['certificate']['kind'] == CertificateKind.Refuted

    def test_fixed_orientation_of_another_graph(self):
        """
        Test that a fixed orientation of a different graph is reported as an item error.
        """
        path = self.write_input('k33.g6', write_graph6(k33()))
        fixed = self.write_input('k4.sidecar', test_constants.K4_SIDECAR)
        report = self.run_command(path, '--fix-orientation', fixed, returncode=constants.EXIT_USAGE)
        assert report['items'][0]['reason'] == 'The fixed orientation belongs to a different graph.'

    def test_unreadable_fixed_orientation(self):
        """
        Test that an unreadable sidecar file is a usage error.
        """
        path = self.write_input('k4.g6', test_constants.K4_GRAPH6)
        with self.assertRaises(CommandError) as context:
            call_command(self.command, path, '--fix-orientation', os.path.join(self.temp_dir, 'missing.sidecar'))
        assert context.exception.returncode == constants.EXIT_USAGE
        assert str(context.exception).startswith('Could not read the fixed orientation')

    def test_no_inputs(self):
        """
        Test that the command refuses to run without input files.
        """
        with self.assertRaises(CommandError) as context:
            call_command(self.command)
        assert context.exception.returncode == constants.EXIT_USAGE
