# -*- coding: utf-8 -*-
"""
Tests for the django management command `construct_graph`.
"""
import json
from io import StringIO

from ddt import data, ddt, unpack

from django.core.management import CommandError, call_command

from pmcuts import constants
from pmcuts.graphs.formats import parse_graph6, parse_sidecar
from pmcuts.graphs.properties import is_cubic
from test_utils import constants as test_constants
from test_utils.testcase import PmcutsTestCase


@ddt
class ConstructGraphCommandTests(PmcutsTestCase):
    """
    Test command `construct_graph`.
    """

    command = 'construct_graph'

    def run_command(self, *args):
        out = StringIO()
        call_command(self.command, *args, stdout=out)
        return out.getvalue().strip()

    def test_expand_named_graph(self):
        """
        Test that the cubic expansion of K4 is written as graph6.
        """
        graph = parse_graph6(self.run_command('--named', 'k4', '--step', 'expand'))
        assert graph.n == 12
        assert is_cubic(graph)

    def test_contract_given_triangle(self):
        """
        Test that contracting a triangle of the prism gives K4.
        """
        assert self.run_command('--named', 'prism', '--step', 'contract-triangle', '--vertices', '0,1,2') == 'C~'

    def test_chained_steps(self):
        """
        Test that steps are applied in order and reported in the JSON output.
        """
        output = json.loads(self.run_command(
            '--named', 'petersen', '--step', 'split', '--step', 'tilde', '--format', 'json',
        ))
        assert output['steps'] == ['split', 'tilde']
        assert output['orientation']['graph']['n'] == 32
        assert output['embedding'] is None

    def test_orient_file_input(self):
        """
        Test that the completion of a graph read from a file is written as a sidecar record.
        """
        path = self.write_input('k4.g6', test_constants.K4_GRAPH6)
        orientation = parse_sidecar(self.run_command(path, '--step', 'orient'))
        assert orientation.is_full()

    def test_dual_of_oriented_input(self):
        """
        Test that the dual keeps one arc per primal arc and carries its embedding.
        """
        path = self.write_input('k4.sidecar', test_constants.K4_SIDECAR)
        text = self.run_command(path, '--step', 'dual')
        assert text.startswith('C~\nO:')
        assert len(parse_sidecar(text).directed_edges()) == 2

        output = json.loads(self.run_command(path, '--step', 'dual', '--format', 'json'))
        assert len(output['embedding']['rotation']) == 4
        assert sum(1 for value in output['orientation']['state'] if value) == 2

    @data(
        ((), 'At least one construction step must be provided.'),
        (('--step', 'expand'), 'Exactly one of input or named must be provided.'),
        (('--named', 'k4', '--step', 'contract-triangle', '--vertices', 'a,b'), 'Vertices must be comma separated'),
        (('--named', 'k4', '--step', 'split'), 'Edge 0 cannot be an a-arc.'),
        (('--named', 'cube', '--step', 'contract-triangle'), 'The graph has no triangle.'),
    )
    @unpack
    def test_usage_errors(self, args, message):
        """
        Test that invalid options and failed constructions exit with the usage code.
        """
        with self.assertRaises(CommandError) as context:
            call_command(self.command, *args)
        assert context.exception.returncode == constants.EXIT_USAGE
        assert str(context.exception).startswith(message)

    def test_unreadable_input(self):
        """
        Test that a file without a readable graph is a usage error.
        """
        path = self.write_input('bad.g6', test_constants.TRIANGLE_BAD_PADDING)
        with self.assertRaises(CommandError) as context:
            call_command(self.command, path, '--step', 'expand')
        assert context.exception.returncode == constants.EXIT_USAGE
