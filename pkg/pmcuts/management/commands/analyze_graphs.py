# -*- coding: utf-8 -*-
"""
Management command for reporting the structural parameters of graphs.
"""
import logging

from django.utils.translation import gettext as _

from pmcuts import utils
from pmcuts.exceptions import InvalidCommandOptionsError
from pmcuts.management.base import PmcutsCommand
from pmcuts.serializers import CampaignReportSerializer

LOGGER = logging.getLogger(__name__)


class Command(PmcutsCommand):
    """
    Command to report size, girth, connectivity, matchings and Hamiltonicity of every input graph.

    Example usage:
        $ ./manage.py analyze_graphs petersen.g6 census.pc --output report.json
    """
    help = 'Reports the structural parameters of the graphs in the input files.'

    def add_arguments(self, parser):
        """
        Add arguments to the command parser.
        """
        parser.add_argument(
            'inputs',
            metavar=_('FILE'),
            nargs='*',
            help=_('graph6, sparse6, digraph6 or planar_code files.'),
        )
        self.add_jobs_argument(parser)
        self.add_output_argument(parser)

    def handle(self, *args, **options):
        """
        Entry point for management command execution.
        """
        if not options['inputs']:
            raise InvalidCommandOptionsError('At least one input file must be provided.')
        LOGGER.info('[PMCUTS] Analyze graphs. Options: [%s]', options)
        records = utils.read_records(options['inputs'])
        report = utils.run_campaign('analyze', records, utils.analyze_record, options['jobs'])
        self.write_json(CampaignReportSerializer(report).data, options['output'])
        self.finish(report.exit_code, 'Analyzed {} records.'.format(len(report.items)))
