# -*- coding: utf-8 -*-
"""
Management command for searching partial orientations in which perfect matchings contain directed cuts.
"""
import logging
from functools import partial

from django.utils.translation import gettext as _

from pmcuts import utils
from pmcuts.choices import SearchMode
from pmcuts.exceptions import GraphFormatError, InvalidCommandOptionsError
from pmcuts.graphs.formats import parse_sidecar
from pmcuts.management.base import PmcutsCommand
from pmcuts.serializers import CampaignReportSerializer

LOGGER = logging.getLogger(__name__)


class Command(PmcutsCommand):
    """
    Command to run the orientation search on every input graph and report one verified certificate per graph.

    Example usage:
        $ ./manage.py search_orientations --mode a-arc --edge 0 petersen.g6
        $ ./manage.py search_orientations --mode all-pm-cut hat.g6 --fix-orientation hat.sidecar
    """
    help = 'Searches orientations making every (constrained) perfect matching contain a directed cut.'

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
        parser.add_argument(
            '--mode',
            choices=[value for value, _label in SearchMode.choices],
            default=SearchMode.AArc,
            help=_('a-arc constrains the matchings through one edge, all-pm-cut constrains every matching.'),
        )
        parser.add_argument(
            '--edge',
            type=int,
            default=0,
            help=_('Edge id tested in a-arc mode.'),
        )
        parser.add_argument(
            '--fix-orientation',
            metavar=_('FILE'),
            default=None,
            help=_('Sidecar file with arcs fixed in advance; applies to inputs of the same graph.'),
        )
        self.add_jobs_argument(parser)
        self.add_output_argument(parser)

    def handle(self, *args, **options):
        """
        Entry point for management command execution.
        """
        if not options['inputs']:
            raise InvalidCommandOptionsError('At least one input file must be provided.')
        LOGGER.info('[PMCUTS] Search orientations. Options: [%s]', options)
        fixed = None
        if options['fix_orientation']:
            try:
                with open(options['fix_orientation']) as handle:
                    fixed = parse_sidecar(handle.read())
            except (OSError, GraphFormatError) as error:
                raise InvalidCommandOptionsError('Could not read the fixed orientation: {}'.format(error)) from error
        records = utils.read_records(options['inputs'])
        report = utils.run_campaign(
            'search {}'.format(options['mode']),
            records,
            partial(utils.search_record, mode=options['mode'], edge_id=options['edge'], fixed=fixed),
            options['jobs'],
        )
        self.write_json(CampaignReportSerializer(report).data, options['output'])
        self.finish(report.exit_code, 'Orientation search finished. Counts: {}'.format(report.counts))
