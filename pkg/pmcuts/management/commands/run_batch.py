# -*- coding: utf-8 -*-
"""
Management command for running a campaign over a manifest of input files with parallel workers.
"""
import json
import logging
from functools import partial

from django.utils.translation import gettext as _

from pmcuts import utils
from pmcuts.choices import Conjecture, SearchMode
from pmcuts.exceptions import InvalidCommandOptionsError
from pmcuts.management.base import PmcutsCommand
from pmcuts.serializers import CampaignReportSerializer

LOGGER = logging.getLogger(__name__)

BATCH_COMMANDS = ('analyze', 'verify', 'search')


def batch_file(path, command, conjecture=None, mode=SearchMode.AArc, edge_id=0, filters=True, max_n=None):
    """
    Run `command` on one input file and return its report as plain JSON data.
    """
    records = utils.read_records([path])
    if command == 'analyze':
        report = utils.run_campaign('analyze', records, utils.analyze_record)
    elif command == 'verify':
        report = utils.verify_campaign(conjecture, records, filters=filters, max_n=max_n)
    else:
        report = utils.run_campaign(
            'search {}'.format(mode), records, partial(utils.search_record, mode=mode, edge_id=edge_id),
        )
    return {
        'input': path,
        'exit_code': report.exit_code,
        'report': json.loads(json.dumps(CampaignReportSerializer(report).data)),
    }


def read_manifest(path):
    """
    Return the input paths of a manifest, one per line; blank lines and `#` comments are ignored.
    """
    with open(path) as handle:
        lines = [line.split('#', 1)[0].strip() for line in handle]
    return [line for line in lines if line]


class Command(PmcutsCommand):
    """
    Command to run analyze, verify or search over every file of a manifest.

    Reports are merged in manifest order, so the output does not depend on the number of workers.

    Example usage:
        $ ./manage.py run_batch manifest.txt --command verify --conjecture tutte --jobs 8
        $ PMCUTS_JOBS=4 ./manage.py run_batch manifest.txt --command analyze
    """
    help = 'Runs a command over the files of a manifest with parallel workers and merges the reports.'

    def add_arguments(self, parser):
        """
        Add arguments to the command parser.
        """
        parser.add_argument(
            'manifest',
            metavar=_('MANIFEST'),
            help=_('File listing one input file per line.'),
        )
        parser.add_argument(
            '--command',
            choices=BATCH_COMMANDS,
            default='analyze',
            help=_('Command to run on every input file.'),
        )
        parser.add_argument(
            '--conjecture',
            choices=[value for value, _label in Conjecture.choices],
            default=None,
            help=_('Conjecture for the verify command.'),
        )
        parser.add_argument(
            '--mode',
            choices=[value for value, _label in SearchMode.choices],
            default=SearchMode.AArc,
            help=_('Mode of the search command.'),
        )
        parser.add_argument(
            '--edge',
            type=int,
            default=0,
            help=_('Edge id tested in a-arc mode.'),
        )
        parser.add_argument(
            '--max-n',
            type=int,
            default=None,
            help=_('Skip input graphs with more vertices (verify only).'),
        )
        parser.add_argument(
            '--no-filters',
            action='store_true',
            help=_('Disable the reduction filters (verify only).'),
        )
        self.add_jobs_argument(parser)
        self.add_output_argument(parser)

    def handle(self, *args, **options):
        """
        Entry point for management command execution.
        """
        if options['command'] == 'verify' and not options['conjecture']:
            raise InvalidCommandOptionsError('The verify command needs a conjecture.')
        try:
            paths = read_manifest(options['manifest'])
        except OSError as error:
            raise InvalidCommandOptionsError('Could not read manifest: {}'.format(error)) from error
        LOGGER.info('[PMCUTS] Run batch. Options: [%s], inputs: [%s]', options, len(paths))
        worker = partial(
            batch_file,
            command=options['command'],
            conjecture=options['conjecture'],
            mode=options['mode'],
            edge_id=options['edge'],
            filters=not options['no_filters'],
            max_n=options['max_n'],
        )
        results = utils.map_in_order(worker, paths, options['jobs'])
        exit_code = utils.combine_exit_codes(result['exit_code'] for result in results)
        self.write_json({'command': options['command'], 'exit_code': exit_code, 'files': results}, options['output'])
        self.finish(exit_code, 'Batch over {} files finished.'.format(len(results)))
