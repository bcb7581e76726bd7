# -*- coding: utf-8 -*-
"""
Management command for running a conjecture verification campaign.
"""
import json
import logging
import os

from django.utils.translation import gettext as _

from pmcuts import utils
from pmcuts.choices import CONJECTURE_CLASSES, CampaignStatus, Conjecture
from pmcuts.exceptions import InvalidCommandOptionsError
from pmcuts.generate import generate_cubic
from pmcuts.graphs.formats import GraphRecord
from pmcuts.management.base import PmcutsCommand
from pmcuts.serializers import CampaignReportSerializer, CertificateSerializer

LOGGER = logging.getLogger(__name__)


class Command(PmcutsCommand):
    """
    Command to check every input graph against one of the eight conjectures.

    Example usage:
        $ ./manage.py verify_conjecture --conjecture tutte --generate-up-to 16
        $ ./manage.py verify_conjecture --conjecture hochstaettler-prime census.g6 --jobs 8
        $ # Compare against the raw run without reduction filters.
        $ ./manage.py verify_conjecture --conjecture tait census.g6 --no-filters
    """
    help = 'Verifies a conjecture on the input graphs and writes counterexample certificates.'

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
            '--conjecture',
            choices=[value for value, _label in Conjecture.choices],
            required=True,
            help=_('Conjecture to verify.'),
        )
        parser.add_argument(
            '--generate-up-to',
            type=int,
            default=None,
            help=_('Also check every 3-connected cubic graph of the conjecture class up to this order.'),
        )
        parser.add_argument(
            '--max-n',
            type=int,
            default=None,
            help=_('Skip input graphs with more vertices.'),
        )
        parser.add_argument(
            '--no-filters',
            action='store_true',
            help=_('Disable the reduction filters.'),
        )
        parser.add_argument(
            '--certificate-dir',
            metavar=_('DIR'),
            default=None,
            help=_('Write every counterexample certificate to this directory.'),
        )
        self.add_jobs_argument(parser)
        self.add_output_argument(parser)

    def generated_records(self, conjecture, up_to):
        """
        Return records for the generated 3-connected cubic graphs of the conjecture's class.
        """
        bipartite = CONJECTURE_CLASSES[conjecture][0]
        records = []
        for n in range(4, up_to + 1, 2):
            for graph in generate_cubic(n, bipartite=bipartite, three_connected=True):
                source = 'generated:{}#{}'.format(n, len(records))
                records.append(GraphRecord(index=len(records), source=source, graph=graph))
        return records

    def write_certificates(self, report, directory):
        os.makedirs(directory, exist_ok=True)
        for item in report.items:
            if item.status == CampaignStatus.Counterexample and item.certificate is not None:
                path = os.path.join(directory, 'certificate-{}.json'.format(item.index))
                with open(path, 'w') as handle:
                    json.dump(CertificateSerializer(item.certificate).data, handle, indent=2)
                LOGGER.info('[PMCUTS] Certificate for %s written to %s', item.source, path)

    def handle(self, *args, **options):
        """
        Entry point for management command execution.
        """
        if not (options['inputs'] or options['generate_up_to']):
            raise InvalidCommandOptionsError('Either input files or generate_up_to must be provided.')
        LOGGER.info('[PMCUTS] Verify conjecture. Options: [%s]', options)
        conjecture = options['conjecture']
        records = []
        if options['generate_up_to']:
            records.extend(self.generated_records(conjecture, options['generate_up_to']))
        records.extend(utils.read_records(options['inputs']))
        for index, record in enumerate(records):
            record.index = index
        report = utils.verify_campaign(
            conjecture, records, filters=not options['no_filters'], max_n=options['max_n'], jobs=options['jobs'],
        )
        if options['certificate_dir']:
            self.write_certificates(report, options['certificate_dir'])
        self.write_json(CampaignReportSerializer(report).data, options['output'])
        self.finish(report.exit_code, 'Verification of {} finished. Counts: {}'.format(conjecture, report.counts))
