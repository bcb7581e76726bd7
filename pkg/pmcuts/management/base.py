# -*- coding: utf-8 -*-
"""
Base class of the pmcuts management commands.
"""
import json
import logging

from django.core.management.base import BaseCommand, CommandError
from django.utils.translation import gettext as _

from pmcuts import constants
from pmcuts.exceptions import InvalidCommandOptionsError

LOGGER = logging.getLogger(__name__)


class PmcutsCommand(BaseCommand):
    """
    Shared options, JSON output and exit codes of the pmcuts commands.

    A run that ends with a counterexample, an incomplete status or per item errors raises `CommandError` with
    the matching exit code after its report has been written. Invalid options exit with the usage code.
    """

    def add_jobs_argument(self, parser):
        parser.add_argument(
            '--jobs',
            type=int,
            default=constants.DEFAULT_JOBS,
            help=_('Number of worker processes; defaults to the PMCUTS_JOBS environment variable.'),
        )

    def add_output_argument(self, parser):
        parser.add_argument(
            '--output',
            metavar=_('PATH'),
            default=None,
            help=_('Write the report to this file instead of standard output.'),
        )

    def write_output(self, text, output=None):
        if output:
            with open(output, 'w') as handle:
                handle.write(text)
                if not text.endswith('\n'):
                    handle.write('\n')
        else:
            self.stdout.write(text)

    def write_json(self, data, output=None):
        self.write_output(json.dumps(data, indent=2), output)

    def finish(self, exit_code, message):
        """
        Log the summary and turn a non zero exit code into `CommandError`.
        """
        LOGGER.info('[PMCUTS] %s Exit code: [%s]', message, exit_code)
        if exit_code != constants.EXIT_COMPLETE:
            raise CommandError(message, returncode=exit_code)

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except InvalidCommandOptionsError as error:
            raise CommandError(str(error), returncode=constants.EXIT_USAGE) from error
