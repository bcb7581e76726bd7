# -*- coding: utf-8 -*-
"""
Management command for building graphs with the gadget and duality constructions.
"""
import logging

from django.core.management.base import CommandError
from django.utils.translation import gettext as _

from pmcuts import constants, utils
from pmcuts.choices import Construction
from pmcuts.exceptions import InvalidCommandOptionsError
from pmcuts.graphs.formats import iter_file_records
from pmcuts.graphs.multigraph import PartialOrientation
from pmcuts.graphs.named import NAMED_GRAPHS, named_graph
from pmcuts.management.base import PmcutsCommand
from pmcuts.serializers import EmbeddingSerializer, OrientationSerializer

LOGGER = logging.getLogger(__name__)


class Command(PmcutsCommand):
    """
    Command to apply a chain of constructions to one graph.

    Example usage:
        $ # The 122 vertex graph from an a-arc of the Petersen graph.
        $ ./manage.py construct_graph --named petersen --step tilde --step orient --step dplus
        $ ./manage.py construct_graph cube.pc --step dual --format json
        $ ./manage.py construct_graph --named prism --step contract-triangle --vertices 0,1,2
    """
    help = 'Applies split, hat, tilde, orient, dplus, contract-triangle, c4-reduce, expand or dual constructions.'

    def add_arguments(self, parser):
        """
        Add arguments to the command parser.
        """
        parser.add_argument(
            'input',
            metavar=_('FILE'),
            nargs='?',
            default=None,
            help=_('File whose first record is the starting graph.'),
        )
        parser.add_argument(
            '--named',
            choices=sorted(NAMED_GRAPHS),
            default=None,
            help=_('Start from a bundled named graph instead of a file.'),
        )
        parser.add_argument(
            '--step',
            choices=[value for value, _label in Construction.choices],
            action='append',
            default=[],
            help=_('Construction to apply; repeat to chain constructions.'),
        )
        parser.add_argument(
            '--edge',
            type=int,
            default=0,
            help=_('Edge id of the a-arc used by split, hat and tilde.'),
        )
        parser.add_argument(
            '--vertices',
            default=None,
            help=_('Comma separated triangle or 4-cycle for contract-triangle and c4-reduce.'),
        )
        parser.add_argument(
            '--variant',
            choices=('uv', 'vw'),
            default='uv',
            help=_('Which of the two 4-cycle reductions to keep.'),
        )
        parser.add_argument(
            '--format',
            choices=('text', 'json'),
            default='text',
            help=_('graph6 / sidecar text, or JSON with edge ids, states and the embedding.'),
        )
        self.add_output_argument(parser)

    def initial_state(self, options):
        """
        Return the construction state of the starting graph.
        """
        if bool(options['input']) == bool(options['named']):
            raise InvalidCommandOptionsError('Exactly one of input or named must be provided.')
        if options['named']:
            return utils.ConstructionState(orientation=PartialOrientation.undirected(named_graph(options['named'])))
        try:
            record = next(iter_file_records(options['input']), None)
        except OSError as error:
            raise InvalidCommandOptionsError('Could not read {}: {}'.format(options['input'], error)) from error
        if record is None or record.error is not None:
            raise InvalidCommandOptionsError('No graph could be read from {}.'.format(options['input']))
        orientation = record.orientation or PartialOrientation.undirected(record.graph)
        return utils.ConstructionState(orientation=orientation, embedding=record.embedding)

    def handle(self, *args, **options):
        """
        Entry point for management command execution.
        """
        if not options['step']:
            raise InvalidCommandOptionsError('At least one construction step must be provided.')
        vertices = None
        if options['vertices']:
            try:
                vertices = tuple(int(value) for value in options['vertices'].split(','))
            except ValueError as error:
                raise InvalidCommandOptionsError('Vertices must be comma separated integers.') from error
        LOGGER.info('[PMCUTS] Construct graph. Options: [%s]', options)
        state = self.initial_state(options)
        try:
            for step in options['step']:
                state = utils.apply_construction(
                    state, step, edge_id=options['edge'], vertices=vertices, variant=options['variant'],
                )
        except utils.ITEM_ERRORS as error:
            LOGGER.error('[PMCUTS] Construction failed: %s', error)
            raise CommandError(str(error), returncode=constants.EXIT_USAGE) from error
        text = utils.format_orientation(state.orientation)
        if options['format'] == 'json' or text is None:
            data = {
                'steps': state.history,
                'orientation': OrientationSerializer(state.orientation).data,
                'embedding': EmbeddingSerializer(state.embedding).data if state.embedding is not None else None,
            }
            self.write_json(data, options['output'])
        else:
            self.write_output(text, options['output'])
        LOGGER.info(
            '[PMCUTS] Construction chain %s finished. Vertices: [%s], edges: [%s]',
            state.history, state.graph.n, state.graph.m,
        )
