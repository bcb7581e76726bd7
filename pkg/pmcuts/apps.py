# -*- coding: utf-8 -*-
"""
Initialization code for pmcuts application.
"""
import logging

from django.apps import AppConfig

LOGGER = logging.getLogger(__name__)


class PmcutsConfig(AppConfig):
    """
    App configuration for pmcuts app.
    """

    name = 'pmcuts'
    verbose_name = 'Perfect matchings without cuts'

    def ready(self):
        """
        Log the active search bounds once the app registry is ready.
        """
        from pmcuts import constants  # pylint: disable=import-outside-toplevel
        LOGGER.debug(
            '[PMCUTS] App ready. Canonical bound: [%s], sweep bound: [%s], cycle space bound: [%s]',
            constants.CANONICAL_MAX_N, constants.SWEEP_MAX_EDGES, constants.CYCLE_SPACE_MAX_DIM,
        )
