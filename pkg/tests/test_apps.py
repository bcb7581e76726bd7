# -*- coding: utf-8 -*-
"""
Tests for the `pmcuts` app.
"""
import logging

from testfixtures import LogCapture

import pmcuts
from pmcuts.apps import PmcutsConfig
from test_utils.testcase import PmcutsTestCase


class TestPmcutsConfig(PmcutsTestCase):
    """
    Validate pmcuts app configuration.
    """

    def setUp(self):
        """
        Set up test environment.
        """
        super().setUp()
        self.app_config = PmcutsConfig('pmcuts', pmcuts)

    def test_name(self):
        """
        Validate app config for pmcuts is setup correctly.
        """
        assert self.app_config.name == 'pmcuts'

    def test_ready_logs_bounds(self):
        """
        Validate that the search bounds are logged when the app is ready.
        """
        with LogCapture('pmcuts', level=logging.DEBUG) as log_capture:
            self.app_config.ready()
        assert 'App ready' in log_capture.records[0].getMessage()
