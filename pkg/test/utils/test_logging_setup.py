"""
Tests for utils/logging_setup.py
"""

import logging

import pytest

from ExpSumLab.utils.logging_setup import configure_logging

@pytest.mark.parametrize(
    "verbosity, level",
    [(0, logging.WARNING), (1, logging.INFO), (2, logging.DEBUG), (5, logging.DEBUG)],
)
def test_verbosity_levels(verbosity, level):
    """-v raises the package log level step by step."""
    logger = configure_logging(verbosity)
    assert logger.name == "ExpSumLab"
    assert logger.level == level

def test_single_handler():
    """Repeated calls do not stack handlers."""
    configure_logging(0)
    logger = configure_logging(1)
    assert len(logger.handlers) == 1
    configure_logging(0)
