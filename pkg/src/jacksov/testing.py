"""
Helper functions for testing.
"""

import logging

from .config import set_in_test, get_in_test
from ._logging import JACKSOV_LOGGER, _update_logger_handlers


def setup():
    if not get_in_test():
        set_in_test()
    _update_logger_handlers(JACKSOV_LOGGER)


def teardown():
    """Closes the handlers of every package logger; call after each test."""
    loggers = [
        name for name in logging.root.manager.loggerDict if name.startswith("jacksov.")
    ] + ["jacksov"]

    for logger in (logging.getLogger(name) for name in loggers):
        # copy, handlers are removed while closing
        for handler in list(logger.handlers):
            handler.close()
