"""
Logging configuration used by the command line entry point.

Library modules only create loggers with ``logging.getLogger(__name__)``;
handlers are attached here, once, by the application.
"""

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int = 0) -> logging.Logger:
    """
    Attach a stderr handler to the package logger.

    Parameters
    ----------
    verbosity : int, default=0
        0 shows warnings, 1 adds info messages, 2 or more adds debug output.

    Returns
    -------
    logging.Logger
        The configured ``ExpSumLab`` logger.
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    logger = logging.getLogger("ExpSumLab")
    logger.setLevel(level)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logging.captureWarnings(True)
    return logger
