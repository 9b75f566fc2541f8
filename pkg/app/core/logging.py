"""Logging configuration for monodromy-atlas."""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from app.core.config import get_settings


def setup_logging(level_override: str | None = None) -> None:
    """Configure application-wide logging.

    ``level_override`` wins over ``LOG_LEVEL``; the CLI uses it for ``--verbose``.
    Handlers write to stderr so that JSON on stdout stays machine readable.
    """
    settings = get_settings()
    level_name = (level_override or settings.LOG_LEVEL).upper()
    level = getattr(logging, level_name, logging.INFO)
    fmt = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
    datefmt = "%Y-%m-%d %H:%M:%S"

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    log_file = settings.LOG_FILE
    if log_file:
        os.makedirs(os.path.dirname(log_file) or ".", exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file, maxBytes=10 * 1024 * 1024, backupCount=5, encoding="utf-8"
        )
        handlers.append(file_handler)

    logging.basicConfig(
        level=level,
        format=fmt,
        datefmt=datefmt,
        handlers=handlers,
        force=True,
    )

    # Quieten noisy libraries
    logging.getLogger("sympy").setLevel(logging.WARNING)
    logging.getLogger("hypothesis").setLevel(logging.WARNING)

    logger = logging.getLogger(__name__)
    logger.debug("Logging configured at level: %s", level_name)
    if log_file:
        logger.info("Logging to file: %s", log_file)
