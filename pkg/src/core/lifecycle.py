"""
Run lifecycle.

Author : Coke
Date   : 2025-06-03
"""

import logging
import logging.config
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator

from src.core.config import settings

logger = logging.getLogger(__name__)


def setup_logging(config_file: str | None = None, log_dir: str | None = None) -> None:
    """
    Configure logging from the ini file, falling back to a basic stderr handler.

    Args:
        config_file (str | None): Path of the logging ini file (default settings.LOG_CONFIG).
        log_dir (str | None): Directory of the rotating log file (default settings.LOG_DIR).
    """
    config_file = config_file or settings.LOG_CONFIG
    log_dir = log_dir or settings.LOG_DIR

    if Path(config_file).is_file():
        Path(log_dir).mkdir(parents=True, exist_ok=True)
        logging.config.fileConfig(config_file, defaults={"logdir": log_dir}, disable_existing_loggers=False)
    else:
        logging.basicConfig(format="%(asctime)s | %(levelname)-8s | [%(name)s] - %(message)s")

    logging.getLogger("src").setLevel(settings.LOG_LEVEL.upper())


@contextmanager
def lifespan(mode: str) -> Iterator[None]:
    """
    Lab run lifecycle.
    Args:
        mode: Experiment mode being executed.
    """
    setup_logging()
    before = time.time()
    logger.info("Run startup complete. mode=%s version=%s threads=%d", mode, settings.APP_VERSION, settings.THREADS)

    yield

    duration = round((time.time() - before) * 1000)
    logger.info("Run shutdown complete. mode=%s %dms", mode, duration)
