"""
Logging for the toolkit: a quiet stderr console and rotating files under the
configured log directory.
"""
import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path

from .config import app_config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
MAX_LOG_BYTES = 10 * 1024 * 1024
LOG_BACKUPS = 5


class DebugOnlyFilter(logging.Filter):
    """Pass DEBUG records only, so debug.log does not repeat compute.log"""

    def filter(self, record: logging.LogRecord) -> bool:
        return record.levelno == logging.DEBUG


def _rotating_handler(path: Path, level: int, formatter: logging.Formatter) -> RotatingFileHandler:
    handler = RotatingFileHandler(
        path, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUPS, encoding='utf-8'
    )
    handler.setFormatter(formatter)
    handler.setLevel(level)
    return handler


def setup_logger(name: str) -> logging.Logger:
    """
    Configure the named logger once.

    Reports go to stdout, so the console handler writes to stderr and stays at
    WARNING unless DEBUG is set. Factorization progress lands in compute.log;
    with DEBUG on, per-degree tracing goes to debug.log.
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    runtime = app_config.runtime_config
    debug_mode = runtime['debug']
    logger.setLevel(logging.DEBUG if debug_mode else logging.INFO)
    logger.propagate = False

    log_dir: Path = runtime['log_dir']
    log_dir.mkdir(parents=True, exist_ok=True)
    formatter = logging.Formatter(LOG_FORMAT)

    console = logging.StreamHandler()
    console.setFormatter(formatter)
    console.setLevel(logging.DEBUG if debug_mode else logging.WARNING)
    logger.addHandler(console)

    logger.addHandler(_rotating_handler(log_dir / 'compute.log', logging.INFO, formatter))

    if debug_mode:
        debug_handler = _rotating_handler(log_dir / 'debug.log', logging.DEBUG, formatter)
        debug_handler.addFilter(DebugOnlyFilter())
        logger.addHandler(debug_handler)

    return logger


logger = setup_logger('toricshift')
