"""Logging setup for the command line and the library.

Records go to standard error because standard output carries JSON results.
File logging is opt-in (``log_to_file`` in the config): a rotating run log
plus a separate rotating error log, both under the config home.
"""
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from .config import default_config_dir

RUN_LOG = 'thinness-lab.log'
ERROR_LOG = 'errors.log'

_FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s'
_CONSOLE_FORMAT = '%(levelname)s %(name)s: %(message)s'


def _rotating(path: Path, level: int, max_bytes: int, backup_count: int) -> RotatingFileHandler:
    handler = RotatingFileHandler(path, maxBytes=max_bytes, backupCount=backup_count, encoding='utf-8')
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(_FILE_FORMAT))
    return handler


def setup_logging(
    log_dir: Optional[Path] = None,
    level: int = logging.INFO,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
    console: bool = True,
    to_file: bool = False,
) -> logging.Logger:
    """Reset the root logger and attach the requested handlers.

    ``log_dir`` defaults to :func:`get_log_dir` and is only touched when
    ``to_file`` is set.
    """
    root = logging.getLogger()
    root.setLevel(level)
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()

    if console:
        stream = logging.StreamHandler(sys.stderr)
        stream.setLevel(level)
        stream.setFormatter(logging.Formatter(_CONSOLE_FORMAT))
        root.addHandler(stream)

    if to_file:
        target = Path(log_dir) if log_dir is not None else get_log_dir()
        target.mkdir(parents=True, exist_ok=True)
        root.addHandler(_rotating(target / RUN_LOG, level, max_bytes, backup_count))
        root.addHandler(_rotating(target / ERROR_LOG, logging.ERROR, max_bytes, backup_count))
        logging.getLogger(__name__).debug(f"Writing logs under {target}")

    return root


def get_log_dir() -> Path:
    return default_config_dir() / 'logs'
