from typing import Optional, Set
from pathlib import Path
import logging
import os

from .utils.modules import resolve
from .config import get_config, get_config_dir

get_config()
LOGGINGDIR = get_config_dir() / "logs"

DEFAULT_MAX_FORMAT_LENGTH = int(os.environ.get("JACKSOV_LOG_MAX_FORMAT_LENGTH", 5000))
DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class NotTooLongStringFormatter(logging.Formatter):
    """
    A formatter that truncates messages longer than `max_length`.

    Records carrying exception information are never truncated.
    Coefficient tables and polynomials can get long, so the default limit is
    generous.
    """

    def __init__(self, *args, max_length: Optional[int] = None, **kwargs):
        if max_length is None:
            max_length = int(
                os.environ.get("JACKSOV_LOG_MAX_FORMAT_LENGTH", DEFAULT_MAX_FORMAT_LENGTH)
            )
        super().__init__(*args, **kwargs)
        self.max_length = max(int(max_length) - 3, 0)

    def format(self, record):
        s = super().format(record)
        if record.exc_info:
            return s
        if len(s) > self.max_length:
            s = s[: self.max_length] + "..."
        return s


_formatter = NotTooLongStringFormatter(
    DEFAULT_FORMAT, max_length=DEFAULT_MAX_FORMAT_LENGTH
)


def _overwrite_add_handler(logger: logging.Logger):
    """
    Makes `logger.addHandler` apply the package formatter and ignore
    handlers that are already attached.

    Example:
      >>> _overwrite_add_handler(JACKSOV_LOGGER)
    """
    _old_add_handler = logger.addHandler

    def _new_add_handler(hdlr):
        hdlr.setFormatter(_formatter)
        if hdlr not in logger.handlers:
            _old_add_handler(hdlr)

    logger.addHandler = _new_add_handler


def getChildren(logger: logging.Logger) -> Set[logging.Logger]:
    """
    The direct child loggers of `logger`.

    Example:
      >>> getChildren(JACKSOV_LOGGER)
    """
    children = set()
    depth = logger.name.count(".")
    for item in list(logger.manager.loggerDict.values()):
        if (
            isinstance(item, logging.Logger)
            and item.parent is logger
            and item.name.count(".") == depth + 1
        ):
            children.add(item)
    return children


def _make_handler(name: str, data: dict, logger: logging.Logger) -> logging.Handler:
    cls = resolve(data["handlerclass"])
    handler_kwargs = dict(data.get("options", {}))
    if issubclass(cls, logging.FileHandler):
        handler_kwargs["filename"] = LOGGINGDIR / f"{logger.name}.log"
    elif issubclass(cls, logging.StreamHandler) and "stream" not in handler_kwargs:
        # stdout carries the command output
        handler_kwargs["stream"] = None
    hdlr = cls(**handler_kwargs)
    hdlr.name = name
    hdlr.setFormatter(_formatter)
    return hdlr


def _update_logger_handlers(logger: logging.Logger):
    """
    Synchronises the handlers of `logger` and all its descendants with
    ``config["logging"]["handler"]``.

    Handlers switched off (``False``) or missing from the config are removed,
    file handlers pointing into an old logging directory are replaced.

    Example:
      >>> _update_logger_handlers(JACKSOV_LOGGER)
    """
    handler_config = get_config().get("logging", {}).get("handler", {})
    found = set()
    for hdlr in list(logger.handlers):
        if not getattr(hdlr, "name", None):
            # not one of ours
            continue
        if getattr(hdlr, "_closed", False):
            logger.removeHandler(hdlr)
            continue
        if isinstance(hdlr, logging.FileHandler):
            if Path(hdlr.baseFilename) != LOGGINGDIR / f"{logger.name}.log":
                hdlr.close()
                logger.removeHandler(hdlr)
                continue
        if not handler_config.get(hdlr.name):
            hdlr.close()
            logger.removeHandler(hdlr)
            continue

        hdlr.setFormatter(_formatter)
        found.add(hdlr.name)

    for name, data in handler_config.items():
        if data is False or name in found:
            continue
        logger.addHandler(_make_handler(name, data, logger))

    for child in getChildren(logger):
        _update_logger_handlers(child)


def get_logger(name: str, propagate: bool = False) -> logging.Logger:
    """
    Returns the child logger ``jacksov.<name>`` with the configured handlers.

    Example:
      >>> get_logger("oracle").debug("built H_g matrix")
    """
    sublogger = JACKSOV_LOGGER.getChild(name)
    _overwrite_add_handler(sublogger)
    sublogger.propagate = propagate
    _update_logger_handlers(sublogger)
    return sublogger


def set_logging_dir(path: Path):
    """
    Moves the log files to `path` (created if needed) and re-applies the
    handlers of the whole logger tree.
    """
    global LOGGINGDIR
    LOGGINGDIR = Path(path)
    LOGGINGDIR.mkdir(parents=True, exist_ok=True)
    _update_logger_handlers(JACKSOV_LOGGER)


def set_log_format(fmt: str = DEFAULT_FORMAT, max_length: Optional[int] = None):
    """
    Sets the format string (and truncation length) for every package handler.

    Example:
      >>> set_log_format("%(levelname)s %(message)s", max_length=200)
    """
    global _formatter
    _formatter = NotTooLongStringFormatter(fmt, max_length=max_length)
    _update_logger_handlers(JACKSOV_LOGGER)


JACKSOV_LOGGER = logging.getLogger("jacksov")

JACKSOV_LOGGER.setLevel(logging.INFO)
_overwrite_add_handler(JACKSOV_LOGGER)
set_logging_dir(LOGGINGDIR)


__all__ = ["JACKSOV_LOGGER", "get_logger", "set_logging_dir", "set_log_format"]
