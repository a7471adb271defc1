from typing import Any, Dict, List, Literal, MutableMapping, Optional, TypedDict, Union
from copy import deepcopy
from pathlib import Path
import json
import os
import shutil
import tempfile

from dotenv import load_dotenv

from .exact import DEFAULT_G_PANEL
from .utils.files import write_json_secure

load_dotenv(override=True)


_BASE_CONFIG_DIR = Path(os.environ.get("JACKSOV_CONFIG_DIR", Path.home() / ".jacksov"))


class VerifyConfig(TypedDict, total=False):
    g_panel: List[str]
    max_weight: int
    workers: int
    progress: bool


class SeparatedConfig(TypedDict, total=False):
    truncation_margin: int


class CliConfig(TypedDict, total=False):
    default_g: str


class HandlerConfig(TypedDict, total=False):
    handlerclass: str
    options: dict


class LoggingConfig(TypedDict, total=False):
    handler: Dict[str, Union[HandlerConfig, Literal[False]]]


class ConfigType(TypedDict, total=False):
    verify: VerifyConfig
    separated: SeparatedConfig
    cli: CliConfig
    logging: LoggingConfig
    custom_config_dir: str


def _default_config() -> ConfigType:
    return {
        "verify": {
            "g_panel": list(DEFAULT_G_PANEL),
            "max_weight": 4,
            "workers": int(os.environ.get("JACKSOV_VERIFY_WORKERS", 1)),
            "progress": True,
        },
        "separated": {
            "truncation_margin": int(os.environ.get("JACKSOV_TRUNCATION_MARGIN", 5)),
        },
        "cli": {
            "default_g": "2/5",
        },
        "logging": {
            "handler": {
                "console": {
                    "handlerclass": "logging.StreamHandler",
                    "options": {},
                },
                "file": {
                    "handlerclass": "logging.handlers.RotatingFileHandler",
                    "options": {
                        "maxBytes": 1024 * 1024 * 5,
                        "backupCount": 5,
                    },
                },
            },
        },
    }


DEFAULT_CONFIG: ConfigType = _default_config()

_CONFIG: ConfigType = deepcopy(DEFAULT_CONFIG)
_CONFIG_DIR = _BASE_CONFIG_DIR
_CONFIG_CHANGED = True


def merge_config(
    target: MutableMapping[str, Any],
    source: MutableMapping[str, Any],
    overwrite_existing: bool = False,
) -> MutableMapping[str, Any]:
    """
    Recursively copies keys of `source` into `target` (in place).

    Nested dicts are merged; other values only replace existing ones when
    `overwrite_existing` is set.

    Examples:
      >>> merge_config({"verify": {"workers": 4}}, DEFAULT_CONFIG)["verify"]["workers"]
      4
    """
    for key, value in source.items():
        if isinstance(value, dict) and isinstance(target.get(key), dict):
            merge_config(target[key], value, overwrite_existing=overwrite_existing)
            continue
        if overwrite_existing or key not in target:
            target[key] = deepcopy(value)
    return target


def _bupath(path: Path) -> Path:
    """
    Returns the backup path for the configuration file.

    Examples:
        >>> _bupath(Path("config.json"))
        PosixPath('config.json.bu')
    """
    return path.with_suffix(path.suffix + ".bu")


def write_config(path: Path, config: ConfigType):
    """
    Writes the configuration file and its backup.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_json_secure(config, path, indent=2)
    write_json_secure(config, _bupath(path), indent=2)


def load_config(path: Path):
    """
    Loads the configuration file, falling back to the backup and then to the defaults.
    Missing keys are filled from the defaults and the result is written back.
    """
    global _CONFIG
    config: Optional[ConfigType] = None
    path = Path(path)
    for candidate in (path, _bupath(path)):
        try:
            with open(candidate, "r", encoding="utf-8") as f:
                config = json.load(f)
            break
        except Exception:
            continue

    if not isinstance(config, dict):
        config = deepcopy(DEFAULT_CONFIG)

    merge_config(config, DEFAULT_CONFIG)
    write_config(path, config)
    _CONFIG = config


def check_config_dir():
    global _CONFIG_DIR, _CONFIG_CHANGED
    _BASE_CONFIG_DIR.mkdir(parents=True, exist_ok=True)
    load_config(_BASE_CONFIG_DIR / "config.json")
    if "custom_config_dir" in _CONFIG:
        load_config(Path(_CONFIG["custom_config_dir"]) / "config.json")
        _CONFIG_DIR = Path(_CONFIG["custom_config_dir"])
    else:
        _CONFIG_DIR = _BASE_CONFIG_DIR

    _CONFIG_CHANGED = False


def get_config_dir() -> Path:
    return _CONFIG_DIR


def get_config() -> ConfigType:
    """
    Returns the configuration, (re)loading it from disk if it changed.
    """
    if _CONFIG_CHANGED:
        reload()
    return _CONFIG


def update_config(config: ConfigType):
    """
    Deep-updates the configuration and persists it.

    Examples:
      >>> update_config({"verify": {"workers": 4}})
    """
    merge_config(get_config(), config, overwrite_existing=True)
    write_config(_CONFIG_DIR / "config.json", _CONFIG)
    reload()


def reload(config_dir: Optional[Path] = None):
    global _CONFIG, _BASE_CONFIG_DIR, _CONFIG_DIR
    load_dotenv(override=True)

    if config_dir is not None:
        os.environ["JACKSOV_CONFIG_DIR"] = str(Path(config_dir))

    _BASE_CONFIG_DIR = Path(
        os.environ.get("JACKSOV_CONFIG_DIR", Path.home() / ".jacksov")
    )
    _CONFIG = deepcopy(DEFAULT_CONFIG)
    _CONFIG_DIR = _BASE_CONFIG_DIR
    check_config_dir()


_IN_TEST = False


def get_in_test() -> bool:
    return _IN_TEST


def set_in_test(
    in_test: Literal[True] = True,
    *,
    clear: bool = True,
    add_pid: bool = True,
    config: Optional[ConfigType] = None,
    refresh_logging: bool = True,
):
    """
    Puts the configuration into test mode: a fresh per-process directory in the
    temp dir and no file logging.

    With `refresh_logging` off the package loggers are left alone; used while
    this module is still being imported by the logging module.
    """
    global _BASE_CONFIG_DIR, _IN_TEST, _CONFIG_CHANGED
    try:
        if not bool(in_test):
            raise ValueError("Cannot set in test to False.")
        if _IN_TEST:
            return
        _IN_TEST = True

        fn = "jacksov_test"
        if add_pid:
            fn += f"_{os.getpid()}"

        _BASE_CONFIG_DIR = Path(tempfile.gettempdir()) / fn
        if clear and _BASE_CONFIG_DIR.exists():
            shutil.rmtree(_BASE_CONFIG_DIR, ignore_errors=True)

        if config:
            write_config(_BASE_CONFIG_DIR / "config.json", config)

        reload(_BASE_CONFIG_DIR)

        update_config({"logging": {"handler": {"file": False}}})
        if not refresh_logging:
            return
        # import here to avoid circular import
        from ._logging import JACKSOV_LOGGER, _update_logger_handlers, set_logging_dir  # noqa C0415 # pylint: disable=import-outside-toplevel

        _update_logger_handlers(JACKSOV_LOGGER)
        set_logging_dir(_BASE_CONFIG_DIR / "logs")
    finally:
        _CONFIG_CHANGED = True


def get_g_panel() -> List[str]:
    return list(get_config().get("verify", {}).get("g_panel", DEFAULT_G_PANEL))


def get_truncation_margin() -> int:
    return int(get_config().get("separated", {}).get("truncation_margin", 5))


if bool(os.environ.get("JACKSOV_IN_TEST", False)):
    # the logging module reads the test directory when it is first imported
    set_in_test(refresh_logging=False)
