"""Configuration options, such as the enumeration cap for exhaustive finite-field scans."""

from ._config import (
    save_config,
    get_config,
    get_config_file_path,
    get_enumeration_cap,
    set_enumeration_cap,
    get_workers,
    set_workers,
)
from ._globals import (
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_WORKERS,
    ENUMERATION_CAP_ENVIRONMENT_VARIABLE,
)

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_WORKERS",
    "ENUMERATION_CAP_ENVIRONMENT_VARIABLE",
    "save_config",
    "get_config",
    "get_config_file_path",
    "get_enumeration_cap",
    "set_enumeration_cap",
    "get_workers",
    "set_workers",
]
