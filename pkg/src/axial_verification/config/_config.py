import os
import pathlib
import typing

import yaml

from ._globals import (
    AXIAL_VERIFICATION_HOME_ENVIRONMENT_VARIABLE,
    CONFIG_FILE_NAME,
    DEFAULT_BASE_FOLDER_PATH,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_WORKERS,
    ENUMERATION_CAP_ENVIRONMENT_VARIABLE,
)


def get_config_file_path() -> pathlib.Path:
    """
    Get the path of the configuration file, creating its folder if needed.

    The folder defaults to `~/.axial-verification` and can be relocated with the
    `AXIAL_VERIFICATION_HOME` environment variable.

    Returns
    -------
    pathlib.Path
        The location of `config.yaml`.
    """
    base_folder_path = pathlib.Path(
        os.environ.get(AXIAL_VERIFICATION_HOME_ENVIRONMENT_VARIABLE, str(DEFAULT_BASE_FOLDER_PATH))
    )
    base_folder_path.mkdir(parents=True, exist_ok=True)
    return base_folder_path / CONFIG_FILE_NAME


def save_config(config: dict[str, typing.Any]) -> None:
    """
    Save the configuration for axial verification.

    Parameters
    ----------
    config : dict
        The configuration for axial verification.
    """
    if not any(config):
        return

    with open(file=get_config_file_path(), mode="w") as file_stream:
        yaml.dump(data=config, stream=file_stream, sort_keys=True)


def get_config() -> dict[str, typing.Any]:
    """
    Get the configuration for axial verification.

    Returns
    -------
    dict
        The configuration for axial verification; empty when nothing has been saved yet.
    """
    config_file_path = get_config_file_path()
    if not config_file_path.exists():
        config_file_path.touch()

    with open(file=config_file_path, mode="r") as file_stream:
        config = yaml.safe_load(stream=file_stream) or {}

    return config


def get_enumeration_cap() -> int:
    """
    Get the maximum number of elements an exhaustive finite-field scan may visit.

    The `AXIAL_ENUM_CAP` environment variable takes precedence over the saved configuration,
    which takes precedence over the default of one million.

    Returns
    -------
    int
        The enumeration cap.
    """
    environment_value = os.environ.get(ENUMERATION_CAP_ENVIRONMENT_VARIABLE, None)
    if environment_value is not None:
        try:
            cap = int(environment_value)
        except ValueError:
            message = (
                f"The environment variable `{ENUMERATION_CAP_ENVIRONMENT_VARIABLE}` must be a positive integer, "
                f"but received '{environment_value}'."
            )
            raise ValueError(message)
        if cap < 1:
            message = f"The environment variable `{ENUMERATION_CAP_ENVIRONMENT_VARIABLE}` must be positive, got {cap}."
            raise ValueError(message)
        return cap

    config = get_config()
    return int(config.get("enumeration_cap", DEFAULT_ENUMERATION_CAP))


def set_enumeration_cap(cap: int) -> None:
    if cap < 1:
        message = f"The enumeration cap must be a positive integer, got {cap}."
        raise ValueError(message)

    config = get_config()
    config["enumeration_cap"] = int(cap)
    save_config(config=config)


def get_workers() -> int:
    """Get the saved default number of workers (negative values use slicing semantics)."""
    config = get_config()
    return int(config.get("workers", DEFAULT_WORKERS))


def set_workers(workers: int) -> None:
    if workers == 0:
        message = "The number of workers must be nonzero; use 1 to run in the current process."
        raise ValueError(message)

    config = get_config()
    config["workers"] = int(workers)
    save_config(config=config)
