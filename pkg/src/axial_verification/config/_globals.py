import pathlib

AXIAL_VERIFICATION_HOME_ENVIRONMENT_VARIABLE = "AXIAL_VERIFICATION_HOME"
DEFAULT_BASE_FOLDER_PATH = pathlib.Path.home() / ".axial-verification"
CONFIG_FILE_NAME = "config.yaml"

ENUMERATION_CAP_ENVIRONMENT_VARIABLE = "AXIAL_ENUM_CAP"
DEFAULT_ENUMERATION_CAP = 1_000_000
DEFAULT_WORKERS = 1
