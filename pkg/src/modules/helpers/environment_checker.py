import logging
import os

from src.modules.errors import EnvironmentVariableError

logger = logging.getLogger(__name__)

OUTPUT_DIR_VARIABLE = "CAYLEY_WORKBENCH_OUTPUT_DIR"
THREADS_VARIABLE = "CAYLEY_WORKBENCH_THREADS"


def default_output_dir() -> str:
    """Returns the artifact directory configured in the environment, or ``output``."""
    return os.getenv(OUTPUT_DIR_VARIABLE) or "output"


def read_int_variable(name: str, default: int) -> int:
    """
    Reads a positive integer from the environment.

    :param name: Name of the environment variable.
    :param default: Value used when the variable is unset or empty.
    :raises EnvironmentVariableError: If the variable is set but not a positive integer.
    """
    raw = os.getenv(name)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise EnvironmentVariableError(name, raw, "an integer")
    if value <= 0:
        raise EnvironmentVariableError(name, raw, "positive")
    logger.debug(f"{name}={value} taken from the environment")
    return value


def default_threads() -> int:
    return read_int_variable(THREADS_VARIABLE, 1)
