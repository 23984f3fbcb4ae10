__all__ = ["RunConfig", "load_run_config", "main"]

from .app import main
from .run_config import RunConfig, load_run_config
