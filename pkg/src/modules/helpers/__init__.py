__all__ = [
    "default_output_dir",
    "default_threads",
    "replace_many",
    "split_top_level",
]

from .environment_checker import default_output_dir, default_threads
from .string_util import replace_many, split_top_level
