import logging
import os
from typing import Optional

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.modules.cayley_complex import DEFAULT_BLOCK_SIZE_CAP
from src.modules.circle_dynamics import DEFAULT_ORBIT_SIZES, DEFAULT_SAMPLES, GOLDEN_THETA
from src.modules.errors import InputError
from src.modules.go_engine import DEFAULT_ENUMERATION_CAP
from src.modules.group_core import DEFAULT_BALL_SIZE_CAP
from src.modules.helpers import default_output_dir, default_threads, split_top_level
from src.modules.operator_lab import DEFAULT_COMMUTANT_CAP, DEFAULT_DENSE_CAP

logger = logging.getLogger(__name__)

CLASSIC_RULE = "B={3} S={2,3}"


class RunConfig(BaseModel):
    """
    Every input of a workbench run. Values come from the environment defaults, then a ``key = value`` config
    file, then command line flags. Two runs with equal configs write byte-identical artifacts.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    group: Optional[str] = None
    radius: int = Field(3, ge=0)
    depth: int = Field(2, ge=0)

    # go
    color: str = "black"
    vertex: str = "e"
    moves: Optional[str] = None

    # life
    rule: str = CLASSIC_RULE
    state: Optional[str] = None
    generations: int = Field(4, ge=0)
    max_alive: int = Field(1, ge=0)
    density: float = Field(0.5, ge=0.0, le=1.0)

    # truncated algebra
    generator: Optional[str] = None

    # circle
    word: Optional[str] = None
    theta: float = Field(GOLDEN_THETA, gt=0.0, lt=1.0)
    rank: int = Field(2, ge=2)
    samples: int = Field(DEFAULT_SAMPLES, gt=0)
    count: int = Field(100, gt=0)
    max_length: int = Field(8, gt=0)
    orbit_sizes: tuple[int, ...] = DEFAULT_ORBIT_SIZES
    seed: int = 0

    # operator lab
    matrices: tuple[str, ...] = ()
    unmasked_only: bool = False

    # caps
    ball_cap: int = Field(DEFAULT_BALL_SIZE_CAP, gt=0)
    block_cap: int = Field(DEFAULT_BLOCK_SIZE_CAP, gt=0)
    enumeration_cap: int = Field(DEFAULT_ENUMERATION_CAP, gt=0)
    dense_cap: int = Field(DEFAULT_DENSE_CAP, gt=0)
    commutant_cap: int = Field(DEFAULT_COMMUTANT_CAP, gt=0)

    output_dir: str = Field(default_factory=default_output_dir)
    threads: int = Field(default_factory=default_threads, gt=0)

    @field_validator("matrices", mode="before")
    @classmethod
    def _split_paths(cls, value):
        if isinstance(value, str):
            return tuple(p.strip() for p in value.split(",") if p.strip())
        return value

    @field_validator("orbit_sizes", mode="before")
    @classmethod
    def _split_sizes(cls, value):
        if isinstance(value, str):
            return tuple(p.strip() for p in split_top_level(value) if p.strip())
        return value

    @field_validator("orbit_sizes")
    @classmethod
    def _positive_sizes(cls, value):
        if not value or any(n <= 0 for n in value):
            raise ValueError("orbit sizes must be a non-empty list of positive integers")
        return value

    @field_validator("rule", mode="before")
    @classmethod
    def _rule_lines(cls, value):
        # a config file holds one line per key; ';' separates the per-type rules
        if isinstance(value, str):
            return "\n".join(part.strip() for part in value.split(";"))
        return value


def read_config_file(path: str) -> dict[str, str]:
    """
    Reads ``key = value`` lines; ``#`` starts a comment. Keys may use dashes or underscores.

    :raises FileNotFoundError: If there is no such file.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"Config file {path} does not exist")
    values = dotenv_values(path)
    return {key.strip().lower().replace("-", "_"): value for key, value in values.items() if value is not None}


def load_run_config(config_path: str | None = None, overrides: dict | None = None) -> RunConfig:
    """
    Builds the run configuration. Command line ``overrides`` win over the config file.

    :raises InputError: If a value is invalid or a key is unknown.
    """
    values = read_config_file(config_path) if config_path else {}
    if values:
        logger.debug(f"Config file {config_path} sets {sorted(values)}")
    values.update({key: value for key, value in (overrides or {}).items() if value is not None})
    try:
        return RunConfig(**values)
    except ValidationError as e:
        problems = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
        raise InputError(f"Invalid run configuration: {problems}")
