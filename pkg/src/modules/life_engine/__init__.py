__all__ = [
    "DEFAULT_LIFE_STATE_CAP",
    "FiberReport",
    "LifeRule",
    "LifeState",
    "LifeStepper",
    "RuleSpaceReport",
    "TypeRule",
    "enumerate_life_states",
    "fiber_report",
    "format_rule",
    "format_state",
    "format_states",
    "make_rule",
    "parse_rule",
    "parse_state",
    "parse_states",
    "rule_space_report",
    "run",
    "step",
    "step_matrix",
    "uniform_rule",
]

from .life_state import LifeState, format_state, format_states, parse_state, parse_states
from .rules import (
    LifeRule,
    RuleSpaceReport,
    TypeRule,
    format_rule,
    make_rule,
    parse_rule,
    rule_space_report,
    uniform_rule,
)
from .stepping import (
    DEFAULT_LIFE_STATE_CAP,
    FiberReport,
    LifeStepper,
    enumerate_life_states,
    fiber_report,
    run,
    step,
    step_matrix,
)
