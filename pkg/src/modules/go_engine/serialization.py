"""
Text documents holding a list of Go states::

    # group: <s1,s2|[s1,s2]>
    # radius: 3
    # state: 0
    # state: 1
    s1	black
    s1*s2^-1	white

Each ``# state: k`` line opens a state; the records below it are ``vertex-word TAB color`` in canonical vertex
order. The vacuum is a state without records.
"""

import logging
from dataclasses import dataclass

from src.modules.errors import DocumentFormatError, InputError
from src.modules.group_core import MarkedGroup, format_element, make_group, parse_word

from .go_state import Color, GoState

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoDocument:
    presentation: str
    radius: int
    states: tuple[GoState, ...]


def serialize_state(group: MarkedGroup, state: GoState) -> list[str]:
    return [f"{format_element(group, g)}\t{color.label}" for g, color in state.stones]


def serialize_states(group: MarkedGroup, radius: int, states) -> str:
    lines = [f"# group: {group.presentation_text}", f"# radius: {radius}"]
    for i, state in enumerate(states):
        lines.append(f"# state: {i}")
        lines.extend(serialize_state(group, state))
    return "\n".join(lines) + "\n"


def _header_value(lines: list[str], line_no: int, key: str) -> str:
    prefix = f"# {key}:"
    if line_no > len(lines) or not lines[line_no - 1].startswith(prefix):
        raise DocumentFormatError(line_no, f"expected '{prefix} ...'")
    return lines[line_no - 1][len(prefix) :].strip()


def parse_states(text: str, group: MarkedGroup | None = None) -> GoDocument:
    """
    Reads a document written by :func:`serialize_states`. The group is built from the header unless given.

    :raises DocumentFormatError: On structural problems, with the offending line.
    """
    lines = text.splitlines()
    presentation = _header_value(lines, 1, "group")
    radius_text = _header_value(lines, 2, "radius")
    if not radius_text.isdigit():
        raise DocumentFormatError(2, f"invalid radius {radius_text!r}")
    if group is None:
        group = make_group(presentation)

    states: list[dict] = []
    for line_no, line in enumerate(lines[2:], start=3):
        if not line.strip():
            continue
        if line.startswith("# state:"):
            states.append({})
            continue
        if not states:
            raise DocumentFormatError(line_no, "stone record before the first '# state:' line")
        fields = line.split("\t")
        if len(fields) != 2:
            raise DocumentFormatError(line_no, "expected 'vertex-word TAB color'")
        try:
            g = parse_word(group, fields[0])
            color = Color.from_str(fields[1])
        except (InputError, ValueError) as e:
            raise DocumentFormatError(line_no, str(e)) from e
        if g in states[-1]:
            raise DocumentFormatError(line_no, f"vertex {fields[0]} appears twice")
        states[-1][g] = color
    logger.debug(f"Parsed {len(states)} Go states")
    return GoDocument(presentation, int(radius_text), tuple(GoState.of(board) for board in states))
