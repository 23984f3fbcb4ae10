"""
Life states and their text form: one cell per line in the bracketed block notation, in canonical cell order.
Documents with several states separate them by ``# <label>: k`` lines, e.g. the generations of a run::

    # generation: 0
    [[e s1][e s2][s1 s1*s2][s2 s1*s2]]
    # generation: 1
"""

import logging
from dataclasses import dataclass
from typing import Iterable

from src.modules.cayley_complex import Block, act, format_block, parse_block
from src.modules.errors import BlockParseError, DocumentFormatError
from src.modules.group_core import Element, MarkedGroup

logger = logging.getLogger(__name__)


def cell_order(cell: Block) -> tuple:
    return cell.dimension, cell.key


@dataclass(frozen=True)
class LifeState:
    """The finite set of alive maximal cells; every other cell is dead."""

    alive: frozenset[Block] = frozenset()

    @classmethod
    def of(cls, cells: Iterable[Block]) -> "LifeState":
        return cls(frozenset(cells))

    def cells(self) -> list[Block]:
        return sorted(self.alive, key=cell_order)

    def is_empty(self) -> bool:
        return not self.alive

    def translate(self, group: MarkedGroup, g: Element) -> "LifeState":
        return LifeState(frozenset(act(group, g, cell) for cell in self.alive))

    def __contains__(self, cell) -> bool:
        return cell in self.alive

    def __len__(self):
        return len(self.alive)


def format_state(group: MarkedGroup, state: LifeState) -> str:
    return "".join(format_block(group, cell) + "\n" for cell in state.cells())


def parse_state(group: MarkedGroup, text: str) -> LifeState:
    """
    :raises DocumentFormatError: If a line is not a block, with its line number.
    """
    cells = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            cells.append(parse_block(group, line))
        except BlockParseError as e:
            raise DocumentFormatError(line_no, str(e)) from e
    return LifeState.of(cells)


def format_states(group: MarkedGroup, states: Iterable[LifeState], label: str = "state") -> str:
    return "".join(f"# {label}: {i}\n" + format_state(group, state) for i, state in enumerate(states))


def parse_states(group: MarkedGroup, text: str) -> list[LifeState]:
    """
    Reads a document written by :func:`format_states`.

    :raises DocumentFormatError: On a cell before the first separator or a line that is not a block.
    """
    states: list[list[Block]] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            states.append([])
            continue
        if not states:
            raise DocumentFormatError(line_no, "cell before the first '# <label>: k' line")
        try:
            states[-1].append(parse_block(group, line))
        except BlockParseError as e:
            raise DocumentFormatError(line_no, str(e)) from e
    logger.debug(f"Parsed {len(states)} life states")
    return [LifeState.of(cells) for cells in states]
