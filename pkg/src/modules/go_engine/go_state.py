import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping

from typeguard import typechecked

from src.modules.errors import WindowBoundaryError
from src.modules.group_core import Element, Window

logger = logging.getLogger(__name__)


@typechecked
class Color(Enum):
    BLACK = -1
    WHITE = 1

    @property
    def opposite(self) -> "Color":
        return Color.WHITE if self == Color.BLACK else Color.BLACK

    @property
    def label(self) -> str:
        return self.name.lower()

    @staticmethod
    def from_str(s: str):
        s = s.strip().lower()
        for color in Color:
            if s in (color.label, color.label[0], str(color.value)):
                return color
        raise ValueError(f"{s} is not a valid stone color.")


@dataclass(frozen=True)
class GoState:
    """
    A finite assignment of stones to group elements. Empty vertices are absent; the empty state is the vacuum.

    Stones are kept sorted by the canonical element order, so equal states are equal tuples.
    """

    stones: tuple[tuple[Element, Color], ...] = ()

    @staticmethod
    def of(board: Mapping[Element, Color] | Iterable[tuple[Element, Color]]) -> "GoState":
        items = board.items() if isinstance(board, Mapping) else board
        return GoState(tuple(sorted(items, key=lambda item: item[0].key)))

    @cached_property
    def board(self) -> dict[Element, Color]:
        return dict(self.stones)

    def color_at(self, g: Element) -> Color | None:
        return self.board.get(g)

    def is_vacuum(self) -> bool:
        return not self.stones

    def with_stone(self, g: Element, color: Color) -> "GoState":
        board = dict(self.board)
        board[g] = color
        return GoState.of(board)

    def without(self, vertices: Iterable[Element]) -> "GoState":
        removed = set(vertices)
        return GoState(tuple(item for item in self.stones if item[0] not in removed))

    def __len__(self):
        return len(self.stones)


@dataclass(frozen=True)
class Cluster:
    color: Color
    vertices: frozenset[Element]
    liberties: frozenset[Element]
    eyes: frozenset[Element]

    @property
    def liberty_count(self) -> int:
        return len(self.liberties)

    @property
    def is_immortal(self) -> bool:
        return len(self.eyes) >= 2


def _flood(state: GoState, start: Element, window: Window) -> set[Element]:
    color = state.board[start]
    group = set()
    stack = [start]
    while stack:
        g = stack.pop()
        if g in group:
            continue
        group.add(g)
        stack.extend(h for h in window.neighbors(g) if state.board.get(h) == color and h not in group)
    return group


def liberties_of(state: GoState, vertices: Iterable[Element], window: Window) -> set[Element]:
    return {h for g in vertices for h in window.neighbors(g) if h not in state.board}


def analyze_clusters(state: GoState, window: Window) -> list[Cluster]:
    """
    Splits the stones of ``state`` into clusters, in the order of their smallest vertex.

    An eye of a cluster is an empty vertex all of whose neighbors belong to that cluster.

    :raises WindowBoundaryError: If a stone lies outside the window interior.
    """
    if not all(window.is_interior(g) for g, _ in state.stones):
        raise WindowBoundaryError("Stone support")
    clusters = []
    visited: set[Element] = set()
    for g, color in state.stones:
        if g in visited:
            continue
        vertices = _flood(state, g, window)
        visited |= vertices
        liberties = liberties_of(state, vertices, window)
        eyes = {v for v in liberties if all(h in vertices for h in window.neighbors(v))}
        clusters.append(Cluster(color, frozenset(vertices), frozenset(liberties), frozenset(eyes)))
    return clusters
