import logging

from src.modules.group_core import Element, Window

from .go_state import Color, GoState, analyze_clusters, liberties_of

logger = logging.getLogger(__name__)


def play(state: GoState, color: Color, g: Element, window: Window) -> GoState:
    """
    Puts a stone of ``color`` on ``g`` following the admissible move rules.

    - An occupied vertex leaves the state unchanged.
    - If ``g`` is the last liberty of some clusters, the opposite-colored ones among them are removed and the
      stone is placed. If all of them have the move's color, nothing is captured and the state is unchanged.
    - An eye of a cluster with at least two eyes cannot be played (whatever the colors).
    - Otherwise the stone is placed, unless its own cluster would be left without a liberty.

    :raises WindowBoundaryError: If ``g`` or a stone of ``state`` is outside the window interior.
    """
    window.require_interior(g, "Move vertex")
    if state.color_at(g) is not None:
        return state
    clusters = analyze_clusters(state, window)

    dying = [c for c in clusters if c.liberties == {g}]
    if dying:
        captured = [v for c in dying if c.color != color for v in c.vertices]
        if not captured:
            return state
        return state.without(captured).with_stone(g, color)

    if any(g in c.eyes and c.is_immortal for c in clusters):
        return state

    placed = state.with_stone(g, color)
    own = {g} | {v for c in clusters if c.color == color and g in c.liberties for v in c.vertices}
    if not liberties_of(placed, own, window):
        return state
    return placed


def play_sequence(state: GoState, moves: list[tuple[Color, Element]], window: Window) -> GoState:
    for color, g in moves:
        state = play(state, color, g, window)
    return state
