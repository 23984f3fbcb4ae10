import logging
from concurrent.futures import ThreadPoolExecutor

from src.modules.errors import EnumerationCapExceededError
from src.modules.group_core import Window
from src.modules.operator_lab import SparseOperator, StateBasis

from .go_state import Color, GoState
from .rules import play

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 200_000


def _successors(state: GoState, window: Window) -> list[GoState]:
    return [play(state, color, g, window) for g in window.interior for color in (Color.BLACK, Color.WHITE)]


def enumerate_admissible(
    window: Window, depth: int, cap: int = DEFAULT_ENUMERATION_CAP, threads: int = 1
) -> StateBasis[GoState]:
    """
    All states reachable from the vacuum by at most ``depth`` moves on interior vertices.

    States are numbered in discovery order: layer by layer, and inside a layer by the parent's index, the move
    vertex (window order) and the color (black first). The vacuum has index 0. Each layer may be expanded by
    several threads; results are merged in parent order, so the numbering does not depend on ``threads``.

    :raises EnumerationCapExceededError: If more than ``cap`` states are found.
    """
    if depth < 0:
        raise ValueError(f"Depth must be non-negative, got {depth}")
    vacuum = GoState()
    states = [vacuum]
    seen = {vacuum}
    frontier = [vacuum]
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for level in range(1, depth + 1):
            if executor is not None:
                expanded = list(executor.map(lambda s: _successors(s, window), frontier))
            else:
                expanded = [_successors(s, window) for s in frontier]
            frontier = []
            for successors in expanded:
                for state in successors:
                    if state not in seen:
                        seen.add(state)
                        states.append(state)
                        frontier.append(state)
            if len(states) > cap:
                raise EnumerationCapExceededError(cap)
            logger.debug(f"Go enumeration depth {level}: {len(frontier)} new states")
            if not frontier:
                break
    finally:
        if executor is not None:
            executor.shutdown()
    logger.info(f"Enumerated {len(states)} admissible states up to depth {depth} on {window.tag}")
    return StateBasis(tuple(states), f"go:{window.tag}:d{depth}:n{len(states)}")


def move_matrix(color: Color, g, basis: StateBasis[GoState], window: Window) -> SparseOperator:
    """
    The move operator of ``color`` at ``g`` on the span of ``basis``: column j is the basis vector of
    play(state j). Columns whose image is not in the basis are masked.
    """
    images = [basis.index.get(play(state, color, g, window)) for state in basis.states]
    outside = sum(1 for image in images if image is None)
    if outside:
        logger.warning(f"{outside} of {len(images)} columns of the {color.label} move leave the basis")
    return SparseOperator.from_column_images(images, basis.tag)
