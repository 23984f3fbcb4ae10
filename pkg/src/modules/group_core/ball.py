import logging
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property

from src.modules.errors import BallSizeExceededError, WindowBoundaryError

from .marked_group import Element, MarkedGroup

logger = logging.getLogger(__name__)

DEFAULT_BALL_SIZE_CAP = 200_000


def _expand(group: MarkedGroup, chunk: list[Element]) -> set[Element]:
    return {group.times_letter(g, letter) for g in chunk for letter in group.letters}


def _chunks(items: list, count: int) -> list[list]:
    size = max(1, -(-len(items) // count))
    return [items[i : i + size] for i in range(0, len(items), size)]


def ball(
    group: MarkedGroup, radius: int, size_cap: int = DEFAULT_BALL_SIZE_CAP, threads: int = 1
) -> list[Element]:
    """
    All elements of word length at most ``radius``, sorted by (length, lexicographic normal form).

    The breadth first frontier may be expanded by several worker threads; every layer is merged into one set and
    sorted, so the result does not depend on ``threads``.

    :raises BallSizeExceededError: If the ball has more than ``size_cap`` elements.
    """
    if radius < 0:
        raise ValueError(f"Radius must be non-negative, got {radius}")
    result = [group.identity]
    seen = {group.identity}
    layer = [group.identity]
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for r in range(1, radius + 1):
            if executor is not None and len(layer) > threads:
                candidates = set().union(*executor.map(lambda c: _expand(group, c), _chunks(layer, threads)))
            else:
                candidates = _expand(group, layer)
            layer = sorted((g for g in candidates if g not in seen), key=lambda g: g.key)
            if not layer:
                logger.debug(f"Ball stabilized at radius {r - 1}: the group is finite")
                break
            seen.update(layer)
            result.extend(layer)
            if len(result) > size_cap:
                raise BallSizeExceededError(radius, size_cap)
            logger.debug(f"Ball layer {r}: {len(layer)} elements")
    finally:
        if executor is not None:
            executor.shutdown()
    return result


class Window:
    """
    A finite truncation of the Cayley graph: the ball of a given radius with a stable index of its elements.

    The interior consists of the window elements all of whose neighbors lie in the window; for infinite groups
    this is the ball of radius ``radius - 1``.
    """

    def __init__(self, group: MarkedGroup, radius: int, size_cap: int = DEFAULT_BALL_SIZE_CAP, threads: int = 1):
        self.group = group
        self.radius = radius
        self.elements: list[Element] = ball(group, radius, size_cap=size_cap, threads=threads)
        self.index: dict[Element, int] = {g: i for i, g in enumerate(self.elements)}
        # filled from worker threads without a lock; racing writers store equal values
        self._neighbors: dict[Element, tuple[Element, ...]] = {}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g: Element) -> bool:
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    def neighbors(self, g: Element) -> tuple[Element, ...]:
        """Cayley neighbors g s^(+-1), deduplicated, without g itself, in canonical letter order."""
        cached = self._neighbors.get(g)
        if cached is None:
            found = []
            for letter in self.group.letters:
                h = self.group.times_letter(g, letter)
                if h != g and h not in found:
                    found.append(h)
            cached = tuple(found)
            self._neighbors[g] = cached
        return cached

    def is_interior(self, g: Element) -> bool:
        return g in self.index and all(h in self.index for h in self.neighbors(g))

    @cached_property
    def interior(self) -> list[Element]:
        return [g for g in self.elements if self.is_interior(g)]

    def require_interior(self, g: Element, what: str = "Vertex"):
        if not self.is_interior(g):
            raise WindowBoundaryError(what)

    @cached_property
    def tag(self) -> str:
        """Identifier of the ball basis, used to tag operators built on it."""
        return f"ball:{self.group.presentation_text}:r{self.radius}:n{len(self.elements)}"
