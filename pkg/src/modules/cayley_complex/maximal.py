import logging
from dataclasses import dataclass

from src.modules.errors import WindowTooSmallError
from src.modules.group_core import MarkedGroup, Window

from .block import Block
from .enumeration import DEFAULT_BLOCK_SIZE_CAP, BlockHierarchy

logger = logging.getLogger(__name__)


def maximality_margin(size_cap: int) -> int:
    """How far the blocks deciding membership of a cell can reach beyond the cell's support."""
    return max(1, (size_cap - 1) // 2)


@dataclass(frozen=True)
class MaximalCells:
    cells: tuple[Block, ...]
    top_dimension: int
    # cells are classified when their support lies in the ball of this radius
    region_radius: int
    hierarchy: BlockHierarchy

    def of_dimension(self, n: int) -> list[Block]:
        return [c for c in self.cells if c.dimension == n]


def _inside(block: Block, radius: int) -> bool:
    return all(len(g) <= radius for g in block.support)


def maximal_cells(
    group: MarkedGroup,
    window: Window,
    size_cap: int = DEFAULT_BLOCK_SIZE_CAP,
    threads: int = 1,
    hierarchy: BlockHierarchy | None = None,
) -> MaximalCells:
    """
    Irreducible blocks that are not a member of any irreducible block one dimension higher.

    Only cells whose support lies within ``window.radius - margin`` are reported; beyond that the blocks that
    would contain them may leave the window. Levels are built until one is empty; the top dimension is the
    highest dimension of a reported cell.

    :raises WindowTooSmallError: If the window is narrower than the margin or no cell fits inside the region.
    """
    margin = maximality_margin(size_cap)
    if window.radius < margin + 1:
        raise WindowTooSmallError(window.radius, margin + 1)
    region = window.radius - margin
    if hierarchy is None:
        hierarchy = BlockHierarchy(group, window, size_cap, threads)

    cells: list[Block] = []
    n = 1
    current = hierarchy.level(1).blocks
    while current:
        upper = hierarchy.level(n + 1).blocks
        covered = {m for b in upper for m in b.members}
        level_cells = [b for b in current if b not in covered and _inside(b, region)]
        logger.debug(f"Dimension {n}: {len(level_cells)} maximal cells in the ball of radius {region}")
        cells.extend(level_cells)
        n += 1
        current = upper
    if not cells:
        # no maximal cell has its whole support inside the region yet
        raise WindowTooSmallError(window.radius, window.radius + 1)
    top = max((c.dimension for c in cells), default=0)
    logger.info(f"Found {len(cells)} maximal cells up to dimension {top} within radius {region}")
    return MaximalCells(tuple(cells), top, region, hierarchy)
