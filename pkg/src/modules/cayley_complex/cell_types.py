import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from src.modules.errors import UnknownCellError
from src.modules.group_core import Element, MarkedGroup, Window

from .block import Block, act, diameter
from .block_text import format_block
from .enumeration import DEFAULT_BLOCK_SIZE_CAP
from .maximal import maximal_cells, maximality_margin

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CellType:
    index: int
    # the translate of the orbit with the smallest key among those having a support vertex at the identity
    representative: Block
    neighbor_count: int
    # neighbors of the representative
    neighbors: tuple[Block, ...]

    @property
    def dimension(self) -> int:
        return self.representative.dimension


def canonical_translate(group: MarkedGroup, cell: Block) -> tuple[Block, Element]:
    """Returns (representative, v) with cell = v.representative."""
    best: tuple[Block, Element] | None = None
    for v in sorted(cell.support, key=lambda g: g.key):
        translate = act(group, group.inverse(v), cell)
        if best is None or translate.key < best[0].key:
            best = (translate, v)
    return best


def _neighbor_map(cells: Iterable[Block], of: Iterable[Block]) -> dict[Block, tuple[Block, ...]]:
    at_vertex = defaultdict(list)
    for c in cells:
        for g in c.support:
            at_vertex[g].append(c)
    result = {}
    for c in of:
        found = {other for g in c.support for other in at_vertex[g] if other != c}
        result[c] = tuple(sorted(found, key=lambda b: (b.dimension, b.key)))
    return result


def cell_types_and_neighbors(
    group: MarkedGroup, cells: list[Block], core_radius: int
) -> tuple[list[CellType], dict[Block, tuple[Block, ...]]]:
    """
    Splits the cells with support in the ball of ``core_radius`` into translation orbits and lists their
    neighbors (distinct cells sharing a support vertex). The remaining cells only serve as neighbors.
    """
    core = [c for c in cells if all(len(g) <= core_radius for g in c.support)]
    boundary = len(cells) - len(core)
    if boundary:
        logger.warning(f"{boundary} cells near the window boundary are left out of the type statistics")
    neighbor_map = _neighbor_map(cells, core)

    orbits: dict[Block, list[tuple[Block, Element]]] = {}
    for c in core:
        representative, v = canonical_translate(group, c)
        orbits.setdefault(representative, []).append((c, v))

    types = []
    for index, representative in enumerate(sorted(orbits, key=lambda b: (b.dimension, b.key))):
        members = orbits[representative]
        counts = {len(neighbor_map[c]) for c, _ in members}
        if len(counts) > 1:
            logger.warning(f"Cell type {index} has varying neighbor counts {sorted(counts)}; the window is too small")
        c, v = members[0]
        v_inverse = group.inverse(v)
        neighbors = tuple(act(group, v_inverse, nb) for nb in neighbor_map[c])
        types.append(CellType(index, representative, len(neighbors), neighbors))
    return types, neighbor_map


class CayleyComplex:
    """
    Maximal cells of a Cayley complex around the identity together with their types.

    Neighbors of any cell of a known type follow from its type by translation, so the complex can be used far
    outside the window it was computed on.
    """

    def __init__(
        self,
        group: MarkedGroup,
        radius: int,
        top_dimension: int,
        cell_types: list[CellType],
        cells: list[Block],
        neighbor_map: dict[Block, tuple[Block, ...]],
        pruned: int = 0,
    ):
        self.group = group
        self.radius = radius
        self.top_dimension = top_dimension
        self.cell_types = tuple(cell_types)
        self.cells = tuple(cells)
        self._neighbor_map = neighbor_map
        # branches cut at the size cap; cells needing larger blocks may be missing when positive
        self.pruned = pruned
        self._by_representative = {t.representative: t for t in cell_types}

    def type_of(self, cell: Block) -> tuple[CellType, Element]:
        """
        :raises UnknownCellError: If the cell is not a translate of a type representative.
        """
        representative, v = canonical_translate(self.group, cell)
        cell_type = self._by_representative.get(representative)
        if cell_type is None:
            raise UnknownCellError(format_block(self.group, cell))
        return cell_type, v

    def neighbors(self, cell: Block) -> tuple[Block, ...]:
        known = self._neighbor_map.get(cell)
        if known is not None:
            return known
        cell_type, v = self.type_of(cell)
        translated = (act(self.group, v, nb) for nb in cell_type.neighbors)
        return tuple(sorted(translated, key=lambda b: (b.dimension, b.key)))

    def neighbor_counts(self) -> list[int]:
        return [t.neighbor_count for t in self.cell_types]

    def __repr__(self):
        return f"CayleyComplex(radius={self.radius}, types={len(self.cell_types)}, cells={len(self.cells)})"


def build_complex(
    group: MarkedGroup, radius: int, size_cap: int = DEFAULT_BLOCK_SIZE_CAP, threads: int = 1
) -> CayleyComplex:
    """
    Classifies the maximal cells with support in the ball of ``radius``.

    A first pass finds the cells and their largest diameter d; the second pass decides maximality up to
    ``radius + d``, which contains every neighbor of a classified cell.
    """
    margin = maximality_margin(size_cap)
    first = maximal_cells(group, Window(group, radius + margin), size_cap, threads)
    spread = max((diameter(group, c) for c in first.cells), default=0)
    window = Window(group, radius + spread + margin)
    logger.info(f"Building the complex of {group.presentation_text} on a window of radius {window.radius}")
    second = maximal_cells(group, window, size_cap, threads)
    types, neighbor_map = cell_types_and_neighbors(group, list(second.cells), radius)
    for t in types:
        logger.info(f"Cell type {t.index}: dimension {t.dimension}, {t.neighbor_count} neighbors")
    core = sorted(neighbor_map, key=lambda b: (b.dimension, b.key))
    return CayleyComplex(group, radius, second.top_dimension, types, core, neighbor_map, second.hierarchy.pruned)
