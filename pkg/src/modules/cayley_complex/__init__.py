__all__ = [
    "Block",
    "BlockHierarchy",
    "CayleyComplex",
    "CellType",
    "DEFAULT_BLOCK_SIZE_CAP",
    "LevelResult",
    "MaximalCells",
    "act",
    "build_complex",
    "canonical_translate",
    "cell_types_and_neighbors",
    "complex_graph",
    "compose_blocks",
    "diameter",
    "edge",
    "enumerate_level",
    "export_complex",
    "format_block",
    "irreducible_blocks",
    "is_admissible_block",
    "is_edge",
    "maximal_cells",
    "maximality_margin",
    "parse_block",
    "satisfies_matching",
    "symmetric_difference",
    "to_dot",
    "to_graphml",
    "vertex",
]

from .block import (
    Block,
    act,
    compose_blocks,
    diameter,
    edge,
    is_edge,
    satisfies_matching,
    symmetric_difference,
    vertex,
)
from .block_text import format_block, parse_block
from .cell_types import CayleyComplex, CellType, build_complex, canonical_translate, cell_types_and_neighbors
from .enumeration import (
    DEFAULT_BLOCK_SIZE_CAP,
    BlockHierarchy,
    LevelResult,
    enumerate_level,
    irreducible_blocks,
    is_admissible_block,
)
from .export import complex_graph, export_complex, to_dot, to_graphml
from .maximal import MaximalCells, maximal_cells, maximality_margin
