import logging
import os

import networkx as nx
from networkx.drawing.nx_pydot import write_dot

from .block_text import format_block
from .cell_types import CayleyComplex

logger = logging.getLogger(__name__)


def complex_graph(cayley_complex: CayleyComplex) -> nx.Graph:
    """
    Neighbor graph of the classified cells. Nodes are numbered in cell order and carry the block text, its
    dimension and its type index; neighbors outside the classified cells are left out.
    """
    group = cayley_complex.group
    graph = nx.Graph()
    node_of = {}
    for i, cell in enumerate(cayley_complex.cells):
        cell_type, _ = cayley_complex.type_of(cell)
        node = f"c{i}"
        node_of[cell] = node
        graph.add_node(node, label=format_block(group, cell), dimension=cell.dimension, cell_type=cell_type.index)
    for cell in cayley_complex.cells:
        for other in cayley_complex.neighbors(cell):
            if other in node_of:
                graph.add_edge(node_of[cell], node_of[other])
    return graph


def to_graphml(cayley_complex: CayleyComplex, dest_path: str) -> str:
    if not dest_path.endswith(".graphml"):
        dest_path += ".graphml"
    nx.write_graphml(complex_graph(cayley_complex), dest_path)
    logger.info(f"Wrote the cell graph to {dest_path}")
    return dest_path


def to_dot(cayley_complex: CayleyComplex, dest_path: str) -> str:
    if not dest_path.endswith(".dot"):
        dest_path += ".dot"
    write_dot(complex_graph(cayley_complex), dest_path)
    logger.info(f"Wrote the cell graph to {dest_path}")
    return dest_path


def export_complex(cayley_complex: CayleyComplex, directory: str, stem: str = "complex") -> list[str]:
    os.makedirs(directory, exist_ok=True)
    base = os.path.join(directory, stem)
    return [to_graphml(cayley_complex, base), to_dot(cayley_complex, base)]
