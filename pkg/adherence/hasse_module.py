"""
Hasse Module
Order matrices, covering relations and DOT export for finite subsets of a monoid
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from renner import RennerElement

logger = logging.getLogger(__name__)


def order_matrix(elements: Sequence[RennerElement],
                 relation: Callable[[RennerElement, RennerElement], bool]) -> np.ndarray:
    """Boolean matrix M with M[i, j] iff elements[i] <= elements[j]"""
    n = len(elements)
    matrix = np.zeros((n, n), dtype=bool)
    for i, r in enumerate(elements):
        for j, s in enumerate(elements):
            matrix[i, j] = i == j or relation(r, s)
    return matrix


def is_partial_order(matrix: np.ndarray) -> bool:
    """Reflexive, antisymmetric and transitive"""
    if not matrix[np.diag_indices_from(matrix)].all():
        return False
    if (matrix & matrix.T).sum() > len(matrix):
        return False
    return not (~matrix & np.matmul(matrix, matrix)).any()


def hasse_covers(matrix: np.ndarray) -> np.ndarray:
    """Covering relation: i < j with nothing strictly between"""
    lt = matrix.copy()
    lt[np.diag_indices_from(lt)] = False
    return lt & ~np.matmul(lt, lt)


def cover_graph(elements: Sequence[RennerElement], matrix: np.ndarray) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(elements)))
    covers = hasse_covers(matrix)
    graph.add_edges_from(zip(*np.nonzero(covers)))
    return graph


def to_dot(elements: Sequence[RennerElement], matrix: np.ndarray,
           name: str = 'adherence', labels: Optional[List[str]] = None) -> str:
    """
    DOT digraph of the covering relation, drawn bottom to top

    Raises:
        ValueError: The relation has a cycle, so it is not a partial order
    """
    graph = cover_graph(elements, matrix)
    if not nx.is_directed_acyclic_graph(graph):
        raise ValueError(f'{name}: covering relation has a cycle')
    labels = labels or [str(r) for r in elements]
    lines = [f'digraph "{name}" {{', '  rankdir=BT;']
    for node in graph.nodes:
        lines.append(f'  n{node} [label="{labels[node]}"];')
    for source, target in sorted(graph.edges):
        lines.append(f'  n{source} -> n{target};')
    lines.append('}')
    logger.debug('%s: %d nodes, %d covers', name, graph.number_of_nodes(), graph.number_of_edges())
    return '\n'.join(lines) + '\n'


def cover_pairs(elements: Sequence[RennerElement], matrix: np.ndarray) -> List[Tuple[RennerElement, RennerElement]]:
    covers = hasse_covers(matrix)
    return [(elements[i], elements[j]) for i, j in zip(*np.nonzero(covers))]
