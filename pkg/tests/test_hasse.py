import networkx as nx
import numpy as np
import pytest

from adherence import (
    MINUS,
    PLUS,
    cover_graph,
    cover_pairs,
    hasse_covers,
    is_partial_order,
    leq,
    order_matrix,
    to_dot,
)


def chain(size):
    return np.triu(np.ones((size, size), dtype=bool))


@pytest.mark.parametrize('epsilon', [PLUS, MINUS])
def test_orders_are_partial_orders(rook3, epsilon):
    elements = rook3.enumerate_monoid()
    assert is_partial_order(order_matrix(elements, lambda r, s: leq(r, s, epsilon)))


def test_diagonal_is_forced():
    matrix = order_matrix(['a', 'b'], lambda r, s: False)
    assert matrix.tolist() == [[True, False], [False, True]]


def test_partial_order_axioms():
    assert is_partial_order(chain(3))
    assert not is_partial_order(np.ones((2, 2), dtype=bool))
    assert not is_partial_order(np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=bool))
    assert not is_partial_order(np.zeros((2, 2), dtype=bool))


def test_covers_of_a_chain():
    covers = hasse_covers(chain(4))
    assert list(zip(*np.nonzero(covers))) == [(0, 1), (1, 2), (2, 3)]


def test_cover_graph_of_rook2(rook2):
    elements = rook2.enumerate_monoid()
    matrix = order_matrix(elements, lambda r, s: leq(r, s, PLUS))
    graph = cover_graph(elements, matrix)
    assert nx.is_directed_acyclic_graph(graph)
    assert graph.number_of_nodes() == 7
    assert graph.number_of_edges() == len(cover_pairs(elements, matrix))
    closure = nx.transitive_closure_dag(graph)
    for i in range(7):
        for j in range(7):
            if i != j:
                assert closure.has_edge(i, j) == bool(matrix[i, j])


def test_dot_export(rook2):
    elements = rook2.enumerate_monoid()
    matrix = order_matrix(elements, lambda r, s: leq(r, s, PLUS))
    dot = to_dot(elements, matrix, name='rook:2 <=+')
    lines = dot.splitlines()
    assert lines[0] == 'digraph "rook:2 <=+" {'
    assert lines[1] == '  rankdir=BT;'
    assert lines[-1] == '}'
    assert sum('[label=' in line for line in lines) == 7
    assert sum('->' in line for line in lines) == len(cover_pairs(elements, matrix))
    assert '[label="0,0"]' in dot


def test_cycle_is_rejected():
    with pytest.raises(ValueError):
        to_dot(['a', 'b'], np.ones((2, 2), dtype=bool), labels=['a', 'b'])
