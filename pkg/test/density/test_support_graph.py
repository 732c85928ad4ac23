"""
Tests for density/support_graph.py
"""

from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ExpSumLab.density.exponent_set import ExponentSet
from ExpSumLab.density.support_graph import (
    build_support_graph,
    closed_walk_minimum,
    min_mean_cycle,
    node_count,
    support_cycles,
)
from ExpSumLab.utils.errors import BudgetError, InfiniteDensityError

@pytest.fixture
def cube_graph():
    """Support graph of D = {3} over F_2."""
    return build_support_graph(ExponentSet.from_vectors([3]), 2)

def test_edges_of_cube_graph(cube_graph):
    """1 -> 2 (digit 0), 2 -> 1 (digit 1), 3 -> 3 (digit 1)."""
    edges = {(u, v): data["weight"] for u, v, data in cube_graph.graph.edges(data=True)}
    assert edges == {((1,), (2,)): 0, ((2,), (1,)): 1, ((3,), (3,)): 1}
    assert cube_graph.nodes == [(1,), (2,), (3,)]
    assert cube_graph.edge_digits((2,), (1,)) == ((1,),)
    assert cube_graph.edge_weight((1,), (3,)) is None

def test_min_mean_cycle(cube_graph):
    """The 2-cycle has mean 1/2 and is the only critical cycle."""
    data = min_mean_cycle(cube_graph)
    assert data.mean == Fraction(1, 2)
    assert data.critical_nodes == ((1,), (2,))
    assert data.critical_edges == (((1,), (2,)), ((2,), (1,)))
    assert support_cycles(data, 4) == [((1,), (2,))]
    assert support_cycles(data, 1) == []

def test_closed_walk_minimum(cube_graph):
    """Least closed-walk weights; odd lengths only use the loop at 3."""
    assert closed_walk_minimum(cube_graph, 1) == 1
    assert closed_walk_minimum(cube_graph, 2) == 1
    assert closed_walk_minimum(cube_graph, 3) == 3

def test_linear_term_has_self_loop():
    """D = {1}: a single node with a loop of weight p - 1."""
    graph = build_support_graph(ExponentSet.from_vectors([1]), 5)
    assert list(graph.graph.edges(data="weight")) == [((1,), (1,), 4)]
    assert min_mean_cycle(graph).mean == 4

def test_mean_of_two_variable_set():
    """x + y over F_2: two loops of weight 1 per variable, mean 2."""
    D = ExponentSet.from_vectors([(1, 0), (0, 1)])
    data = min_mean_cycle(build_support_graph(D, 2))
    assert data.mean == 2
    assert data.critical_nodes == ((1, 1),)

def test_budgets_and_hyperplanes():
    """Budgets bound nodes and digit vectors; hyperplane sets have no graph."""
    D = ExponentSet.from_vectors([(3, 1), (1, 3)])
    assert node_count(D) == 16
    with pytest.raises(BudgetError):
        build_support_graph(D, 2, node_budget=10)
    with pytest.raises(BudgetError):
        build_support_graph(D, 5, digit_budget=10)
    with pytest.raises(InfiniteDensityError):
        build_support_graph(ExponentSet.from_vectors([(1, 0)]), 3)

@settings(max_examples=25, deadline=None)
@given(
    vectors=st.sampled_from([[3], [5], [5, 3], [4, 1], [6, 2], [(1, 1)], [(2, 1), (1, 2)]]),
    p=st.sampled_from([2, 3]),
)
def test_mean_matches_simple_cycle_enumeration(vectors, p):
    """Karp's mean equals the least mean over all simple cycles."""
    graph = build_support_graph(ExponentSet.from_vectors(vectors), p)
    best = min(
        Fraction(
            sum(graph.edge_weight(u, v) for u, v in zip(cycle, cycle[1:] + cycle[:1])),
            len(cycle),
        )
        for cycle in nx.simple_cycles(graph.graph)
    )
    assert min_mean_cycle(graph).mean == best
