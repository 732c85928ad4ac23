"""
The digit graph of (D, p) and its minimum cycle mean.

Nodes are the vectors e with 1 <= e <= sum_D d. There is an edge e -> e'
when some digit vector v in [0, p)^{#D} solves sum_D v_d d = p e - e'; its
weight is the least digit sum sum_D v_d among those v. A solution U of
length r is the same thing as a closed walk phi_U(0) -> ... -> phi_U(r-1)
-> phi_U(0) together with a digit vector on each step (the step leaving
phi_U(k) carries the digits of position r - 1 - k), so

    delta_p(D) = (minimum cycle mean) / (p - 1).

The minimum mean is computed exactly with Karp's recurrence; the critical
subgraph (edges on some optimal cycle) comes from feasible potentials of
the integer-scaled reduced weights.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from ExpSumLab.density.exponent_set import ExponentSet, Vector
from ExpSumLab.utils.constants import DEFAULT_DIGIT_BUDGET, DEFAULT_NODE_BUDGET
from ExpSumLab.utils.errors import BudgetError, InfiniteDensityError

logger = logging.getLogger(__name__)

DigitVector = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SupportGraph:
    """
    Digit graph of (D, p).

    Attributes
    ----------
    exponents : ExponentSet
        The set D.
    p : int
        The prime.
    graph : nx.DiGraph
        Edge attributes: ``digits`` (all digit vectors of the edge, sorted),
        ``weight`` (least digit sum) and ``min_digits`` (the vectors of that
        weight).
    """

    exponents: ExponentSet
    p: int
    graph: nx.DiGraph = field(repr=False)

    @property
    def nodes(self) -> List[Vector]:
        return sorted(self.graph.nodes)

    def edge_weight(self, e: Vector, e_prime: Vector) -> Optional[int]:
        data = self.graph.get_edge_data(e, e_prime)
        return None if data is None else data["weight"]

    def edge_digits(self, e: Vector, e_prime: Vector) -> Tuple[DigitVector, ...]:
        data = self.graph.get_edge_data(e, e_prime)
        return () if data is None else data["digits"]


def node_count(exponents: ExponentSet) -> int:
    total = 1
    for bound in exponents.column_sums():
        total *= bound
    return total


@lru_cache(maxsize=64)
def build_support_graph(
    exponents: ExponentSet,
    p: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> SupportGraph:
    """
    Build the digit graph of (D, p).

    Parameters
    ----------
    exponents : ExponentSet
        The set D.
    p : int
        The prime.
    node_budget : int
        Largest admissible prod_i (sum_D d)_i.
    digit_budget : int
        Largest admissible p^{#D}.

    Returns
    -------
    SupportGraph
        The graph; nodes without edges are kept.

    Raises
    ------
    InfiniteDensityError
        If D lies in a coordinate hyperplane.
    BudgetError
        If a budget is exceeded.
    """
    if exponents.is_hyperplane_contained():
        raise InfiniteDensityError(f"{exponents} lies in a coordinate hyperplane")
    bounds = np.array(exponents.column_sums(), dtype=np.int64)
    total_nodes = node_count(exponents)
    if total_nodes > node_budget:
        raise BudgetError("support graph nodes", total_nodes, node_budget)
    k = len(exponents)
    if p**k > digit_budget:
        raise BudgetError("digit vectors", p**k, digit_budget)

    digit_vectors = np.array(list(product(range(p), repeat=k)), dtype=np.int64).reshape(-1, k)
    matrix = np.array(exponents.vectors, dtype=np.int64).reshape(k, exponents.n)
    sums = digit_vectors @ matrix
    weights = digit_vectors.sum(axis=1)

    graph = nx.DiGraph()
    ranges = [range(1, int(b) + 1) for b in bounds]
    for e in product(*ranges):
        graph.add_node(tuple(e))
    for e in sorted(graph.nodes):
        targets = p * np.array(e, dtype=np.int64) - sums
        valid = np.all(targets >= 1, axis=1) & np.all(targets <= bounds, axis=1)
        grouped: Dict[Vector, List[int]] = {}
        for index in np.flatnonzero(valid):
            grouped.setdefault(tuple(int(x) for x in targets[index]), []).append(int(index))
        for e_prime, indices in sorted(grouped.items()):
            vectors = sorted(tuple(int(x) for x in digit_vectors[i]) for i in indices)
            least = min(int(weights[i]) for i in indices)
            graph.add_edge(
                e,
                e_prime,
                digits=tuple(vectors),
                weight=least,
                min_digits=tuple(v for v in vectors if sum(v) == least),
            )
    logger.debug(
        "support graph of %s at p=%d: %d nodes, %d edges",
        exponents,
        p,
        graph.number_of_nodes(),
        graph.number_of_edges(),
    )
    return SupportGraph(exponents=exponents, p=p, graph=graph)


def _cyclic_components(graph: nx.DiGraph) -> List[List[Vector]]:
    components = []
    for component in nx.strongly_connected_components(graph):
        nodes = sorted(component)
        if len(nodes) > 1 or graph.has_edge(nodes[0], nodes[0]):
            components.append(nodes)
    return sorted(components)


def _karp(graph: nx.DiGraph, nodes: List[Vector]) -> Fraction:
    """Karp's minimum cycle mean of one strongly connected component."""
    index = {v: i for i, v in enumerate(nodes)}
    size = len(nodes)
    edges = [
        (index[u], index[v], data["weight"])
        for u, v, data in graph.subgraph(nodes).edges(data=True)
    ]
    table: List[List[Optional[int]]] = [[None] * size for _ in range(size + 1)]
    table[0][0] = 0
    for k in range(1, size + 1):
        row, previous = table[k], table[k - 1]
        for u, v, w in edges:
            if previous[u] is not None:
                candidate = previous[u] + w
                if row[v] is None or candidate < row[v]:
                    row[v] = candidate
    best = None
    for v in range(size):
        if table[size][v] is None:
            continue
        worst = None
        for k in range(size):
            if table[k][v] is None:
                continue
            mean = Fraction(table[size][v] - table[k][v], size - k)
            if worst is None or mean > worst:
                worst = mean
        if worst is not None and (best is None or worst < best):
            best = worst
    return best


@dataclass(frozen=True, eq=False)
class MinMeanCycle:
    """
    Minimum cycle mean and critical subgraph.

    Attributes
    ----------
    mean : Fraction
        mu*, the least weight-per-step of a cycle.
    critical_nodes : Tuple[Vector, ...]
        Nodes on some optimal cycle, sorted.
    critical_edges : Tuple[Tuple[Vector, Vector], ...]
        Edges on some optimal cycle, sorted.
    critical_graph : nx.DiGraph
        The subgraph they form.
    """

    mean: Fraction
    critical_nodes: Tuple[Vector, ...]
    critical_edges: Tuple[Tuple[Vector, Vector], ...]
    critical_graph: nx.DiGraph = field(repr=False)


def min_mean_cycle(support: SupportGraph) -> MinMeanCycle:
    """
    Exact minimum cycle mean and the edges of the optimal cycles.

    With mu* = a/b, the scaled reduced weights b w - a make every cycle
    non-negative and the optimal ones zero. Bellman-Ford potentials from a
    virtual source make every edge non-negative; an edge is critical iff it
    is tight and lies in a strongly connected component of the tight graph.

    Raises
    ------
    InfiniteDensityError
        If the graph has no cycle.
    """
    graph = support.graph
    components = _cyclic_components(graph)
    if not components:
        raise InfiniteDensityError(f"the support graph of {support.exponents} is acyclic")
    mean = min(_karp(graph, nodes) for nodes in components)
    a, b = mean.numerator, mean.denominator

    reduced = nx.DiGraph()
    source = "source"
    reduced.add_node(source)
    for v in graph.nodes:
        reduced.add_edge(source, v, weight=0)
    for u, v, data in graph.edges(data=True):
        reduced.add_edge(u, v, weight=b * data["weight"] - a)
    potential = nx.single_source_bellman_ford_path_length(reduced, source)

    tight = nx.DiGraph()
    for u, v, data in graph.edges(data=True):
        if b * data["weight"] - a + potential[u] - potential[v] == 0:
            tight.add_edge(u, v)
    component_of = {}
    for i, component in enumerate(nx.strongly_connected_components(tight)):
        for v in component:
            component_of[v] = (i, len(component))
    critical_edges = sorted(
        (u, v)
        for u, v in tight.edges
        if component_of[u][0] == component_of[v][0] and (component_of[u][1] > 1 or u == v)
    )
    critical = nx.DiGraph()
    critical.add_edges_from(critical_edges)
    logger.debug("minimum cycle mean %s, %d critical edges", mean, len(critical_edges))
    return MinMeanCycle(
        mean=mean,
        critical_nodes=tuple(sorted(critical.nodes)),
        critical_edges=tuple(critical_edges),
        critical_graph=critical,
    )


def closed_walk_minimum(support: SupportGraph, r: int) -> Optional[int]:
    """
    Least weight of a closed walk of length r, by min-plus matrix powers
    on each strongly connected component; None if there is none.
    """
    best = None
    for nodes in _cyclic_components(support.graph):
        index = {v: i for i, v in enumerate(nodes)}
        size = len(nodes)
        matrix = np.full((size, size), np.inf)
        for u, v, data in support.graph.subgraph(nodes).edges(data=True):
            matrix[index[u], index[v]] = data["weight"]
        result = None
        base = matrix
        exponent = r
        while exponent:
            if exponent & 1:
                result = base if result is None else _min_plus(result, base)
            exponent >>= 1
            if exponent:
                base = _min_plus(base, base)
        diagonal = np.diagonal(result).min()
        if np.isfinite(diagonal) and (best is None or diagonal < best):
            best = int(diagonal)
    return best


def _min_plus(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.min(a[:, :, None] + b[None, :, :], axis=1)


def support_cycles(cycle_data: MinMeanCycle, max_length: int) -> List[Tuple[Vector, ...]]:
    """
    Simple cycles of the critical subgraph with at most `max_length`
    nodes, each rotated to start at its least node, in sorted order.
    """
    cycles = []
    for cycle in nx.simple_cycles(cycle_data.critical_graph):
        if len(cycle) > max_length:
            continue
        start = cycle.index(min(cycle))
        cycles.append(tuple(cycle[start:] + cycle[:start]))
    return sorted(set(cycles), key=lambda c: (len(c), c))
