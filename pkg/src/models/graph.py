"""
Graph Core

Canonical representation of simple undirected, unweighted graphs.

Provides:
- Graph: immutable node count + normalized edge set
- AdjacencyMatrix: the 0/1 sociomatrix view of a Graph
- Construction, validation, adjacency conversion and connectivity checks

Node ids are 0-based everywhere (files included). The 1-based labels used
in diagrams and reports are a presentation concern only.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np


Edge = Tuple[int, int]

# Largest graph the dense n x n solvers accept (one int64 matrix is 128 MiB)
MAX_DENSE_NODES = 4096


def normalize_edge(u: int, v: int) -> Edge:
    """Return the pair with the smaller id first."""
    return (u, v) if u < v else (v, u)


def _check_node_id(value: Any, n: int, context: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{context}: node id must be an integer, got {value!r}")
    node = int(value)
    if node < 0 or node >= n:
        raise ValueError(f"{context}: node id {node} out of range [0, {n})")
    return node


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph over nodes 0..n-1.

    Edges are stored as (u, v) pairs with u < v. Instances are immutable;
    generators always return new graphs.
    """

    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise ValueError(f"Node count must be an integer, got {self.n!r}")
        if self.n < 1:
            raise ValueError(f"Node count must be >= 1, got {self.n}")

        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", frozenset(self.edges))

        for u, v in self.edges:
            if u == v:
                raise ValueError(f"Self-loop on node {u} is not allowed")
            if not u < v:
                raise ValueError(f"Edge ({u}, {v}) is not normalized (expected u < v)")
            if u < 0 or v >= self.n:
                raise ValueError(f"Edge ({u}, {v}) has endpoint out of range [0, {self.n})")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_lists(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbor tuple for every node."""
        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in neighbors)

    def neighbors(self, node: int) -> Tuple[int, ...]:
        return self.adjacency_lists[node]

    def degrees(self) -> List[int]:
        """Degree sequence indexed by node id."""
        return [len(nbrs) for nbrs in self.adjacency_lists]

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """
    Symmetric 0/1 matrix with zero diagonal (the sociomatrix).

    cells is a read-only numpy int64 array of shape (n, n).
    """

    cells: np.ndarray

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1]:
            raise ValueError(f"Adjacency matrix must be square, got shape {cells.shape}")
        if not np.isin(cells, (0, 1)).all():
            raise ValueError("Adjacency matrix entries must be 0 or 1")
        if np.any(np.diag(cells) != 0):
            raise ValueError("Adjacency matrix must have a zero diagonal")
        if not np.array_equal(cells, cells.T):
            raise ValueError("Adjacency matrix must be symmetric")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @property
    def n(self) -> int:
        return int(self.cells.shape[0])

    def cell(self, u: int, v: int) -> int:
        return int(self.cells[u, v])

    def to_rows(self) -> List[List[int]]:
        return self.cells.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a Graph from a node count and a sequence of pairs.

    Reversed and repeated pairs are deduplicated; self-loops are rejected.

    Args:
        n: Node count (>= 1)
        edges: Iterable of (u, v) pairs with 0-based ids

    Returns:
        Graph with the normalized, deduplicated edge set

    Raises:
        ValueError: If n < 1, an endpoint is out of range, or a pair is a self-loop

    Example:
        >>> build_graph(3, [(0, 1), (1, 0)]).edge_count
        1
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ValueError(f"Node count must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"Node count must be >= 1, got {n}")

    normalized = set()
    for i, pair in enumerate(edges):
        if len(pair) != 2:
            raise ValueError(f"Edge {i} must be a pair, got {pair!r}")
        u = _check_node_id(pair[0], n, f"Edge {i}")
        v = _check_node_id(pair[1], n, f"Edge {i}")
        if u == v:
            raise ValueError(f"Edge {i}: self-loop on node {u} is not allowed")
        normalized.add(normalize_edge(u, v))

    return Graph(n=int(n), edges=frozenset(normalized))


def check_dense_size(n: int) -> int:
    """
    Reject node counts whose n x n matrices would not fit in memory.

    Raises:
        ValueError: If n exceeds MAX_DENSE_NODES
    """
    if n > MAX_DENSE_NODES:
        raise ValueError(
            f"Graph has {n} nodes; dense distance matrices are limited to {MAX_DENSE_NODES} nodes"
        )
    return n


def to_adjacency(graph: Graph) -> AdjacencyMatrix:
    """
    Write the adjacency matrix (sociomatrix) of a graph.

    Raises:
        ValueError: If the graph exceeds MAX_DENSE_NODES
    """
    check_dense_size(graph.n)
    cells = np.zeros((graph.n, graph.n), dtype=np.int64)
    if graph.edges:
        us, vs = np.array(graph.sorted_edges(), dtype=np.int64).T
        cells[us, vs] = 1
        cells[vs, us] = 1
    return AdjacencyMatrix(cells)


def from_adjacency(matrix: Any) -> Graph:
    """
    Rebuild a Graph from an adjacency matrix.

    Args:
        matrix: AdjacencyMatrix or any square 0/1 array-like

    Returns:
        Graph whose edge set is exactly the upper-triangle ones

    Raises:
        ValueError: If the matrix is not a valid sociomatrix
    """
    adjacency = matrix if isinstance(matrix, AdjacencyMatrix) else AdjacencyMatrix(np.asarray(matrix))
    us, vs = np.nonzero(np.triu(adjacency.cells, k=1))
    return build_graph(adjacency.n, zip(us.tolist(), vs.tolist()))


def to_networkx(graph: Graph) -> nx.Graph:
    """Convert to a networkx.Graph with nodes 0..n-1."""
    G = nx.Graph()
    G.add_nodes_from(range(graph.n))
    G.add_edges_from(graph.sorted_edges())
    return G


def from_networkx(G: nx.Graph) -> Graph:
    """
    Convert a networkx graph whose nodes are exactly 0..n-1.

    Raises:
        ValueError: If node labels are not 0..n-1 or the graph is directed
    """
    if G.is_directed():
        raise ValueError("Directed graphs are not supported")
    n = G.number_of_nodes()
    if set(G.nodes()) != set(range(n)):
        raise ValueError("networkx graph nodes must be labelled 0..n-1")
    return build_graph(n, G.edges())


def is_connected(graph: Graph) -> bool:
    """True iff every node is reachable from node 0."""
    if graph.n <= 1:
        return True
    return nx.is_connected(to_networkx(graph))


def relabel_one_based(pair: Edge) -> Edge:
    """Presentation helper: 0-based pair to 1-based labels."""
    return (pair[0] + 1, pair[1] + 1)
