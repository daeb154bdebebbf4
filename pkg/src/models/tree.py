"""
Tree Model

Complete r-ary trees and the level-based counting method for average
separation.

Levels are S_1 (root, 1 node) .. S_k (leaves, r^(k-1) nodes). For a node at
level S_m the reachability row gives, for every step count s, how many
nodes sit exactly s hops away. Rows are derived from ancestor/descendant
path counting, never transcribed, so any (r, k) can be checked against a
breadth-first oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx

from .graph import MAX_DENSE_NODES, Graph, from_networkx


# Largest tree tree_graph() will materialize; every tree it builds can be solved densely
MAX_TREE_NODES = MAX_DENSE_NODES

# node_count() results must fit an int64 distance-matrix index
MAX_NODE_COUNT = 2 ** 63 - 1


def _check_positive_int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def node_count(r: int, k: int) -> int:
    """
    Number of nodes N = (r^k - 1) / (r - 1) in a complete r-ary tree of k levels.

    Args:
        r: Branching degree (>= 2)
        k: Number of levels (>= 1)

    Returns:
        N, the sum r^0 + r^1 + ... + r^(k-1)

    Raises:
        ValueError: If r < 2, k < 1, or N overflows a 64-bit count
    """
    _check_positive_int(r, "r", 2)
    _check_positive_int(k, "k", 1)
    count = (r ** k - 1) // (r - 1)
    if count > MAX_NODE_COUNT:
        raise ValueError(f"Node count for r={r}, k={k} overflows a 64-bit count")
    return count


def max_steps(k: int) -> int:
    """Tree diameter l = 2(k - 1): leaf to leaf through the root."""
    _check_positive_int(k, "k", 1)
    return 2 * (k - 1)


@dataclass(frozen=True)
class TreeSpec:
    """Branching degree r and level count k of a complete r-ary tree."""

    r: int
    k: int

    def __post_init__(self):
        _check_positive_int(self.r, "r", 2)
        _check_positive_int(self.k, "k", 1)

    @property
    def node_count(self) -> int:
        return node_count(self.r, self.k)

    @property
    def max_steps(self) -> int:
        return max_steps(self.k)

    @property
    def depth(self) -> int:
        return self.k - 1

    def level_size(self, level: int) -> int:
        """|S_m| = r^(m-1)."""
        self.check_level(level)
        return self.r ** (level - 1)

    def check_level(self, level: int) -> int:
        if isinstance(level, bool) or not isinstance(level, int):
            raise ValueError(f"level must be an integer, got {level!r}")
        if level < 1 or level > self.k:
            raise ValueError(f"level must be in 1..{self.k}, got {level}")
        return level


@dataclass(frozen=True)
class ReachabilityTable:
    """
    Reachability counts for every level of a tree.

    rows[m - 1] is the row of level S_m; entry s - 1 counts the nodes exactly
    s steps away from any single node of that level.
    """

    spec: TreeSpec
    rows: Tuple[Tuple[int, ...], ...]

    def row(self, level: int) -> Tuple[int, ...]:
        self.spec.check_level(level)
        return self.rows[level - 1]

    @property
    def width(self) -> int:
        """Number of step columns (l for k >= 2)."""
        return max(len(row) for row in self.rows)

    def labelled_rows(self) -> List[Tuple[str, Tuple[int, ...]]]:
        """Rows S_k .. S_1 (leaf level first), labelled."""
        return [(f"S{m}", self.rows[m - 1]) for m in range(self.spec.k, 0, -1)]

    def as_matrix(self) -> List[List[Optional[int]]]:
        """k x l matrix, leaf level first, with None for absent columns."""
        width = self.width
        return [list(row) + [None] * (width - len(row)) for _, row in self.labelled_rows()]


def tree_graph(spec: TreeSpec) -> Graph:
    """
    Build the complete r-ary tree with heap numbering.

    Node 0 is the root; the children of node v are r*v+1 .. r*v+r.

    Raises:
        ValueError: If the tree exceeds MAX_TREE_NODES
    """
    n = spec.node_count
    if n > MAX_TREE_NODES:
        raise ValueError(
            f"Tree r={spec.r}, k={spec.k} has {n} nodes, above the {MAX_TREE_NODES} limit"
        )
    return from_networkx(nx.full_rary_tree(spec.r, n))


def level_of(spec: TreeSpec, node: int) -> int:
    """Level index m (1 = root) of a heap-numbered node."""
    if node < 0 or node >= spec.node_count:
        raise ValueError(f"node must be in [0, {spec.node_count}), got {node}")
    level = 1
    first_of_next = 1
    while node >= first_of_next:
        level += 1
        first_of_next = first_of_next * spec.r + 1
    return level


def reachability_counts(spec: TreeSpec, level: int) -> List[int]:
    """
    Count nodes at each distance s from one node of level S_m.

    With d = m - 1 the node's depth and D = k - 1 the tree depth, the nodes
    at distance s are:
    - its r^s descendants at depth d + s (when s <= D - d)
    - its ancestor at height s (when s <= d)
    - for each height a in 1..min(d, s - 1) with s - a <= D - d + a, the
      (r - 1) * r^(s - a - 1) nodes of that ancestor's other subtrees

    Args:
        spec: Tree specification
        level: Level index m in 1..k

    Returns:
        [count(1), count(2), ...] up to the level's largest distance

    Raises:
        ValueError: If level is outside 1..k

    Example:
        >>> reachability_counts(TreeSpec(r=3, k=4), 4)
        [1, 3, 3, 8, 6, 18]
    """
    spec.check_level(level)
    r = spec.r
    d = level - 1
    D = spec.depth
    farthest = D if d == 0 else d + D

    counts = []
    for s in range(1, farthest + 1):
        count = 0
        if s <= D - d:
            count += r ** s
        if s <= d:
            count += 1
        for a in range(1, min(d, s - 1) + 1):
            if s - a <= D - d + a:
                count += (r - 1) * r ** (s - a - 1)
        counts.append(count)
    return counts


def reachability_table(spec: TreeSpec) -> ReachabilityTable:
    """Generate the reachability row of every level."""
    rows = tuple(tuple(reachability_counts(spec, m)) for m in range(1, spec.k + 1))
    return ReachabilityTable(spec=spec, rows=rows)


def tree_distance_sum(spec: TreeSpec) -> int:
    """Sum of distances over all ordered node pairs, from the table."""
    table = reachability_table(spec)
    return sum(
        spec.level_size(m) * sum(s * count for s, count in enumerate(table.row(m), start=1))
        for m in range(1, spec.k + 1)
    )


def tree_average_separation(spec: TreeSpec) -> Fraction:
    """
    Level-weighted average separation of a complete r-ary tree.

    Evaluates sum_i [sum_j x_ij * j / (N - 1)] * r^(k-i) / N where matrix row
    i is level S_(k+1-i), which holds r^(k-i) nodes. The result equals the
    ordered-pair mean distance_sum / (N(N-1)).

    Args:
        spec: Tree specification with k >= 2

    Returns:
        Exact average as a Fraction

    Raises:
        ValueError: If k < 2 (a single node has no pairs)
    """
    if spec.k < 2:
        raise ValueError(f"Average separation needs k >= 2, got k={spec.k}")

    n = spec.node_count
    table = reachability_table(spec)

    total = Fraction(0)
    for i in range(1, spec.k + 1):
        row = table.row(spec.k + 1 - i)
        per_node = Fraction(sum(j * x for j, x in enumerate(row, start=1)), n - 1)
        total += per_node * spec.r ** (spec.k - i)
    return total / n
