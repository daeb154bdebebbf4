"""
Separation Results

Distance matrices and the separation statistics computed from them.

The distance sum is always exact. Both normalizations appear in the
summary because the two counting methods disagree:
- (N-1)^2 normalization: sum / (N-1)^2, reported as mean_paper_norm
- ordered-pair mean:   sum / (N(N-1))
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np


# Sentinel for pairs with no connecting path (distinct from the 0 diagonal)
UNREACHABLE = -1


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """
    n x n matrix of shortest-path hop counts.

    cells is a read-only int64 array; UNREACHABLE marks pairs in different
    components.
    """

    cells: np.ndarray

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1]:
            raise ValueError(f"Distance matrix must be square, got shape {cells.shape}")
        if np.any(np.diag(cells) != 0):
            raise ValueError("Distance matrix must have a zero diagonal")
        if np.any(cells < UNREACHABLE):
            raise ValueError("Distance matrix cells must be >= 0 or UNREACHABLE")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @property
    def n(self) -> int:
        return int(self.cells.shape[0])

    def distance(self, i: int, j: int) -> Optional[int]:
        """Hop count between i and j, or None if unreachable."""
        value = int(self.cells[i, j])
        return None if value == UNREACHABLE else value

    def is_reachable(self, i: int, j: int) -> bool:
        return int(self.cells[i, j]) != UNREACHABLE

    def _finite_off_diagonal(self) -> np.ndarray:
        mask = self.cells != UNREACHABLE
        np.fill_diagonal(mask, False)
        return mask

    def max_distance(self) -> int:
        """Greatest finite cell (0 when no pair is reachable)."""
        mask = self._finite_off_diagonal()
        return int(self.cells[mask].max()) if mask.any() else 0

    def row_sums(self) -> List[int]:
        """Sum of finite distances from each node."""
        finite = np.where(self.cells == UNREACHABLE, 0, self.cells)
        return finite.sum(axis=1).tolist()

    def eccentricities(self) -> List[int]:
        """Maximum finite distance from each node."""
        finite = np.where(self.cells == UNREACHABLE, 0, self.cells)
        return finite.max(axis=1).tolist()

    def distance_histogram(self) -> Dict[int, int]:
        """Number of ordered pairs at each finite distance >= 1."""
        values, counts = np.unique(self.cells[self._finite_off_diagonal()], return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}

    def to_rows(self) -> List[List[Optional[int]]]:
        """Nested lists with None for unreachable pairs (JSON-ready)."""
        return [
            [None if value == UNREACHABLE else value for value in row]
            for row in self.cells.tolist()
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)


@dataclass(frozen=True)
class SeparationSummary:
    """Distance sum, both normalized means, diameter and reachable-pair count."""

    n: int
    distance_sum: int
    mean_paper_norm: Fraction
    mean_ordered_pairs: Fraction
    diameter: int
    reachable_ordered_pairs: int

    @property
    def connected(self) -> bool:
        return self.reachable_ordered_pairs == self.n * (self.n - 1)

    @property
    def mean_reachable_pairs(self) -> Optional[Fraction]:
        """Mean over reachable ordered pairs only (None when there are none)."""
        if self.reachable_ordered_pairs == 0:
            return None
        return Fraction(self.distance_sum, self.reachable_ordered_pairs)

    def to_dict(self) -> Dict[str, Any]:
        reachable_mean = self.mean_reachable_pairs
        return {
            "n": self.n,
            "distance_sum": self.distance_sum,
            "mean_paper_norm": float(self.mean_paper_norm),
            "mean_ordered_pairs": float(self.mean_ordered_pairs),
            "mean_paper_norm_exact": str(self.mean_paper_norm),
            "mean_ordered_pairs_exact": str(self.mean_ordered_pairs),
            "mean_reachable_pairs": None if reachable_mean is None else float(reachable_mean),
            "diameter": self.diameter,
            "reachable_ordered_pairs": self.reachable_ordered_pairs,
            "connected": self.connected,
        }


def summarize(dm: DistanceMatrix) -> SeparationSummary:
    """
    Compute separation statistics from a distance matrix.

    Unreachable pairs are excluded from the distance sum and counted
    separately through reachable_ordered_pairs.

    Args:
        dm: Distance matrix with n >= 2

    Returns:
        SeparationSummary with exact rational means

    Raises:
        ValueError: If n < 2 (no pairs to average)

    Example:
        K2 gives distance_sum 2, mean_paper_norm 2, mean_ordered_pairs 1.
    """
    n = dm.n
    if n < 2:
        raise ValueError(f"Separation statistics need at least 2 nodes, got n={n}")

    mask = dm._finite_off_diagonal()
    distance_sum = int(dm.cells[mask].sum())
    reachable = int(mask.sum())

    return SeparationSummary(
        n=n,
        distance_sum=distance_sum,
        mean_paper_norm=Fraction(distance_sum, (n - 1) ** 2),
        mean_ordered_pairs=Fraction(distance_sum, n * (n - 1)),
        diameter=dm.max_distance(),
        reachable_ordered_pairs=reachable,
    )
