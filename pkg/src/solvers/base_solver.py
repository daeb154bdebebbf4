"""
Base Solver Interface

Abstract base class defining the common interface for all shortest-path solvers.
All concrete solvers (matrix propagation, breadth-first oracle) inherit from this class.
"""

import logging
import time
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict, Optional

from ..models.graph import Graph, check_dense_size
from ..models.separation import DistanceMatrix, SeparationSummary, summarize


logger = logging.getLogger(__name__)


class SolveStatus(Enum):
    """Standard status codes across all solvers"""
    CONNECTED = "connected"
    DISCONNECTED = "disconnected"  # Solved, but some pairs are unreachable
    ERROR = "error"
    UNKNOWN = "unknown"


class PathSolver(ABC):
    """
    Abstract base class for all-pairs shortest-path solvers.

    Provides common interface and utilities for:
    - Solving (timed, with status tracking)
    - Distance matrix extraction
    - Separation summaries
    - Standard result formatting
    """

    def __init__(self, solver_name: str):
        """
        Initialize solver.

        Args:
            solver_name: Name of the solver implementation (e.g., "matrix", "networkx")
        """
        self.solver_name = solver_name
        self.graph: Optional[Graph] = None
        self.status = SolveStatus.UNKNOWN
        self.distances: Optional[DistanceMatrix] = None
        self.solve_time: Optional[float] = None

    @abstractmethod
    def compute_distances(self, graph: Graph) -> DistanceMatrix:
        """
        Compute the full distance matrix of a graph.

        Args:
            graph: Input graph (may be disconnected)

        Returns:
            DistanceMatrix with UNREACHABLE for pairs in different components
        """
        pass

    def solve(self, graph: Graph) -> SolveStatus:
        """
        Solve all-pairs shortest paths for a graph.

        Args:
            graph: Input graph

        Returns:
            CONNECTED or DISCONNECTED

        Raises:
            ValueError: If the graph is too large for a dense n x n matrix
            Any exception from compute_distances, after recording ERROR status
        """
        check_dense_size(graph.n)
        self.reset()
        self.graph = graph
        start_time = time.perf_counter()

        try:
            self.distances = self.compute_distances(graph)
        except Exception:
            self.status = SolveStatus.ERROR
            self.solve_time = time.perf_counter() - start_time
            logger.error(f"{self.solver_name} solver failed on n={graph.n}", exc_info=True)
            raise

        self.solve_time = time.perf_counter() - start_time
        reachable = self.distances.cells >= 0
        self.status = SolveStatus.CONNECTED if reachable.all() else SolveStatus.DISCONNECTED

        logger.debug(
            f"{self.solver_name} solved n={graph.n} edges={graph.edge_count} "
            f"status={self.status.value} in {self.solve_time:.4f}s"
        )
        return self.status

    def get_status(self) -> SolveStatus:
        """Get the current solve status"""
        return self.status

    def is_solved(self) -> bool:
        return self.status in (SolveStatus.CONNECTED, SolveStatus.DISCONNECTED)

    def get_distances(self) -> DistanceMatrix:
        """
        Get the computed distance matrix.

        Raises:
            ValueError: If solve() has not completed
        """
        if not self.is_solved():
            raise ValueError(f"{self.solver_name} solver has no solution (status={self.status.value})")
        return self.distances

    def get_summary(self) -> SeparationSummary:
        """Separation statistics of the solved graph."""
        return summarize(self.get_distances())

    def format_solution(
        self,
        additional_info: Optional[Dict[str, Any]] = None
    ) -> Dict[str, Any]:
        """
        Format solution in standard output format.

        Args:
            additional_info: Solver-specific additional information

        Returns:
            Standardized solution dictionary
        """
        result = {
            "solver": self.solver_name,
            "status": self.status.value,
            "solve_time_seconds": self.solve_time,
        }

        if self.is_solved() and self.distances.n >= 2:
            result["summary"] = self.get_summary().to_dict()

        if additional_info:
            result.update(additional_info)

        return result

    def reset(self):
        """Reset solver state for a new graph"""
        self.graph = None
        self.status = SolveStatus.UNKNOWN
        self.distances = None
        self.solve_time = None
