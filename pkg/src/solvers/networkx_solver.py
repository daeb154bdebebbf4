"""
NetworkX Oracle Solver

Independent verification oracle for the matrix propagation solver.

Runs one breadth-first traversal per source with
nx.single_source_shortest_path_length and assembles the rows into a
DistanceMatrix. Per-source traversals may run concurrently (joblib threads);
rows are merged by source index so the result never depends on scheduling.
"""

from typing import Dict

import networkx as nx
import numpy as np
from joblib import Parallel, delayed

from .base_solver import PathSolver
from ..models.graph import Graph, check_dense_size, to_networkx
from ..models.separation import UNREACHABLE, DistanceMatrix


class NetworkXOracleSolver(PathSolver):
    """
    Breadth-first all-pairs oracle built on NetworkX.

    Args:
        n_jobs: Worker threads for per-source traversals (1 = sequential)
    """

    def __init__(self, n_jobs: int = 1):
        super().__init__(solver_name="networkx")
        self.n_jobs = n_jobs

    def compute_distances(self, graph: Graph) -> DistanceMatrix:
        check_dense_size(graph.n)
        G = to_networkx(graph)

        def source_row(source: int) -> Dict[int, int]:
            return nx.single_source_shortest_path_length(G, source)

        if self.n_jobs == 1:
            rows = [source_row(source) for source in range(graph.n)]
        else:
            rows = Parallel(n_jobs=self.n_jobs, prefer="threads")(
                delayed(source_row)(source) for source in range(graph.n)
            )

        dist = np.full((graph.n, graph.n), UNREACHABLE, dtype=np.int64)
        for source, lengths in enumerate(rows):
            targets = np.fromiter(lengths.keys(), dtype=np.int64, count=len(lengths))
            hops = np.fromiter(lengths.values(), dtype=np.int64, count=len(lengths))
            dist[source, targets] = hops

        return DistanceMatrix(dist)


def bfs_oracle(graph: Graph, n_jobs: int = 1) -> DistanceMatrix:
    """
    All-pairs hop distances by per-source breadth-first search.

    Same contract as matrix_apsp, computed independently.

    Args:
        graph: Input graph
        n_jobs: Worker threads for per-source traversals

    Returns:
        DistanceMatrix with UNREACHABLE where no path exists
    """
    return NetworkXOracleSolver(n_jobs=n_jobs).compute_distances(graph)
