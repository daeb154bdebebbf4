"""
Graph Analysis Tool

analyze_graph: All-pairs shortest paths and separation statistics of a graph.

Use cases:
- Average degree of separation under both normalizations
- Diameter, eccentricities and distance histograms
- The intermediate matrices of every propagation pass
- Cross-checking the matrix propagation solver against the BFS oracle
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from ..integration.data_converters import DataConverter
from ..models.graph import Graph
from ..models.separation import DistanceMatrix, SeparationSummary
from ..solvers.base_solver import PathSolver
from ..solvers.matrix_solver import MatrixPropagationSolver, propagation_trace
from ..solvers.networkx_solver import NetworkXOracleSolver


logger = logging.getLogger(__name__)

SOLVERS = ("matrix", "networkx")


@dataclass(frozen=True)
class GraphAnalysis:
    """Distance matrix and summary of one analyzed graph"""

    graph: Graph
    distances: DistanceMatrix
    summary: SeparationSummary


def make_solver(solver: str = "matrix", n_jobs: int = 1) -> PathSolver:
    """Instantiate a shortest-path backend by name."""
    if solver == "matrix":
        return MatrixPropagationSolver()
    if solver == "networkx":
        return NetworkXOracleSolver(n_jobs=n_jobs)
    raise ValueError(f"Invalid solver: '{solver}'. Must be one of: {list(SOLVERS)}")


def analyze(graph: Graph, solver: str = "matrix", n_jobs: int = 1) -> GraphAnalysis:
    """
    Solve all-pairs shortest paths and summarize.

    Raises:
        ValueError: If the graph has fewer than 2 nodes
    """
    backend = make_solver(solver, n_jobs)
    backend.solve(graph)
    return GraphAnalysis(
        graph=graph,
        distances=backend.get_distances(),
        summary=backend.get_summary(),
    )


def analyze_graph(
    edge_list: Optional[str] = None,
    graph: Optional[Dict[str, Any]] = None,
    include_matrix: bool = False,
    include_trace: bool = False,
    solver: str = "matrix",
    solver_options: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    """
    Analyze a graph given as edge-list text or as a {"n", "edges"} payload.

    Args:
        edge_list: Text in the edge-list format
        graph: Alternative JSON payload {"n": int, "edges": [[u, v], ...]}
        include_matrix: Add the full distance matrix (None = unreachable)
        include_trace: Add the matrix after each propagation pass p = 1, 2, ...
        solver: "matrix" (propagation) or "networkx" (BFS oracle)
        solver_options: Optional {"n_jobs": int} for the networkx solver

    Returns:
        Dict with:
        - status: "success"
        - solver: solver result (status connected/disconnected, solve time)
        - summary: distance_sum, both means (float and exact), diameter,
          reachable_ordered_pairs, connected
        - edge_count, eccentricities, distance_histogram
        - distance_matrix (when include_matrix)
        - propagation_trace (when include_trace): list of matrices, one per pass

    Raises:
        ValueError: If neither or both inputs are given, or parsing fails
    """
    if (edge_list is None) == (graph is None):
        raise ValueError("Provide exactly one of 'edge_list' or 'graph'")

    parsed = (
        DataConverter.parse_edge_list(edge_list)
        if edge_list is not None
        else DataConverter.graph_from_payload(graph)
    )

    opts = solver_options or {}
    backend = make_solver(solver, n_jobs=opts.get("n_jobs", 1))
    backend.solve(parsed)
    distances = backend.get_distances()

    logger.info(
        f"Analyzed graph n={parsed.n} edges={parsed.edge_count} "
        f"with {solver} solver ({backend.get_status().value})"
    )

    result = {
        "status": "success",
        "n": parsed.n,
        "edge_count": parsed.edge_count,
        "solver": backend.format_solution(),
        "summary": backend.get_summary().to_dict(),
        "eccentricities": distances.eccentricities(),
        "distance_histogram": {str(d): c for d, c in distances.distance_histogram().items()},
    }
    if include_matrix:
        result["distance_matrix"] = distances.to_rows()
    if include_trace:
        result["propagation_trace"] = [snapshot.to_rows() for snapshot in propagation_trace(parsed)]
    return result
