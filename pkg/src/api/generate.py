"""
Graph Generation Tool

generate_graph: Build a tree, Watts-Strogatz ring or structured graph and
return it in edge-list form with provenance.

Use cases:
- Producing fixture graphs for analyze_graph
- Inspecting single rewiring samples of a sweep
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..integration.data_converters import DataConverter
from ..models.generators import (
    DEFAULT_KDEG,
    GenerationStats,
    StructuredParams,
    WsParams,
    generate_with_stats,
    provenance_comment,
    structured_graph,
)
from ..models.graph import Graph
from ..models.tree import TreeSpec, tree_graph


logger = logging.getLogger(__name__)

MODELS = ("tree", "ws", "structured")


@dataclass(frozen=True)
class GeneratedGraph:
    """A generated graph plus the comment lines describing how it was made"""

    model: str
    graph: Graph
    comments: List[str]
    stats: Optional[GenerationStats] = None

    def to_edge_list(self) -> str:
        return DataConverter.serialize_edge_list(self.graph, self.comments)


def build_model_graph(
    model: str,
    r: Optional[int] = None,
    k: Optional[int] = None,
    n: Optional[int] = None,
    kdeg: int = DEFAULT_KDEG,
    p: float = 0.0,
    mode: str = "rewire",
    seed: int = 0
) -> GeneratedGraph:
    """
    Construct one graph of the requested model.

    Args:
        model: "tree" (needs r, k), "ws" (needs n; uses kdeg, p, mode, seed)
               or "structured" (needs n, a power of two >= 8)

    Raises:
        ValueError: On an unknown model, a missing parameter or invalid values
    """
    if model not in MODELS:
        raise ValueError(f"Invalid model: '{model}'. Must be one of: {list(MODELS)}")

    if model == "tree":
        if r is None or k is None:
            raise ValueError("Model 'tree' requires 'r' and 'k'")
        spec = TreeSpec(r=r, k=k)
        graph = tree_graph(spec)
        comment = provenance_comment("tree", {"r": r, "k": k, "n": graph.n})
        return GeneratedGraph(model=model, graph=graph, comments=[comment])

    if n is None:
        raise ValueError(f"Model '{model}' requires 'n'")

    if model == "structured":
        graph = structured_graph(StructuredParams(n=n))
        comment = provenance_comment("structured", {"n": n})
        return GeneratedGraph(model=model, graph=graph, comments=[comment])

    params = WsParams(n=n, kdeg=kdeg, p=p, seed=seed, mode=mode)
    graph, stats = generate_with_stats(params)
    comment = provenance_comment("ws", {
        "n": params.n,
        "kdeg": params.kdeg,
        "p": params.p,
        "mode": params.mode.value,
        "seed": params.seed,
    })
    logger.debug(f"Generated ws graph: {stats}")
    return GeneratedGraph(model=model, graph=graph, comments=[comment], stats=stats)


def generate_graph(
    model: str,
    r: Optional[int] = None,
    k: Optional[int] = None,
    n: Optional[int] = None,
    kdeg: int = DEFAULT_KDEG,
    p: float = 0.0,
    mode: str = "rewire",
    seed: int = 0
) -> Dict[str, Any]:
    """
    Generate a graph and return it as JSON-ready data.

    Returns:
        Dict with:
        - status: "success"
        - model, n, edge_count, degrees
        - edge_list: text in the edge-list format (provenance comment first)
        - graph: {"n", "edges"} payload accepted by analyze_graph
        - generation: rewired/resamples/added counts and rng (ws only)

    Example:
        generate_graph(model="structured", n=16)["edge_count"]  # 56
    """
    generated = build_model_graph(model, r=r, k=k, n=n, kdeg=kdeg, p=p, mode=mode, seed=seed)
    graph = generated.graph

    result = {
        "status": "success",
        "model": model,
        "n": graph.n,
        "edge_count": graph.edge_count,
        "degrees": graph.degrees(),
        "edge_list": generated.to_edge_list(),
        "graph": DataConverter.graph_to_payload(graph),
    }
    if generated.stats is not None:
        result["generation"] = {
            "rewired": generated.stats.rewired,
            "resamples": generated.stats.resamples,
            "added": generated.stats.added,
            "rng": generated.stats.rng_algorithm,
        }
    return result
