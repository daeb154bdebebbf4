#!/usr/bin/env python3
"""
Separation MCP Server

Model Context Protocol server providing degree-of-separation analytics.

Tools:
- generate_graph: Tree, Watts-Strogatz ring or structured graph as an edge list
- analyze_graph: All-pairs shortest paths and separation statistics
- tree_reachability_table: Reachability counts per level of an r-ary tree
- tree_average_separation: Level-formula average separation of an r-ary tree
- run_separation_sweep: Separation vs rewiring probability
- check_diameter_bound: Structured graph diameter vs its bound
- cross_check_tree_methods: Level formula vs matrix propagation
"""

import sys
import json
import logging
import os
from typing import Any, Callable, Dict
import asyncio
from pathlib import Path

# Repository root on sys.path so src.* imports resolve from any working directory
sys.path.insert(0, str(Path(__file__).resolve().parent))

from mcp.server import Server
from mcp.types import Tool, TextContent
from mcp.server.stdio import stdio_server

# Tool implementations
from src.api.generate import generate_graph
from src.api.analyze import analyze_graph
from src.api.tree_tables import tree_reachability_table, compute_tree_average
from src.api.sweep import run_separation_sweep
from src.api.bounds import check_diameter_bound, compare_tree_methods
from src.utils.logging_config import configure_logging

# Log file from SEP_MCP_LOG_PATH; handlers stay off stdout (stdio channel)
log_path = os.getenv('SEP_MCP_LOG_PATH', '/tmp/separation-mcp.log')
configure_logging(log_path, logging.INFO)

logger = logging.getLogger('separation-mcp')
logger.info(f"Separation MCP server starting (log file: {log_path})")


# MCP server instance
app = Server("separation-mcp")


TOOL_HANDLERS: Dict[str, Callable[..., Dict[str, Any]]] = {
    "generate_graph": generate_graph,
    "analyze_graph": analyze_graph,
    "tree_reachability_table": tree_reachability_table,
    "tree_average_separation": compute_tree_average,
    "run_separation_sweep": run_separation_sweep,
    "check_diameter_bound": check_diameter_bound,
    "cross_check_tree_methods": compare_tree_methods,
}

TREE_SCHEMA = {
    "type": "object",
    "properties": {
        "r": {"type": "integer", "minimum": 2, "description": "Branching degree"},
        "k": {"type": "integer", "minimum": 1, "description": "Number of levels"}
    },
    "required": ["r", "k"]
}


@app.list_tools()
async def list_tools() -> list[Tool]:
    """
    List available separation tools.

    Returns:
        List of Tool objects with schemas
    """
    return [
        Tool(
            name="generate_graph",
            description=(
                "Generate a graph: complete r-ary tree (model=tree, r, k), "
                "Watts-Strogatz ring (model=ws, n, kdeg, p, mode rewire|add, seed) "
                "or structured power-of-two graph (model=structured, n). "
                "Returns the edge list with a provenance comment."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "model": {"type": "string", "enum": ["tree", "ws", "structured"]},
                    "r": {"type": "integer"},
                    "k": {"type": "integer"},
                    "n": {"type": "integer"},
                    "kdeg": {"type": "integer", "default": 4},
                    "p": {"type": "number", "default": 0.0},
                    "mode": {"type": "string", "enum": ["rewire", "add"], "default": "rewire"},
                    "seed": {"type": "integer", "default": 0}
                },
                "required": ["model"]
            }
        ),
        Tool(
            name="analyze_graph",
            description=(
                "All-pairs shortest paths of an undirected graph and its average degree "
                "of separation under both normalizations (sum/(N-1)^2 and sum/(N(N-1))), "
                "diameter, eccentricities and distance histogram."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "edge_list": {
                        "type": "string",
                        "description": "Edge-list text: '# comments', 'n <count>', then '<u> <v>' lines"
                    },
                    "graph": {
                        "type": "object",
                        "properties": {
                            "n": {"type": "integer"},
                            "edges": {
                                "type": "array",
                                "items": {"type": "array", "items": {"type": "integer"}}
                            }
                        },
                        "required": ["n", "edges"]
                    },
                    "include_matrix": {"type": "boolean", "default": False},
                    "include_trace": {
                        "type": "boolean",
                        "default": False,
                        "description": "Matrix after each propagation pass"
                    },
                    "solver": {"type": "string", "enum": ["matrix", "networkx"], "default": "matrix"},
                    "solver_options": {
                        "type": "object",
                        "properties": {
                            "n_jobs": {"type": "integer"}
                        }
                    }
                }
            }
        ),
        Tool(
            name="tree_reachability_table",
            description=(
                "Reachability table of a complete r-ary tree with k levels: for each level "
                "S_k..S_1, how many nodes are exactly s steps away."
            ),
            inputSchema=TREE_SCHEMA
        ),
        Tool(
            name="tree_average_separation",
            description="Average degree of separation of a complete r-ary tree by the level-weighted formula (exact).",
            inputSchema=TREE_SCHEMA
        ),
        Tool(
            name="run_separation_sweep",
            description=(
                "Average separation of seeded Watts-Strogatz rings across rewiring "
                "probabilities (default 0.00..0.50 step 0.05, 100 trials). Returns per-p "
                "mean/stddev and the rank correlation of the curve."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "n": {"type": "integer"},
                    "kdeg": {"type": "integer", "default": 4},
                    "p_grid": {"type": "array", "items": {"type": "number"}},
                    "trials": {"type": "integer", "default": 100},
                    "base_seed": {"type": "integer", "default": 20240601},
                    "mode": {"type": "string", "enum": ["rewire", "add"], "default": "rewire"},
                    "resample_disconnected": {"type": "boolean", "default": False},
                    "include_records": {"type": "boolean", "default": False},
                    "solver_options": {
                        "type": "object",
                        "properties": {
                            "n_jobs": {"type": "integer"}
                        }
                    }
                },
                "required": ["n"]
            }
        ),
        Tool(
            name="check_diameter_bound",
            description="Diameter of the structured graph on n = 2^t nodes against ceil(log2(n/8)/2) + 2.",
            inputSchema={
                "type": "object",
                "properties": {
                    "n": {"type": "integer", "description": "Power of two >= 8"}
                },
                "required": ["n"]
            }
        ),
        Tool(
            name="cross_check_tree_methods",
            description=(
                "Compare the tree level formula with matrix propagation on the same tree; "
                "reports both normalizations and their ratio N/(N-1)."
            ),
            inputSchema=TREE_SCHEMA
        )
    ]


def handle_tool_call(name: str, arguments: Dict[str, Any]) -> Dict[str, Any]:
    """
    Dispatch a tool call and convert failures into an error result.

    Args:
        name: Tool name
        arguments: Tool arguments

    Returns:
        Tool result, or {"status": "error", ...} on failure
    """
    logger.info(f"Tool called: {name}")
    logger.debug(f"Arguments: {json.dumps(arguments, indent=2)}")

    try:
        handler = TOOL_HANDLERS.get(name)
        if handler is None:
            raise ValueError(f"Unknown tool: {name}")

        result = handler(**arguments)
        logger.info(f"Tool {name} completed successfully")
        return result

    except Exception as e:
        logger.error(f"Error in tool {name}: {str(e)}", exc_info=True)
        return {
            "status": "error",
            "error": str(e),
            "error_type": type(e).__name__,
            "tool": name
        }


@app.call_tool()
async def call_tool(name: str, arguments: Dict[str, Any]) -> list[TextContent]:
    """
    Call a separation tool.

    Returns:
        List of TextContent with JSON results
    """
    result = handle_tool_call(name, arguments or {})
    return [TextContent(
        type="text",
        text=json.dumps(result, indent=2)
    )]


async def main():
    """Run the MCP server."""
    logger.info("Starting Separation MCP Server")

    async with stdio_server() as (read_stream, write_stream):
        await app.run(
            read_stream,
            write_stream,
            app.create_initialization_options()
        )


if __name__ == "__main__":
    try:
        asyncio.run(main())
    except KeyboardInterrupt:
        logger.info("Server stopped by user")
    except Exception as e:
        logger.error(f"Server error: {str(e)}", exc_info=True)
        sys.exit(1)
