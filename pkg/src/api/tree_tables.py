"""
Tree Table Tools

tree_reachability_table: Reachability counts for every level of a complete r-ary tree.
tree_average_separation: Level-weighted average separation of the tree.
"""

from typing import Any, Dict

from ..integration.data_converters import DataConverter
from ..models.tree import (
    TreeSpec,
    reachability_table,
    tree_average_separation,
    tree_distance_sum,
)


def tree_reachability_table(r: int, k: int) -> Dict[str, Any]:
    """
    Generate the reachability table of a complete r-ary tree.

    Args:
        r: Branching degree (>= 2)
        k: Number of levels (>= 1)

    Returns:
        Dict with:
        - status: "success"
        - r, k, node_count, max_steps
        - rows: [{"level": "S4", "counts": [...]}, ...] in order S_k .. S_1
        - csv: the same table as CSV text

    Example:
        tree_reachability_table(r=3, k=4)["rows"][0]
        # {"level": "S4", "counts": [1, 3, 3, 8, 6, 18]}
    """
    spec = TreeSpec(r=r, k=k)
    table = reachability_table(spec)
    return {
        "status": "success",
        "r": r,
        "k": k,
        "node_count": spec.node_count,
        "max_steps": spec.max_steps,
        "rows": [
            {"level": label, "counts": list(counts)}
            for label, counts in table.labelled_rows()
        ],
        "csv": DataConverter.table_to_csv(table),
    }


def compute_tree_average(r: int, k: int) -> Dict[str, Any]:
    """
    Average separation of a complete r-ary tree by the level formula.

    Returns:
        Dict with:
        - status: "success"
        - average (float), average_exact ("p/q"), distance_sum, node_count

    Raises:
        ValueError: If k < 2
    """
    spec = TreeSpec(r=r, k=k)
    average = tree_average_separation(spec)
    return {
        "status": "success",
        "r": r,
        "k": k,
        "node_count": spec.node_count,
        "distance_sum": tree_distance_sum(spec),
        "average": float(average),
        "average_exact": str(average),
    }
