"""
Bound and Cross-Check Tools

check_diameter_bound: Diameter of the structured graph against the
ceil(log2(n/8)/2) + 2 bound.
cross_check_tree_methods: Level formula vs matrix propagation on a complete
r-ary tree.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

from ..models.generators import StructuredParams, structured_graph
from ..models.separation import SeparationSummary, summarize
from ..models.tree import TreeSpec, tree_average_separation, tree_graph
from ..solvers.matrix_solver import matrix_apsp


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundReport:
    n: int
    diameter: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.diameter <= self.bound

    def to_line(self) -> str:
        return f"diameter {self.diameter} bound {self.bound} {'PASS' if self.passed else 'FAIL'}"


@dataclass(frozen=True)
class CrossCheckReport:
    """Both tree methods side by side; formula equals the ordered-pair mean"""

    spec: TreeSpec
    formula: Fraction
    summary: SeparationSummary

    @property
    def ratio(self) -> Fraction:
        """mean_paper_norm / mean_ordered_pairs = N / (N - 1)."""
        n = self.summary.n
        return Fraction(n, n - 1)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.spec.r,
            "k": self.spec.k,
            "node_count": self.spec.node_count,
            "formula": float(self.formula),
            "formula_exact": str(self.formula),
            "mean_ordered_pairs": float(self.summary.mean_ordered_pairs),
            "mean_paper_norm": float(self.summary.mean_paper_norm),
            "distance_sum": self.summary.distance_sum,
            "ratio": str(self.ratio),
            "agrees": self.formula == self.summary.mean_ordered_pairs,
        }


def diameter_bound(n: int) -> int:
    """
    ceil(log2(n / 8) / 2) + 2 for n a power of two >= 8.

    Example:
        diameter_bound(16) -> 3
    """
    params = StructuredParams(n=n)
    t = params.exponent - 3
    return (t + 1) // 2 + 2


def check_bound(n: int) -> BoundReport:
    """Compare the structured graph's diameter with diameter_bound(n)."""
    graph = structured_graph(StructuredParams(n=n))
    diameter = matrix_apsp(graph).max_distance()
    report = BoundReport(n=n, diameter=diameter, bound=diameter_bound(n))
    logger.info(f"Structured n={n}: {report.to_line()}")
    return report


def cross_check_tree_methods(spec: TreeSpec) -> CrossCheckReport:
    """
    Evaluate the level formula and the propagation solver on the same tree.

    Raises:
        ValueError: If k < 2
        RuntimeError: If the two methods disagree
    """
    formula = tree_average_separation(spec)
    summary = summarize(matrix_apsp(tree_graph(spec)))
    report = CrossCheckReport(spec=spec, formula=formula, summary=summary)

    if formula != summary.mean_ordered_pairs:
        raise RuntimeError(
            f"Tree methods disagree for r={spec.r}, k={spec.k}: "
            f"formula {formula} vs ordered-pair mean {summary.mean_ordered_pairs}"
        )
    return report


def check_diameter_bound(n: int) -> Dict[str, Any]:
    """
    Tool wrapper for check_bound.

    Returns:
        Dict with status, n, diameter, bound, passed
    """
    report = check_bound(n)
    return {
        "status": "success",
        "n": report.n,
        "diameter": report.diameter,
        "bound": report.bound,
        "passed": report.passed,
    }


def compare_tree_methods(r: int, k: int) -> Dict[str, Any]:
    """Tool wrapper for cross_check_tree_methods."""
    report = cross_check_tree_methods(TreeSpec(r=r, k=k))
    return {"status": "success", **report.to_dict()}
