"""
Data Converters

Utilities for converting between text formats and domain objects:
- Edge-list text <-> Graph
- Distance matrices and reachability tables -> CSV
- JSON/dict validation for tool payloads
"""

import csv
import io
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from ..models.graph import Graph, build_graph
from ..models.separation import UNREACHABLE, DistanceMatrix
from ..models.tree import ReachabilityTable


PathLike = Union[str, Path]


class DataConverter:
    """
    Handles data format conversions and validation.

    Ensures data passed between tools, files and the CLI is properly
    formatted and typed.
    """

    @staticmethod
    def parse_edge_list(text: str) -> Graph:
        """
        Parse the edge-list text format.

        Format: optional '#' comment lines (and blank lines), then a header
        line "n <count>", then one "<u> <v>" line per edge with 0-based ids.

        Args:
            text: Full file contents

        Returns:
            Graph as declared by the header and edge lines

        Raises:
            ValueError: On a missing header, a malformed line, an endpoint
                        >= n or a self-loop (message carries the 1-based line)

        Example:
            "n 3\\n# comment\\n0 1\\n1 2\\n" -> path on 3 nodes
        """
        n: Optional[int] = None
        edges: List[tuple] = []

        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue

            fields = line.split()
            if n is None:
                if len(fields) != 2 or fields[0] != "n":
                    raise ValueError(
                        f"Line {line_no}: expected header 'n <count>', got {raw!r}"
                    )
                n = DataConverter._parse_int(fields[1], line_no)
                if n < 1:
                    raise ValueError(f"Line {line_no}: node count must be >= 1, got {n}")
                continue

            if len(fields) != 2:
                raise ValueError(f"Line {line_no}: expected '<u> <v>', got {raw!r}")
            u = DataConverter._parse_int(fields[0], line_no)
            v = DataConverter._parse_int(fields[1], line_no)
            if u == v:
                raise ValueError(f"Line {line_no}: self-loop on node {u} is not allowed")
            for node in (u, v):
                if node < 0 or node >= n:
                    raise ValueError(f"Line {line_no}: node id {node} out of range [0, {n})")
            edges.append((u, v))

        if n is None:
            raise ValueError("Edge list is missing the 'n <count>' header")

        return build_graph(n, edges)

    @staticmethod
    def _parse_int(token: str, line_no: int) -> int:
        try:
            return int(token)
        except ValueError:
            raise ValueError(f"Line {line_no}: expected an integer, got {token!r}")

    @staticmethod
    def serialize_edge_list(graph: Graph, comments: Iterable[str] = ()) -> str:
        """
        Write a graph in the edge-list text format.

        Edges appear in sorted order with u < v, so equal graphs serialize
        to identical bytes.

        Args:
            graph: Graph to write
            comments: Comment lines, written first with a '# ' prefix
        """
        lines = [f"# {comment}" for comment in comments]
        lines.append(f"n {graph.n}")
        lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
        return "\n".join(lines) + "\n"

    @staticmethod
    def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """
        Render rows as CSV text with '\\n' line endings.

        Floats keep full repr precision; None becomes an empty cell.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if value is None else value for value in row])
        return buffer.getvalue()

    @staticmethod
    def distance_matrix_to_csv(dm: DistanceMatrix) -> str:
        """
        Distance matrix CSV: an "n,<N>" line, then N rows with "INF" for
        unreachable pairs.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", dm.n])
        for row in dm.cells.tolist():
            writer.writerow(["INF" if value == UNREACHABLE else value for value in row])
        return buffer.getvalue()

    @staticmethod
    def table_to_csv(table: ReachabilityTable) -> str:
        """
        Reachability table CSV with header "level,s1,..,s_l".

        Rows run S_k .. S_1 (leaf level first); absent columns are blank.
        """
        header = ["level"] + [f"s{step}" for step in range(1, table.width + 1)]
        rows = [
            [label] + values
            for (label, _), values in zip(table.labelled_rows(), table.as_matrix())
        ]
        return DataConverter.rows_to_csv(header, rows)

    @staticmethod
    def write_text(path: PathLike, text: str) -> Path:
        """Write text to a file, creating parent directories."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
        return target

    @staticmethod
    def write_distance_csv(dm: DistanceMatrix, path: PathLike) -> Path:
        return DataConverter.write_text(path, DataConverter.distance_matrix_to_csv(dm))

    @staticmethod
    def trace_to_csv(snapshots: Sequence[DistanceMatrix]) -> str:
        """One "pass,<p>" line per propagation pass, each followed by its matrix CSV."""
        return "".join(
            f"pass,{p}\n" + DataConverter.distance_matrix_to_csv(dm)
            for p, dm in enumerate(snapshots, start=1)
        )

    @staticmethod
    def graph_from_payload(payload: Dict[str, Any]) -> Graph:
        """
        Build a Graph from a JSON payload {"n": int, "edges": [[u, v], ...]}.

        Raises:
            ValueError: If keys are missing or malformed
        """
        if not isinstance(payload, dict):
            raise ValueError("Graph payload must be a dict with 'n' and 'edges'")
        for key in ("n", "edges"):
            if key not in payload:
                raise ValueError(f"Graph payload missing required key: '{key}'")
        if not isinstance(payload["edges"], list):
            raise ValueError("Graph payload 'edges' must be a list of [u, v] pairs")
        return build_graph(payload["n"], payload["edges"])

    @staticmethod
    def graph_to_payload(graph: Graph) -> Dict[str, Any]:
        return {"n": graph.n, "edges": [list(edge) for edge in graph.sorted_edges()]}

    @staticmethod
    def validate_probability_grid(p_grid: Sequence[Any]) -> List[float]:
        """
        Validate a rewiring-probability grid.

        Returns:
            The grid as floats, in the given order

        Raises:
            ValueError: If the grid is empty or a value is outside [0, 1]
        """
        if isinstance(p_grid, (str, bytes)) or not isinstance(p_grid, Sequence):
            raise ValueError(f"p_grid must be a list of probabilities, got {p_grid!r}")
        if len(p_grid) == 0:
            raise ValueError("p_grid must contain at least one probability")

        grid = []
        for i, value in enumerate(p_grid):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValueError(f"p_grid[{i}] must be a number, got {value!r}")
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"p_grid[{i}] must be in [0, 1], got {value}")
            grid.append(float(value))
        return grid

    @staticmethod
    def parse_probability_list(text: str) -> List[float]:
        """Parse a comma-separated probability list such as "0,0.05,0.1"."""
        values = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                continue
            try:
                values.append(float(token))
            except ValueError:
                raise ValueError(f"Invalid probability {token!r} in list {text!r}")
        return DataConverter.validate_probability_grid(values)
