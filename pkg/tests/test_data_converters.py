import numpy as np
import pytest

from src.integration.data_converters import DataConverter
from src.models.graph import build_graph
from src.models.separation import DistanceMatrix
from src.models.tree import TreeSpec, reachability_table


class TestParseEdgeList:
    def test_k2(self, k2):
        assert DataConverter.parse_edge_list("n 2\n0 1\n") == k2

    def test_comments_and_missing_trailing_newline(self, path3):
        assert DataConverter.parse_edge_list("n 3\n# comment\n0 1\n1 2") == path3

    def test_leading_comments_and_blank_lines(self):
        g = DataConverter.parse_edge_list("# generated\n\nn 4\n  0   3 \n\n2 1\n")
        assert g.sorted_edges() == [(0, 3), (1, 2)]

    def test_header_only(self):
        g = DataConverter.parse_edge_list("n 5\n")
        assert g.n == 5 and g.edge_count == 0

    @pytest.mark.parametrize("text, message", [
        ("n 2\n0 0\n", "Line 2: self-loop"),
        ("0 1\n", "Line 1: expected header"),
        ("", "missing"),
        ("# only a comment\n", "missing"),
        ("n 2\n0 2\n", "Line 2: node id 2 out of range"),
        ("n 3\n0 1 2\n", "Line 2: expected '<u> <v>'"),
        ("n 3\n# c\n0 x\n", "Line 3: expected an integer"),
        ("n two\n", "Line 1: expected an integer"),
        ("n 0\n", "node count must be >= 1"),
    ])
    def test_malformed(self, text, message):
        with pytest.raises(ValueError, match=message):
            DataConverter.parse_edge_list(text)


class TestSerializeEdgeList:
    def test_format(self):
        g = build_graph(3, [(2, 1), (0, 1)])
        text = DataConverter.serialize_edge_list(g, ["generated model=test"])
        assert text == "# generated model=test\nn 3\n0 1\n1 2\n"

    def test_parse_inverts_serialize_on_random_graphs(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            n = int(rng.integers(2, 40))
            density = float(rng.random())
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
            g = build_graph(n, pairs)
            assert DataConverter.parse_edge_list(DataConverter.serialize_edge_list(g)) == g


class TestCsv:
    def test_distance_matrix_csv_marks_unreachable(self):
        dm = DistanceMatrix([[0, 1, -1], [1, 0, -1], [-1, -1, 0]])
        assert DataConverter.distance_matrix_to_csv(dm) == (
            "n,3\n0,1,INF\n1,0,INF\nINF,INF,0\n"
        )

    def test_trace_csv_blocks_per_pass(self):
        first = DistanceMatrix([[0, 1, -1], [1, 0, 1], [-1, 1, 0]])
        second = DistanceMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
        assert DataConverter.trace_to_csv([first, second]) == (
            "pass,1\nn,3\n0,1,INF\n1,0,1\nINF,1,0\n"
            "pass,2\nn,3\n0,1,2\n1,0,1\n2,1,0\n"
        )

    def test_empty_trace(self):
        assert DataConverter.trace_to_csv([]) == ""

    def test_table_csv_rows_leaf_level_first(self):
        csv_text = DataConverter.table_to_csv(reachability_table(TreeSpec(r=3, k=4)))
        assert csv_text.splitlines() == [
            "level,s1,s2,s3,s4,s5,s6",
            "S4,1,3,3,8,6,18",
            "S3,4,3,8,6,18,",
            "S2,4,11,6,18,,",
            "S1,3,9,27,,,",
        ]

    def test_rows_to_csv_keeps_float_precision(self):
        text = DataConverter.rows_to_csv(["a", "b"], [[1 / 3, None]])
        assert text == "a,b\n0.3333333333333333,\n"

    def test_write_distance_csv_creates_directories(self, tmp_path, k2):
        target = tmp_path / "out" / "k2.csv"
        DataConverter.write_distance_csv(DistanceMatrix([[0, 1], [1, 0]]), target)
        assert target.read_text() == "n,2\n0,1\n1,0\n"


class TestPayloads:
    def test_graph_payload_roundtrip(self, binary_tree):
        payload = DataConverter.graph_to_payload(binary_tree)
        assert payload["n"] == 15 and len(payload["edges"]) == 14
        assert DataConverter.graph_from_payload(payload) == binary_tree

    @pytest.mark.parametrize("payload, message", [
        ({"edges": []}, "'n'"),
        ({"n": 2}, "'edges'"),
        ({"n": 2, "edges": "0 1"}, "list"),
        ([1, 2], "dict"),
    ])
    def test_invalid_payload(self, payload, message):
        with pytest.raises(ValueError, match=message):
            DataConverter.graph_from_payload(payload)


class TestProbabilityGrid:
    def test_parse_list(self):
        assert DataConverter.parse_probability_list("0, 0.05,0.5") == [0.0, 0.05, 0.5]

    @pytest.mark.parametrize("grid", [[], [1.5], [-0.1], ["a"], "0.1"])
    def test_invalid_grid(self, grid):
        with pytest.raises(ValueError):
            DataConverter.validate_probability_grid(grid)

    def test_invalid_token(self):
        with pytest.raises(ValueError, match="Invalid probability"):
            DataConverter.parse_probability_list("0.1,abc")
