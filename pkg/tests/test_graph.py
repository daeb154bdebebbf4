import networkx as nx
import numpy as np
import pytest

from src.models.graph import (
    MAX_DENSE_NODES,
    AdjacencyMatrix,
    Graph,
    build_graph,
    check_dense_size,
    from_adjacency,
    from_networkx,
    is_connected,
    relabel_one_based,
    to_adjacency,
    to_networkx,
)


class TestBuildGraph:
    def test_single_edge(self):
        g = build_graph(2, [(0, 1)])
        assert g.edge_count == 1
        assert g.degrees() == [1, 1]

    def test_reversed_pair_is_deduplicated(self):
        g = build_graph(3, [(0, 1), (1, 0)])
        assert g.edge_count == 1
        assert g.edges == frozenset({(0, 1)})

    def test_binary_tree_degree_sequence(self, binary_tree_edges):
        g = build_graph(15, binary_tree_edges)
        assert g.edge_count == 14
        degrees = g.degrees()
        assert degrees[0] == 2
        assert sorted(degrees).count(3) == 6
        assert sorted(degrees).count(1) == 8

    def test_handshake_identity(self, binary_tree):
        assert sum(binary_tree.degrees()) == 2 * binary_tree.edge_count

    @pytest.mark.parametrize("n, edges, message", [
        (0, [], "Node count"),
        (2, [(0, 2)], "out of range"),
        (2, [(-1, 1)], "out of range"),
        (2, [(1, 1)], "self-loop"),
        (3, [(0, 1, 2)], "must be a pair"),
    ])
    def test_invalid_input(self, n, edges, message):
        with pytest.raises(ValueError, match=message):
            build_graph(n, edges)

    def test_graph_rejects_unnormalized_edges(self):
        with pytest.raises(ValueError, match="not normalized"):
            Graph(n=3, edges=frozenset({(2, 1)}))

    def test_neighbors_sorted(self, binary_tree):
        assert binary_tree.neighbors(1) == (0, 3, 4)
        assert binary_tree.has_edge(4, 1)
        assert not binary_tree.has_edge(1, 2)


class TestAdjacency:
    def test_k2(self, k2):
        assert to_adjacency(k2).to_rows() == [[0, 1], [1, 0]]

    def test_empty_graph(self):
        assert to_adjacency(build_graph(3, [])).to_rows() == [[0] * 3] * 3

    def test_binary_tree_first_rows(self, binary_tree):
        rows = to_adjacency(binary_tree).to_rows()
        assert rows[0] == [0, 1, 1] + [0] * 12
        assert rows[1] == [1, 0, 0, 1, 1] + [0] * 10
        assert rows[14] == [0] * 6 + [1] + [0] * 8

    def test_rebuild_gives_identical_edges(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            n = int(rng.integers(1, 30))
            pairs = [(int(u), int(v)) for u, v in rng.integers(0, n, size=(40, 2)) if u != v]
            g = build_graph(n, pairs)
            assert from_adjacency(to_adjacency(g)) == g

    def test_matrix_is_read_only(self, k2):
        with pytest.raises(ValueError):
            to_adjacency(k2).cells[0, 1] = 0

    @pytest.mark.parametrize("cells, message", [
        ([[0, 1, 0], [1, 0, 1]], "square"),
        ([[0, 2], [2, 0]], "0 or 1"),
        ([[1, 0], [0, 0]], "zero diagonal"),
        ([[0, 1], [0, 0]], "symmetric"),
    ])
    def test_invalid_matrix(self, cells, message):
        with pytest.raises(ValueError, match=message):
            from_adjacency(cells)

    def test_equality(self, k2):
        assert to_adjacency(k2) == AdjacencyMatrix([[0, 1], [1, 0]])

    def test_largest_dense_graph_is_accepted(self):
        assert check_dense_size(MAX_DENSE_NODES) == MAX_DENSE_NODES

    def test_oversized_graph_rejected_before_allocation(self):
        with pytest.raises(ValueError, match="limited to"):
            to_adjacency(build_graph(MAX_DENSE_NODES + 1, []))


class TestConnectivity:
    def test_path_is_connected(self, path3):
        assert is_connected(path3)

    def test_isolated_nodes(self, two_isolated):
        assert not is_connected(two_isolated)

    def test_single_node(self):
        assert is_connected(build_graph(1, []))

    def test_binary_tree(self, binary_tree):
        assert is_connected(binary_tree)


class TestNetworkxInterop:
    def test_roundtrip_keeps_isolated_nodes(self):
        g = build_graph(4, [(0, 1)])
        G = to_networkx(g)
        assert G.number_of_nodes() == 4
        assert from_networkx(G) == g

    def test_rejects_foreign_labels(self):
        G = nx.Graph([("a", "b")])
        with pytest.raises(ValueError, match="0..n-1"):
            from_networkx(G)

    def test_rejects_directed(self):
        with pytest.raises(ValueError, match="Directed"):
            from_networkx(nx.DiGraph([(0, 1)]))


def test_relabel_one_based():
    assert relabel_one_based((7, 11)) == (8, 12)
