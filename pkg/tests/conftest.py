import logging
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.models.graph import build_graph  # noqa: E402
from src.models.tree import TreeSpec, tree_graph  # noqa: E402
from src.utils.logging_config import LOG_FORMAT  # noqa: E402


# Final 15 x 15 distance matrix of the binary tree on nodes 1..15
# (node i has children 2i and 2i+1), one-based labels.
BINARY_TREE_DISTANCES = [
    [0, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3],
    [1, 0, 2, 1, 1, 3, 3, 2, 2, 2, 2, 4, 4, 4, 4],
    [1, 2, 0, 3, 3, 1, 1, 4, 4, 4, 4, 2, 2, 2, 2],
    [2, 1, 3, 0, 2, 4, 4, 1, 1, 3, 3, 5, 5, 5, 5],
    [2, 1, 3, 2, 0, 4, 4, 3, 3, 1, 1, 5, 5, 5, 5],
    [2, 3, 1, 4, 4, 0, 2, 5, 5, 5, 5, 1, 1, 3, 3],
    [2, 3, 1, 4, 4, 2, 0, 5, 5, 5, 5, 3, 3, 1, 1],
    [3, 2, 4, 1, 3, 5, 5, 0, 2, 4, 4, 6, 6, 6, 6],
    [3, 2, 4, 1, 3, 5, 5, 2, 0, 4, 4, 6, 6, 6, 6],
    [3, 2, 4, 3, 1, 5, 5, 4, 4, 0, 2, 6, 6, 6, 6],
    [3, 2, 4, 3, 1, 5, 5, 4, 4, 2, 0, 6, 6, 6, 6],
    [3, 4, 2, 5, 5, 1, 3, 6, 6, 6, 6, 0, 2, 4, 4],
    [3, 4, 2, 5, 5, 1, 3, 6, 6, 6, 6, 2, 0, 4, 4],
    [3, 4, 2, 5, 5, 3, 1, 6, 6, 6, 6, 4, 4, 0, 2],
    [3, 4, 2, 5, 5, 3, 1, 6, 6, 6, 6, 4, 4, 2, 0],
]


@pytest.fixture
def binary_tree():
    """15-node binary tree with heap numbering (root 0, children 2v+1, 2v+2)."""
    return tree_graph(TreeSpec(r=2, k=4))


@pytest.fixture
def binary_tree_distances():
    return [list(row) for row in BINARY_TREE_DISTANCES]


@pytest.fixture
def binary_tree_edges():
    return [(v, c) for v in range(7) for c in (2 * v + 1, 2 * v + 2)]


@pytest.fixture
def path3():
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def k2():
    return build_graph(2, [(0, 1)])


@pytest.fixture
def two_isolated():
    return build_graph(2, [])


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop handlers installed by configure_logging so later tests do not write to closed streams."""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if handler.formatter is not None and handler.formatter._fmt == LOG_FORMAT:
            root.removeHandler(handler)
            handler.close()
    root.setLevel(logging.WARNING)
