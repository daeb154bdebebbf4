"""
Graph Generators

Seeded random and structured graph constructors:
- ring_lattice: circulant ring where node i links to i±1 .. i±kdeg/2
- watts_strogatz: ring lattice with per-edge rewiring (edge count preserved)
- edge_addition: ring lattice plus independently added shortcut edges
- structured_graph: circulant graph on 2^t nodes with offsets 2^j

Randomness always comes from a numpy PCG64 generator built from the
caller's seed; there is no global random state.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from .graph import Graph, build_graph, from_networkx


logger = logging.getLogger(__name__)

RNG_ALGORITHM = "numpy.PCG64"
DEFAULT_KDEG = 4


class GraphMode(Enum):
    """How the ring substrate is randomized"""
    REWIRE = "rewire"  # move an edge's far endpoint (edge count preserved)
    ADD = "add"        # add absent pairs independently


def make_rng(seed: int) -> np.random.Generator:
    """Seeded generator with a fixed, documented bit generator."""
    return np.random.Generator(np.random.PCG64(seed))


def _check_seed(seed: Any) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ValueError(f"seed must be an integer, got {seed!r}")
    if seed < 0 or seed >= 2 ** 64:
        raise ValueError(f"seed must be in [0, 2^64), got {seed}")
    return int(seed)


def _check_ring(n: Any, kdeg: Any) -> None:
    for name, value in (("n", n), ("kdeg", kdeg)):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise ValueError(f"{name} must be an integer, got {value!r}")
    if kdeg % 2 != 0:
        raise ValueError(f"kdeg must be even, got {kdeg}")
    if kdeg < 2:
        raise ValueError(f"kdeg must be >= 2, got {kdeg}")
    if kdeg >= n:
        raise ValueError(f"kdeg must be < n, got kdeg={kdeg}, n={n}")


@dataclass(frozen=True)
class WsParams:
    """Ring size, ring degree, probability, seed and randomization mode."""

    n: int
    kdeg: int = DEFAULT_KDEG
    p: float = 0.0
    seed: int = 0
    mode: GraphMode = GraphMode.REWIRE

    def __post_init__(self):
        _check_ring(self.n, self.kdeg)
        if isinstance(self.p, bool) or not isinstance(self.p, (int, float)):
            raise ValueError(f"p must be a number, got {self.p!r}")
        if not (0.0 <= self.p <= 1.0):
            raise ValueError(f"p must be in [0, 1], got {self.p}")
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "seed", _check_seed(self.seed))
        if not isinstance(self.mode, GraphMode):
            try:
                object.__setattr__(self, "mode", GraphMode(str(self.mode).lower()))
            except ValueError:
                raise ValueError(
                    f"mode must be one of {[m.value for m in GraphMode]}, got {self.mode!r}"
                )


@dataclass(frozen=True)
class StructuredParams:
    """Node count of the structured symmetric graph (a power of two >= 8)."""

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise ValueError(f"n must be an integer, got {self.n!r}")
        if self.n < 8:
            raise ValueError(f"Structured graph needs n >= 8, got {self.n}")
        if self.n & (self.n - 1):
            raise ValueError(f"Structured graph needs n to be a power of two, got {self.n}")

    @property
    def exponent(self) -> int:
        return int(self.n).bit_length() - 1

    @property
    def offsets(self) -> List[int]:
        return [2 ** j for j in range(self.exponent)]


@dataclass(frozen=True)
class GenerationStats:
    """What the randomization step did to the ring substrate"""

    rewired: int = 0
    resamples: int = 0
    added: int = 0
    rng_algorithm: str = RNG_ALGORITHM


def ring_lattice(n: int, kdeg: int) -> Graph:
    """
    Ring lattice: node i is adjacent to i±1 .. i±kdeg/2 (mod n).

    Raises:
        ValueError: If kdeg is odd, kdeg < 2 or kdeg >= n
    """
    _check_ring(n, kdeg)
    return from_networkx(nx.circulant_graph(n, range(1, kdeg // 2 + 1)))


def _rewire(params: WsParams) -> Tuple[Graph, GenerationStats]:
    lattice = ring_lattice(params.n, params.kdeg)
    adjacency: List[Set[int]] = [set(nbrs) for nbrs in lattice.adjacency_lists]
    rng = make_rng(params.seed)
    n = params.n

    rewired = 0
    resamples = 0

    # Original edges in order: by source, then by offset
    for source in range(n):
        for offset in range(1, params.kdeg // 2 + 1):
            target = (source + offset) % n
            if rng.random() >= params.p:
                continue

            replacement: Optional[int] = None
            for _ in range(n):
                candidate = int(rng.integers(n))
                if candidate != source and candidate not in adjacency[source]:
                    replacement = candidate
                    break
                resamples += 1

            # No valid endpoint within n draws: edge stays in place
            if replacement is None:
                continue

            adjacency[source].discard(target)
            adjacency[target].discard(source)
            adjacency[source].add(replacement)
            adjacency[replacement].add(source)
            rewired += 1

    edges = [(u, v) for u in range(n) for v in adjacency[u] if u < v]
    logger.debug(f"Rewired {rewired} edges (n={n}, p={params.p}, resamples={resamples})")
    return build_graph(n, edges), GenerationStats(rewired=rewired, resamples=resamples)


def _add_edges(params: WsParams) -> Tuple[Graph, GenerationStats]:
    lattice = ring_lattice(params.n, params.kdeg)
    rng = make_rng(params.seed)

    edges = set(lattice.edges)
    added = 0
    for u in range(params.n):
        for v in range(u + 1, params.n):
            if (u, v) in lattice.edges:
                continue
            if rng.random() < params.p:
                edges.add((u, v))
                added += 1

    return build_graph(params.n, edges), GenerationStats(added=added)


def generate_with_stats(params: WsParams) -> Tuple[Graph, GenerationStats]:
    """Generate a randomized ring in the requested mode and report what changed."""
    if params.mode == GraphMode.REWIRE:
        return _rewire(params)
    return _add_edges(params)


def watts_strogatz(params: WsParams) -> Graph:
    """
    Watts-Strogatz rewiring of ring_lattice(n, kdeg).

    Each original edge (visited by source, then offset) is rewired with
    probability p: its far endpoint moves to a uniformly random node.
    Self-loops and duplicates are resampled up to n times, after which the
    edge is left in place, so the edge count stays n*kdeg/2.

    Args:
        params: WsParams with mode=REWIRE

    Returns:
        Rewired graph; identical params give an identical graph

    Raises:
        ValueError: If params.mode is not REWIRE
    """
    if params.mode != GraphMode.REWIRE:
        raise ValueError(f"watts_strogatz requires mode=rewire, got mode={params.mode.value}")
    graph, _ = _rewire(params)
    return graph


def edge_addition(params: WsParams) -> Graph:
    """
    Ring lattice plus every absent pair added independently with probability p.

    p=0 leaves the lattice unchanged; p=1 yields the complete graph.

    Raises:
        ValueError: If params.mode is not ADD
    """
    if params.mode != GraphMode.ADD:
        raise ValueError(f"edge_addition requires mode=add, got mode={params.mode.value}")
    graph, _ = _add_edges(params)
    return graph


def structured_graph(params: StructuredParams) -> Graph:
    """
    Structured symmetric graph: node i links to i + 2^j (mod n) for every j < log2(n).

    The n/2 offset pairs each node with a single antipode, so the graph is
    regular of degree 2*log2(n) - 1.
    """
    return from_networkx(nx.circulant_graph(params.n, params.offsets))


def provenance_comment(model: str, params: Dict[str, Any]) -> str:
    """Single comment line recording how a generated graph was produced."""
    fields = " ".join(f"{key}={value}" for key, value in params.items())
    return f"generated model={model} {fields} rng={RNG_ALGORITHM}".rstrip()
