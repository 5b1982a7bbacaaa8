import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # makes `oracles` importable

from noderank import GeneratorSpec, build_graph, generate, load_edge_list


def graph_from_edges(n, edges):
    g, _ = build_graph(n, np.array(edges, dtype=np.int64).reshape(-1, 2))
    return g


@pytest.fixture
def p3():
    return load_edge_list("0 1\n1 2\n")


@pytest.fixture
def k4():
    return graph_from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


@pytest.fixture
def c5():
    return graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


def star_graph(leaves):
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_test_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return graph_from_edges(n, edges) if edges else graph_from_edges(n, [])


def complete_graph(n):
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# --- the two calibrated network profiles, shared across the heavy tests ------


@pytest.fixture(scope="session")
def ba_large():
    """Scale-free, 10000 nodes / ~25000 edges, seed 42."""
    return generate(GeneratorSpec("scale_free", 10_000, 25_000, seed=42))


@pytest.fixture(scope="session")
def er_medium():
    """Uniform random, 1000 nodes / 3000 edges, seed 7."""
    return generate(GeneratorSpec("uniform_random", 1_000, 3_000, seed=7))


@pytest.fixture(scope="session")
def ba_spread():
    """Scale-free, 2000 nodes / ~5000 edges (mean degree ~5), seed 42."""
    return generate(GeneratorSpec("scale_free", 2_000, 5_000, seed=42))
