import numpy as np
import pytest

from noderank import (
    DegenerateGraphError,
    average_clustering,
    average_degree,
    bfs_distances,
    build_graph,
    degree_histogram,
    density,
    k_shell,
    local_clustering,
    path_stats,
    summarize,
)
from conftest import complete_graph, graph_from_edges, random_test_graph, star_graph
from oracles import brute_clustering, floyd_warshall, peel_k_shell


class TestDensity:
    def test_network_b_profile(self):
        g = _shape(1000, 3000)
        assert density(g) == pytest.approx(3000 / (1000 * 999), abs=1e-12)

    def test_network_a_profile(self):
        g = _shape(10_000, 25_000)
        assert density(g) == pytest.approx(25_000 / (10_000 * 9_999), abs=1e-12)

    def test_k3_is_half(self):
        assert density(complete_graph(3)) == 0.5

    def test_kn_is_half_for_all_n(self):
        for n in (2, 4, 7, 11):
            assert density(complete_graph(n)) == 0.5

    def test_degenerate(self):
        g, _ = build_graph(1, [])
        with pytest.raises(DegenerateGraphError):
            density(g)


def _shape(n, e):
    """A graph with exactly n nodes and e edges (ring plus chords)."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    k = 2
    while len(edges) < e:
        edges += [(i, (i + k) % n) for i in range(n) if len(edges) + 1 <= e][: e - len(edges)]
        k += 1
    g, rep = build_graph(n, np.array(edges))
    assert rep.dropped == 0 and g.edge_count == e
    return g


class TestAverageDegree:
    def test_reference_profiles(self):
        assert average_degree(_shape(10_000, 25_000)) == 5.0
        assert average_degree(_shape(1_000, 3_000)) == 6.0

    def test_edgeless(self):
        g, _ = build_graph(4, [])
        assert average_degree(g) == 0.0


class TestDegreeHistogram:
    def test_k4(self, k4):
        hist = degree_histogram(k4)
        assert hist.counts == {3: 4}
        assert hist.exponent is None  # far below the 50-node tail requirement

    def test_star(self):
        hist = degree_histogram(star_graph(5))
        assert hist.counts == {1: 5, 5: 1}

    def test_counts_sum_to_n(self):
        g = random_test_graph(150, 0.04, seed=2)
        hist = degree_histogram(g)
        assert hist.total == 150

    def test_exponent_on_scale_free(self, ba_large):
        hist = degree_histogram(ba_large)
        assert hist.exponent is not None
        assert 1.5 < hist.exponent < 4.5

    def test_top_five_percent_endpoint_share(self, ba_large):
        degs = np.sort(ba_large.degrees)[::-1]
        top = degs[: int(0.05 * len(degs))].sum()
        assert top >= 0.25 * degs.sum()


class TestClustering:
    def test_k3_node(self):
        g = complete_graph(3)
        assert local_clustering(g, 0) == 1.0

    def test_star_center(self):
        assert local_clustering(star_graph(4), 0) == 0.0

    def test_degree_below_two_convention(self, p3):
        assert local_clustering(p3, 0) == 0.0

    def test_average_k3_p3(self, p3):
        assert average_clustering(complete_graph(3)) == 1.0
        assert average_clustering(p3) == 0.0

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_brute_force(self, seed):
        g = random_test_graph(100, 0.08, seed=seed)
        mine = np.array([local_clustering(g, i) for i in range(g.node_count)])
        assert np.array_equal(mine, brute_clustering(g))

    def test_one_iff_neighborhood_clique(self):
        g = random_test_graph(60, 0.15, seed=13)
        vals = [local_clustering(g, i) for i in range(g.node_count)]
        brute = brute_clustering(g)
        for i, v in enumerate(vals):
            assert 0.0 <= v <= 1.0
            if g.degrees[i] >= 2:
                assert (v == 1.0) == (brute[i] == 1.0)


class TestKShell:
    def test_cycle(self, c5):
        assert list(k_shell(c5)) == [2] * 5

    def test_star_all_shell_one(self):
        assert list(k_shell(star_graph(5))) == [1] * 6

    def test_k4_plus_pendant(self):
        g = graph_from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
        assert list(k_shell(g)) == [3, 3, 3, 3, 1]

    def test_isolated_nodes_shell_zero(self):
        g = graph_from_edges(4, [(0, 1)])
        assert list(k_shell(g)) == [1, 1, 0, 0]

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_peeling_oracle(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(20, 200))
        g = random_test_graph(n, float(rng.uniform(0.01, 0.12)), seed=seed + 100)
        assert np.array_equal(k_shell(g), peel_k_shell(g))

    def test_shell_at_most_degree(self):
        g = random_test_graph(120, 0.05, seed=77)
        assert (k_shell(g) <= g.degrees).all()


class TestBfsDistances:
    def test_path_from_end(self, p3):
        assert list(bfs_distances(p3, 0)) == [0, 1, 2]

    def test_unreachable_sentinel(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
        d = bfs_distances(g, 0)
        assert d[3] == -1 and d[4] == -1

    def test_source_out_of_range(self, p3):
        with pytest.raises(IndexError):
            bfs_distances(p3, 9)

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_floyd_warshall(self, seed):
        g = random_test_graph(50, 0.08, seed=seed)
        dense = floyd_warshall(g)
        for s in range(0, 50, 7):
            mine = bfs_distances(g, s).astype(float)
            mine[mine < 0] = np.inf
            assert np.array_equal(mine, dense[s])


class TestPathStats:
    def test_p3(self, p3):
        apl, diam, exact = path_stats(p3)
        assert apl == pytest.approx(4 / 3, abs=1e-12)
        assert diam == 2 and exact

    def test_c4(self):
        g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        apl, diam, _ = path_stats(g)
        assert apl == pytest.approx(4 / 3, abs=1e-12)
        assert diam == 2

    def test_restricted_to_lcc(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (3, 4)])
        apl, diam, _ = path_stats(g)
        assert apl == pytest.approx(4 / 3, abs=1e-12)
        assert diam == 2

    def test_degenerate_when_no_component(self):
        g, _ = build_graph(3, [])
        with pytest.raises(DegenerateGraphError):
            path_stats(g)

    def test_apl_at_most_diameter(self):
        for seed in range(4):
            g = random_test_graph(80, 0.06, seed=seed)
            apl, diam, _ = path_stats(g)
            assert apl <= diam

    def test_adding_edge_never_lengthens_paths(self):
        g = random_test_graph(40, 0.08, seed=3)
        d_before = floyd_warshall(g)
        edges = {tuple(e) for e in g.edge_array().tolist()}
        missing = [(i, j) for i in range(40) for j in range(i + 1, 40) if (i, j) not in edges]
        i, j = missing[0]
        g2, _ = build_graph(40, np.vstack([g.edge_array(), [i, j]]))
        d_after = floyd_warshall(g2)
        assert (d_after <= d_before).all()


class TestSummarize:
    def test_fields_consistent(self, er_medium):
        s = summarize(er_medium)
        assert s.nodes == 1000 and s.edges == 3000
        assert s.average_degree == 6.0
        assert s.density == pytest.approx(3000 / (1000 * 999))
        assert s.average_path_length <= s.diameter
        assert 0 <= s.average_clustering <= 1
        assert s.max_k_shell >= 1
