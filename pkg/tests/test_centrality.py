import math
import random

import numpy as np
import pytest

from conftest import make_topology
from oracles import (
    bellman_ford,
    brute_betweenness,
    brute_sigma,
    dense_perron,
    random_connected_graph,
)
from trnplace.centrality import (
    affinity_matrix,
    betweenness,
    degree_centrality,
    dijkstra_sssp,
    eigenvector,
)
from trnplace.errors import DomainError, NoConvergence, NodeNotFound
from trnplace.reliability import WeightedGraph


def test_dijkstra_path(p3):
    tree = dijkstra_sssp(p3, 0)
    assert tree.dist == (0.0, 1.0, 2.0)
    assert tree.sigma == (1, 1, 1)
    assert tree.preds == ((), (0,), (1,))


def test_dijkstra_cycle_counts_both_routes(c4):
    tree = dijkstra_sssp(c4, 0)
    assert tree.sigma[2] == 2
    assert tree.preds[2] == (1, 3)


def test_dijkstra_single_edge():
    g = WeightedGraph.from_edges(2, [(0, 1, 0.37)])
    assert dijkstra_sssp(g, 0).dist[1] == 0.37


def test_dijkstra_unknown_source(p3):
    with pytest.raises(NodeNotFound):
        dijkstra_sssp(p3, 3)


def test_dijkstra_float_ties():
    # 0.1+0.2 != 0.3 exactly; the tolerance must still count both routes
    g = WeightedGraph.from_edges(4, [(0, 1, 0.1), (1, 3, 0.2), (0, 2, 0.2), (2, 3, 0.1)])
    assert dijkstra_sssp(g, 0).sigma[3] == 2


@pytest.mark.parametrize("seed", range(40))
def test_dijkstra_matches_bellman_ford(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(2, 15), rng.randint(0, 20), integer_weights=seed % 2 == 0)
    for s in range(g.n):
        tree = dijkstra_sssp(g, s)
        assert list(tree.dist) == bellman_ford(g, s)
        assert tree.order[0] == s
        for v in range(g.n):
            if v != s:
                assert tree.sigma[v] == sum(tree.sigma[p] for p in tree.preds[v])
                assert all(tree.dist[p] < tree.dist[v] for p in tree.preds[v])


@pytest.mark.parametrize("seed", range(30))
def test_sigma_matches_enumeration(seed):
    rng = random.Random(1000 + seed)
    g = random_connected_graph(rng, rng.randint(3, 8), rng.randint(0, 10), integer_weights=True)
    s = rng.randrange(g.n)
    assert list(dijkstra_sssp(g, s).sigma) == brute_sigma(g, s)


def test_betweenness_examples(p3, star3, c4):
    assert betweenness(p3).values == (0.0, 1.0, 0.0)
    assert betweenness(star3).values == (1.0, 0.0, 0.0, 0.0)
    assert betweenness(c4).values == pytest.approx([1 / 6] * 4, abs=1e-12)


def test_betweenness_small_graphs_zero():
    g = WeightedGraph.from_edges(2, [(0, 1, 1.0)])
    assert betweenness(g).values == (0.0, 0.0)


@pytest.mark.parametrize("seed", range(25))
def test_betweenness_matches_oracle(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(3, 8), rng.randint(0, 12), integer_weights=seed % 3 != 0)
    got = betweenness(g).values
    assert got == pytest.approx(brute_betweenness(g), abs=1e-9)
    assert all(0.0 <= x <= 1.0 + 1e-12 for x in got)


@pytest.mark.parametrize("seed", range(10))
def test_betweenness_pair_sum_is_interior_length(seed):
    # summing unnormalised BC over v equals the total interior length of all
    # shortest paths averaged within each pair
    from oracles import all_shortest_paths, floyd_warshall
    import itertools

    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(3, 8), rng.randint(0, 10), integer_weights=True)
    n = g.n
    dist = floyd_warshall(g)
    expected = 0.0
    for s, t in itertools.combinations(range(n), 2):
        paths = all_shortest_paths(g, s, t, dist)
        expected += sum(len(p) - 2 for p in paths) / len(paths)
    raw = sum(betweenness(g).values) * (n - 1) * (n - 2) / 2
    assert raw == pytest.approx(expected, abs=1e-9)


def test_betweenness_permutation_equivariant():
    rng = random.Random(5)
    g = random_connected_graph(rng, 9, 8, integer_weights=True)
    perm = list(range(9))
    rng.shuffle(perm)
    h = WeightedGraph.from_edges(9, [(perm[u], perm[v], w) for u, v, w in g.edges])
    bg, bh = betweenness(g).values, betweenness(h).values
    assert [bh[perm[v]] for v in range(9)] == pytest.approx(bg, abs=1e-12)
    eg, eh = eigenvector(g).values, eigenvector(h).values
    assert [eh[perm[v]] for v in range(9)] == pytest.approx(eg, abs=1e-9)


def test_eigenvector_cycle(c4):
    ec = eigenvector(c4, "unweighted")
    assert ec.values == pytest.approx([0.5] * 4, abs=1e-12)
    assert ec.eigenvalue == pytest.approx(2.0)


def test_eigenvector_star(star3):
    ec = eigenvector(star3, "unweighted")
    assert ec.values == pytest.approx([1 / math.sqrt(2)] + [1 / math.sqrt(6)] * 3, abs=1e-9)
    a = affinity_matrix(star3, "unweighted")
    x = ec.as_array()
    assert np.linalg.norm(a @ x - math.sqrt(3) * x) < 1e-8


def test_eigenvector_single_edge():
    g = WeightedGraph.from_edges(2, [(0, 1, 2.5)])
    for mode in ("inverse_weight", "unweighted", "raw_weight"):
        assert eigenvector(g, mode).values == pytest.approx([2**-0.5] * 2, abs=1e-12)


def test_affinity_modes():
    g = WeightedGraph.from_edges(3, [(0, 1, 2.0), (1, 2, 4.0)])
    assert affinity_matrix(g, "inverse_weight")[0, 1] == 0.5
    assert affinity_matrix(g, "raw_weight")[2, 1] == 4.0
    assert affinity_matrix(g, "unweighted")[1, 2] == 1.0
    assert affinity_matrix(g)[0, 2] == 0.0
    with pytest.raises(DomainError):
        affinity_matrix(g, "katz")


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("mode", ["inverse_weight", "unweighted", "raw_weight"])
def test_eigenvector_matches_dense(seed, mode):
    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(3, 12), rng.randint(0, 15), integer_weights=False)
    ec = eigenvector(g, mode)
    a = affinity_matrix(g, mode)
    x_ref, lam_ref = dense_perron(a)
    x = ec.as_array()
    assert np.max(np.abs(x - x_ref)) <= 1e-6
    assert ec.eigenvalue == pytest.approx(lam_ref, rel=1e-9)
    assert np.linalg.norm(a @ x - ec.eigenvalue * x) <= 1e-6
    assert abs(np.linalg.norm(x) - 1.0) <= 1e-9
    assert (x > 0).all()


def test_eigenvector_no_convergence():
    rng = random.Random(2)
    g = random_connected_graph(rng, 12, 10, integer_weights=False)
    with pytest.raises(NoConvergence):
        eigenvector(g, max_iter=2)


@pytest.mark.parametrize("kw", [{"tol": 0.0}, {"max_iter": 0}])
def test_eigenvector_bad_args(c4, kw):
    with pytest.raises(DomainError):
        eigenvector(c4, **kw)


def test_degree_centrality():
    star = make_topology([(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)])
    assert degree_centrality(star).values == (1.0, 1 / 3, 1 / 3, 1 / 3)
    cyc = make_topology([(0, 1, 1.0), (1, 2, 5.0), (2, 3, 1.0), (3, 0, 9.0)])
    assert degree_centrality(cyc).values == pytest.approx([2 / 3] * 4)
