"""Independent brute-force references used by the tests.

Nothing here touches trnplace's Dijkstra, Brandes or power iteration code.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from trnplace.reliability import WeightedGraph

TOL = 1e-12


def random_connected_graph(rng: random.Random, n: int, extra: int, integer_weights: bool) -> WeightedGraph:
    """Random spanning tree plus ``extra`` chords."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {}
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        edges[(min(u, v), max(u, v))] = None
    others = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    for p in rng.sample(others, min(extra, len(others))):
        edges[p] = None
    out = []
    for u, v in edges:
        w = float(rng.randint(1, 3)) if integer_weights else rng.uniform(0.1, 5.0)
        out.append((u, v, w))
    return WeightedGraph.from_edges(n, out)


def floyd_warshall(g: WeightedGraph) -> list[list[float]]:
    n = g.n
    d = [[0.0 if i == j else float("inf") for j in range(n)] for i in range(n)]
    for u, v, w in g.edges:
        d[u][v] = d[v][u] = w
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def bellman_ford(g: WeightedGraph, source: int) -> list[float]:
    dist = [float("inf")] * g.n
    dist[source] = 0.0
    for _ in range(g.n - 1):
        for u, v, w in g.edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
            if dist[v] + w < dist[u]:
                dist[u] = dist[v] + w
    return dist


def all_shortest_paths(g: WeightedGraph, s: int, t: int, dist=None) -> list[tuple[int, ...]]:
    """Every simple s-t path whose length equals the s-t distance (DFS pruned by it)."""
    if dist is None:
        dist = floyd_warshall(g)
    target = dist[s][t]
    bound = target + TOL * max(1.0, target)
    found = []

    def dfs(v, length, path, seen):
        if v == t:
            if abs(length - target) <= TOL * max(1.0, target):
                found.append(tuple(path))
            return
        for w_node, w in g.adj[v]:
            if w_node in seen or length + w > bound:
                continue
            seen.add(w_node)
            path.append(w_node)
            dfs(w_node, length + w, path, seen)
            path.pop()
            seen.discard(w_node)

    dfs(s, 0.0, [s], {s})
    return found


def brute_betweenness(g: WeightedGraph) -> list[float]:
    n = g.n
    if n < 3:
        return [0.0] * n
    dist = floyd_warshall(g)
    bc = [0.0] * n
    for s, t in itertools.combinations(range(n), 2):
        paths = all_shortest_paths(g, s, t, dist)
        for v in range(n):
            if v in (s, t):
                continue
            bc[v] += sum(1 for p in paths if v in p) / len(paths)
    denom = (n - 1) * (n - 2) / 2
    return [x / denom for x in bc]


def brute_sigma(g: WeightedGraph, s: int) -> list[int]:
    dist = floyd_warshall(g)
    return [1 if t == s else len(all_shortest_paths(g, s, t, dist)) for t in range(g.n)]


def dense_perron(a: np.ndarray) -> tuple[np.ndarray, float]:
    """Dominant eigenpair of a symmetric non-negative matrix, sign-fixed positive."""
    vals, vecs = np.linalg.eigh(a)
    x = vecs[:, -1]
    x = x if x.sum() > 0 else -x
    return x / np.linalg.norm(x), float(vals[-1])


def brute_canonical_path(g: WeightedGraph, s: int, t: int, dist=None) -> tuple[int, ...]:
    """Among all shortest s-t paths, the one whose reversed node list is smallest."""
    paths = all_shortest_paths(g, s, t, dist)
    return min(paths, key=lambda p: tuple(reversed(p)))


def brute_cpc(g: WeightedGraph, trns, endpoint_mode="interior_only") -> float:
    dist = floyd_warshall(g)
    trns = set(trns)
    pairs = list(itertools.combinations(range(g.n), 2))
    covered = 0
    for s, t in pairs:
        path = brute_canonical_path(g, s, t, dist)
        nodes = path if endpoint_mode == "include_endpoints" else path[1:-1]
        covered += bool(trns & set(nodes))
    return 100.0 * covered / len(pairs)


def brute_cpc_all(g: WeightedGraph, trns, endpoint_mode="interior_only") -> float:
    dist = floyd_warshall(g)
    trns = set(trns)
    pairs = list(itertools.combinations(range(g.n), 2))
    total = 0.0
    for s, t in pairs:
        paths = all_shortest_paths(g, s, t, dist)
        hit = 0
        for p in paths:
            nodes = p if endpoint_mode == "include_endpoints" else p[1:-1]
            hit += bool(trns & set(nodes))
        total += hit / len(paths)
    return 100.0 * total / len(pairs)
