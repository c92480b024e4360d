"""Shortest-path trees, weighted betweenness, eigenvector and degree centrality."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, NoConvergence, NodeNotFound
from .reliability import WeightedGraph
from .topology import Topology

TIE_RTOL = 1e-12

EC_MODES = ("inverse_weight", "unweighted", "raw_weight")


def tie_tol(d: float) -> float:
    return TIE_RTOL * max(1.0, d)


def same_length(a: float, b: float) -> bool:
    """True when two path lengths count as tied for shortest-path purposes."""
    return abs(a - b) <= tie_tol(max(a, b))


@dataclass(frozen=True)
class ShortestPathTree:
    source: int
    dist: tuple[float, ...]
    sigma: tuple[int, ...]
    preds: tuple[tuple[int, ...], ...]
    # nodes in the order Dijkstra settled them (non-decreasing dist)
    order: tuple[int, ...]


@dataclass(frozen=True)
class CentralityVector:
    kind: str
    values: tuple[float, ...]
    eigenvalue: Optional[float] = None
    iterations: Optional[int] = None

    def __getitem__(self, v: int) -> float:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def dijkstra_sssp(g: WeightedGraph, source: int) -> ShortestPathTree:
    n = g.n
    if not 0 <= source < n:
        raise NodeNotFound(source)
    inf = math.inf
    dist = [inf] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    done = [False] * n
    order = []
    dist[source] = 0.0
    sigma[source] = 1
    heap = [(0.0, source)]
    adj = g.adj
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        order.append(u)
        su = sigma[u]
        for v, w in adj[u]:
            if done[v]:
                continue
            alt = d + w
            dv = dist[v]
            if dv == inf or alt < dv - tie_tol(dv):
                dist[v] = alt
                sigma[v] = su
                preds[v] = [u]
                heapq.heappush(heap, (alt, v))
            elif abs(alt - dv) <= tie_tol(max(alt, dv)):
                sigma[v] += su
                preds[v].append(u)
    return ShortestPathTree(
        source,
        tuple(dist),
        tuple(sigma),
        tuple(tuple(sorted(p)) for p in preds),
        tuple(order),
    )


def all_sssp(g: WeightedGraph) -> list[ShortestPathTree]:
    return [dijkstra_sssp(g, s) for s in range(g.n)]


def _dependencies(tree: ShortestPathTree, n: int) -> list[float]:
    sigma, preds = tree.sigma, tree.preds
    delta = [0.0] * n
    for w in reversed(tree.order):
        coeff = (1.0 + delta[w]) / sigma[w]
        for v in preds[w]:
            delta[v] += sigma[v] * coeff
    delta[tree.source] = 0.0
    return delta


def betweenness_from_trees(n: int, trees: Sequence[ShortestPathTree]) -> CentralityVector:
    """Brandes accumulation over precomputed trees, summed in ascending source order."""
    if n < 3:
        return CentralityVector("betweenness", (0.0,) * n)
    raw = [0.0] * n
    for tree in sorted(trees, key=lambda t: t.source):
        for v, d in enumerate(_dependencies(tree, n)):
            raw[v] += d
    # every unordered pair was visited from both ends
    scale = 1.0 / ((n - 1) * (n - 2))
    return CentralityVector("betweenness", tuple(x * scale for x in raw))


def betweenness(g: WeightedGraph) -> CentralityVector:
    """Pair-normalised betweenness in [0, 1]; endpoints never count."""
    return betweenness_from_trees(g.n, all_sssp(g))


def affinity_matrix(g: WeightedGraph, mode: str = "inverse_weight") -> np.ndarray:
    if mode not in EC_MODES:
        raise DomainError(f"unknown eigenvector mode {mode!r}; expected one of {EC_MODES}")
    a = np.zeros((g.n, g.n))
    for u, v, w in g.edges:
        if mode == "inverse_weight":
            x = 1.0 / w
        elif mode == "unweighted":
            x = 1.0
        else:
            x = w
        a[u, v] = a[v, u] = x
    return a


def eigenvector(
    g: WeightedGraph,
    mode: str = "inverse_weight",
    tol: float = 1e-10,
    max_iter: int = 10_000,
) -> CentralityVector:
    """Perron vector of the affinity matrix by power iteration.

    Iterates on ``A + s*I`` with ``s`` the largest affinity, which leaves the
    eigenvectors unchanged but breaks the +/- lambda symmetry of bipartite
    graphs (stars, even cycles) that stalls plain power iteration.
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise DomainError(f"max_iter must be at least 1, got {max_iter}")
    a = affinity_matrix(g, mode)
    n = g.n
    shifted = a + a.max() * np.eye(n)
    x = np.full(n, 1.0 / math.sqrt(n))
    for it in range(1, max_iter + 1):
        y = shifted @ x
        y /= np.linalg.norm(y)
        if np.max(np.abs(y - x)) < tol:
            x = y
            break
        x = y
    else:
        raise NoConvergence(max_iter)
    lam = float(x @ (a @ x))
    return CentralityVector("eigenvector", tuple(float(v) for v in x), lam, it)


def degree_centrality(t: Topology) -> CentralityVector:
    denom = t.n - 1
    return CentralityVector("degree", tuple(t.degree(v) / denom for v in range(t.n)))
