"""Cumulative path coverage (CPC) of TRN sets and the degree-centrality comparison."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .centrality import ShortestPathTree, all_sssp, degree_centrality
from .errors import DomainError, UnknownNode
from .parallel import ordered_map
from .placement import (
    Ranking,
    ScoreParams,
    mean_columns,
    monte_carlo_rank,
    order_by_score,
    rank_from_means,
    score_graph,
    trial_graph,
)
from .reliability import ReliabilityAssignment, WeightedGraph, WeightParams, build_modified_graph
from .topology import Topology

ENDPOINT_MODES = ("interior_only", "include_endpoints")
CPC_GRAPHS = ("trials", "distance")
PATH_MODES = ("canonical", "all")


@dataclass(frozen=True)
class PathTable:
    """One canonical shortest path per unordered pair ``(s, t)``, ``s < t``."""

    n: int
    paths: dict[tuple[int, int], tuple[int, ...]]

    def __getitem__(self, pair: tuple[int, int]) -> tuple[int, ...]:
        s, t = pair
        if s > t:
            return tuple(reversed(self.paths[(t, s)]))
        return self.paths[(s, t)]

    def __len__(self) -> int:
        return len(self.paths)

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.paths)

    def membership(self, endpoint_mode: str = "interior_only") -> np.ndarray:
        """Boolean matrix: row per pair (sorted), True where a node can cover it."""
        _check_mode(endpoint_mode)
        mat = np.zeros((len(self.paths), self.n), dtype=bool)
        for row, pair in enumerate(self.pairs()):
            path = self.paths[pair]
            nodes = path if endpoint_mode == "include_endpoints" else path[1:-1]
            mat[row, list(nodes)] = True
        return mat


@dataclass(frozen=True)
class CpcCurve:
    method: str
    points: tuple[tuple[int, float], ...]

    def coverage(self, k: int) -> float:
        if k == 0:
            return 0.0
        return dict(self.points)[k]

    @property
    def values(self) -> list[float]:
        return [c for _, c in self.points]


@dataclass(frozen=True)
class Comparison:
    composite: CpcCurve
    degree: CpcCurve
    ranking: Ranking
    degree_order: tuple[int, ...]

    @property
    def delta(self) -> list[tuple[int, float]]:
        return [
            (k, c - d) for (k, c), (_, d) in zip(self.composite.points, self.degree.points)
        ]


def _check_mode(endpoint_mode: str) -> None:
    if endpoint_mode not in ENDPOINT_MODES:
        raise DomainError(f"endpoint_mode must be one of {ENDPOINT_MODES}, got {endpoint_mode!r}")


def canonical_path(tree: ShortestPathTree, target: int) -> tuple[int, ...]:
    """Walk back from ``target`` always taking the smallest predecessor id."""
    path = [target]
    v = target
    while v != tree.source:
        v = tree.preds[v][0]
        path.append(v)
    path.reverse()
    return tuple(path)


def paths_from_trees(n: int, trees: Sequence[ShortestPathTree]) -> PathTable:
    by_source = {tr.source: tr for tr in trees}
    paths = {
        (s, t): canonical_path(by_source[s], t) for s in range(n) for t in range(s + 1, n)
    }
    return PathTable(n, paths)


def canonical_paths(g: WeightedGraph) -> PathTable:
    return paths_from_trees(g.n, all_sssp(g))


def _trn_set(n: int, trns: Iterable[int]) -> frozenset[int]:
    trns = frozenset(trns)
    for v in trns:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < n):
            raise UnknownNode(v)
    return trns


def cpc(paths: PathTable, trns: Iterable[int], endpoint_mode: str = "interior_only") -> float:
    """Percentage of node pairs whose canonical path contains at least one TRN."""
    _check_mode(endpoint_mode)
    trns = _trn_set(paths.n, trns)
    covered = 0
    for path in paths.paths.values():
        nodes = path if endpoint_mode == "include_endpoints" else path[1:-1]
        if not trns.isdisjoint(nodes):
            covered += 1
    return 100.0 * covered / len(paths)


def cpc_all_paths(
    trees: Sequence[ShortestPathTree], trns: Iterable[int], endpoint_mode: str = "interior_only"
) -> float:
    """Sensitivity variant: each pair contributes the fraction of ALL its shortest
    paths that touch a TRN, instead of a 0/1 verdict on the canonical one."""
    _check_mode(endpoint_mode)
    n = len(trees)
    trns = _trn_set(n, trns)
    total = []
    for tree in sorted(trees, key=lambda tr: tr.source):
        s = tree.source
        avoid = [0] * n
        avoid[s] = 1
        for v in tree.order:
            if v == s:
                continue
            avoid[v] = sum(avoid[p] for p in tree.preds[v] if p == s or p not in trns)
        for t in range(s + 1, n):
            if endpoint_mode == "include_endpoints" and (s in trns or t in trns):
                total.append(1.0)
            else:
                total.append(1.0 - avoid[t] / tree.sigma[t])
    return 100.0 * math.fsum(total) / len(total)


def coverage_by_k(membership: np.ndarray, order: Sequence[int], k_max: int) -> list[float]:
    """CPC (percent) of the first K nodes of ``order`` for K = 1..k_max."""
    hits = np.logical_or.accumulate(membership[:, list(order[:k_max])], axis=1)
    return [100.0 * c / membership.shape[0] for c in hits.sum(axis=0).tolist()]


def _order_of(r: Union[Ranking, Sequence[int]]) -> list[int]:
    return r.order if isinstance(r, Ranking) else [int(v) for v in r]


def _eval_graphs_spec(t: Topology, params: ScoreParams, cpc_graph: str):
    if cpc_graph not in CPC_GRAPHS:
        raise DomainError(f"cpc_graph must be one of {CPC_GRAPHS}, got {cpc_graph!r}")
    return range(params.trials) if cpc_graph == "trials" else [None]


def _graph_for(t: Topology, params: ScoreParams, trial: Optional[int]) -> WeightedGraph:
    if trial is None:
        return build_modified_graph(t, ReliabilityAssignment.uniform(t.n), WeightParams(1.0))
    return trial_graph(t, params, trial)


def _trial_membership(t, params, endpoint_mode, trial):
    return canonical_paths(_graph_for(t, params, trial)).membership(endpoint_mode)


def _trial_all_paths_curve(t, params, endpoint_mode, order, k_max, trial):
    trees = all_sssp(_graph_for(t, params, trial))
    return [cpc_all_paths(trees, order[:k], endpoint_mode) for k in range(1, k_max + 1)]


def _mean_curves(method: str, per_trial: list[list[float]]) -> CpcCurve:
    means = mean_columns(per_trial)
    return CpcCurve(method, tuple((k, c) for k, c in enumerate(means, start=1)))


def _check_k(t: Topology, k_max: int) -> None:
    if not 1 <= k_max <= t.n:
        raise DomainError(f"k_max must lie in [1, {t.n}], got {k_max}")


def cpc_curve(
    t: Topology,
    r: Union[Ranking, Sequence[int]],
    k_max: int,
    eval_params: ScoreParams,
    endpoint_mode: str = "interior_only",
    cpc_graph: str = "trials",
    paths: str = "canonical",
    method: str = "composite",
    threads: int = 1,
) -> CpcCurve:
    """Coverage of the top-K prefix of a ranking for K = 1..k_max.

    With ``cpc_graph="trials"`` the value is averaged over the same reliability
    trials (seed and count from ``eval_params``) used for ranking; with
    ``"distance"`` it is computed once on the pure-distance graph.
    """
    _check_k(t, k_max)
    _check_mode(endpoint_mode)
    order = _order_of(r)
    if sorted(order) != list(range(t.n)):
        raise DomainError("ranking must be a permutation of the topology's nodes")
    trials = _eval_graphs_spec(t, eval_params, cpc_graph)
    if paths == "canonical":
        mats = ordered_map(partial(_trial_membership, t, eval_params, endpoint_mode), trials, threads)
        per_trial = [coverage_by_k(m, order, k_max) for m in mats]
    elif paths == "all":
        per_trial = ordered_map(
            partial(_trial_all_paths_curve, t, eval_params, endpoint_mode, order, k_max), trials, threads
        )
    else:
        raise DomainError(f"paths must be one of {PATH_MODES}, got {paths!r}")
    return _mean_curves(method, per_trial)


def degree_order(t: Topology) -> list[int]:
    return order_by_score(degree_centrality(t).values)


def _trial_full(t, params, endpoint_mode, trial):
    g = trial_graph(t, params, trial)
    trees = all_sssp(g)
    bc, ec = score_graph(g, params, trees)
    return bc, ec, paths_from_trees(g.n, trees).membership(endpoint_mode)


def compare_baselines(
    t: Topology,
    p: ScoreParams,
    k_max: int,
    endpoint_mode: str = "interior_only",
    cpc_graph: str = "trials",
    paths: str = "canonical",
    threads: int = 1,
) -> Comparison:
    """Composite-score ranking vs degree-centrality ranking, CPC for K = 1..k_max."""
    _check_k(t, k_max)
    _check_mode(endpoint_mode)
    deg = degree_order(t)
    if cpc_graph == "trials" and paths == "canonical":
        # one pass: the trial graphs that drive the ranking also give the paths
        results = ordered_map(partial(_trial_full, t, p, endpoint_mode), range(p.trials), threads)
        ranking = rank_from_means(
            mean_columns([x[0] for x in results]), mean_columns([x[1] for x in results]), p
        )
        mats = [x[2] for x in results]
        comp = _mean_curves("composite", [coverage_by_k(m, ranking.order, k_max) for m in mats])
        base = _mean_curves("degree", [coverage_by_k(m, deg, k_max) for m in mats])
    else:
        ranking = monte_carlo_rank(t, p, threads)
        kw = dict(endpoint_mode=endpoint_mode, cpc_graph=cpc_graph, paths=paths, threads=threads)
        comp = cpc_curve(t, ranking, k_max, p, method="composite", **kw)
        base = cpc_curve(t, deg, k_max, p, method="degree", **kw)
    return Comparison(comp, base, ranking, tuple(deg))
