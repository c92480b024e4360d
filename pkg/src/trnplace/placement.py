"""Composite TRN scoring and Monte Carlo ranking over reliability draws."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import partial
from typing import Optional, Sequence

from .centrality import EC_MODES, all_sssp, betweenness_from_trees, eigenvector
from .errors import DomainError, NoConvergence
from .parallel import ordered_map
from .reliability import (
    DEFAULT_ALPHA,
    WeightedGraph,
    WeightParams,
    build_modified_graph,
    sample_reliabilities,
)
from .topology import Topology

DEFAULT_BETA = 0.5
DEFAULT_TRIALS = 1000
DEFAULT_SEED = 42


@dataclass(frozen=True)
class ScoreParams:
    beta: float = DEFAULT_BETA
    alpha: WeightParams = field(default_factory=WeightParams)
    trials: int = DEFAULT_TRIALS
    base_seed: int = DEFAULT_SEED
    ec_mode: str = "inverse_weight"
    ec_tol: float = 1e-10
    ec_max_iter: int = 10_000

    def __post_init__(self):
        if isinstance(self.alpha, (int, float)):
            object.__setattr__(self, "alpha", WeightParams(float(self.alpha)))
        if not 0.0 <= self.beta <= 1.0:
            raise DomainError(f"beta must lie in [0, 1], got {self.beta}")
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials}")
        if self.ec_mode not in EC_MODES:
            raise DomainError(f"unknown ec_mode {self.ec_mode!r}")

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha.alpha,
            "beta": self.beta,
            "trials": self.trials,
            "seed": self.base_seed,
            "ec_mode": self.ec_mode,
        }


@dataclass(frozen=True)
class RankEntry:
    node: int
    total_score: float
    mean_bc: float
    mean_ec: float


@dataclass(frozen=True)
class Ranking:
    entries: tuple[RankEntry, ...]
    params: ScoreParams

    @property
    def order(self) -> list[int]:
        return [e.node for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, node: int) -> RankEntry:
        for e in self.entries:
            if e.node == node:
                return e
        raise KeyError(node)

    def rescore(self, beta: float) -> "Ranking":
        """Re-rank with another beta, reusing the stored trial means."""
        by_node = sorted(self.entries, key=lambda e: e.node)
        return rank_from_means(
            [e.mean_bc for e in by_node], [e.mean_ec for e in by_node], replace(self.params, beta=beta)
        )


def composite_score(bc: float, ec: float, beta: float) -> float:
    if not 0.0 <= beta <= 1.0:
        raise DomainError(f"beta must lie in [0, 1], got {beta}")
    return beta * bc + (1.0 - beta) * ec


def order_by_score(values: Sequence[float]) -> list[int]:
    """Node ids sorted by descending score, ties by ascending id."""
    return sorted(range(len(values)), key=lambda v: (-values[v], v))


def rank_from_means(
    mean_bc: Sequence[float], mean_ec: Sequence[float], params: ScoreParams
) -> Ranking:
    ts = [composite_score(b, e, params.beta) for b, e in zip(mean_bc, mean_ec)]
    entries = tuple(
        RankEntry(v, ts[v], mean_bc[v], mean_ec[v]) for v in order_by_score(ts)
    )
    return Ranking(entries, params)


def trial_graph(t: Topology, params: ScoreParams, trial_index: int) -> WeightedGraph:
    r = sample_reliabilities(t, params.base_seed, trial_index)
    return build_modified_graph(t, r, params.alpha)


def score_graph(g: WeightedGraph, params: ScoreParams, trees=None):
    """(betweenness, eigenvector) values for one weighted graph."""
    if trees is None:
        trees = all_sssp(g)
    bc = betweenness_from_trees(g.n, trees)
    ec = eigenvector(g, params.ec_mode, params.ec_tol, params.ec_max_iter)
    return bc.values, ec.values


def _score_trial(t: Topology, params: ScoreParams, trial_index: int):
    try:
        return score_graph(trial_graph(t, params, trial_index), params)
    except NoConvergence as exc:
        raise NoConvergence(exc.max_iter, trial_index) from None


def mean_columns(rows: Sequence[Sequence[float]]) -> list[float]:
    """Per-node arithmetic mean over trials using exactly rounded summation."""
    count = len(rows)
    return [math.fsum(col) / count for col in zip(*rows)]


def monte_carlo_rank(t: Topology, params: Optional[ScoreParams] = None, threads: int = 1) -> Ranking:
    """Average BC and EC over ``params.trials`` reliability draws, then rank.

    The result does not depend on ``threads``: trials are mapped in index
    order and reduced with ``math.fsum``.
    """
    params = params or ScoreParams()
    results = ordered_map(partial(_score_trial, t, params), range(params.trials), threads)
    return rank_from_means(
        mean_columns([r[0] for r in results]), mean_columns([r[1] for r in results]), params
    )


def top_k(r: Ranking, k: int) -> list[int]:
    if not 1 <= k <= len(r):
        raise DomainError(f"k must lie in [1, {len(r)}], got {k}")
    return r.order[:k]


__all__ = [
    "DEFAULT_ALPHA",
    "DEFAULT_BETA",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "RankEntry",
    "Ranking",
    "ScoreParams",
    "composite_score",
    "mean_columns",
    "monte_carlo_rank",
    "order_by_score",
    "rank_from_means",
    "score_graph",
    "top_k",
    "trial_graph",
]
