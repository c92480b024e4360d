"""Node reliability assignments and the reliability-weighted link graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import DomainError
from .topology import RELIABILITY_MAX, RELIABILITY_MIN, Topology, normalize_distances

DEFAULT_ALPHA = 0.5

_MASK64 = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class WeightParams:
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0, 1], got {self.alpha}")


@dataclass(frozen=True)
class ReliabilityAssignment:
    values: tuple[float, ...]

    def __post_init__(self):
        for v, r in enumerate(self.values):
            if not RELIABILITY_MIN <= r <= RELIABILITY_MAX:
                raise DomainError(f"reliability of node {v} is {r}, outside [0.5, 1.0]")

    @classmethod
    def uniform(cls, n: int, value: float = 1.0) -> "ReliabilityAssignment":
        return cls((float(value),) * n)

    def __getitem__(self, v: int) -> float:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph with positive per-edge costs.

    ``edges`` lists ``(u, v, w)`` with ``u < v`` in ascending order;
    ``adj[v]`` holds ``(neighbour, w)`` sorted by neighbour id.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]
    adj: tuple[tuple[tuple[int, float], ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "WeightedGraph":
        norm = sorted((min(u, v), max(u, v), float(w)) for u, v, w in edges)
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for u, v, w in norm:
            if w <= 0:
                raise DomainError(f"edge ({u}, {v}) has non-positive weight {w}")
            adj[u].append((v, w))
            adj[v].append((u, w))
        return cls(n, tuple(norm), tuple(tuple(sorted(a)) for a in adj))

    def weight(self, u: int, v: int) -> float:
        for w_node, w in self.adj[u]:
            if w_node == v:
                return w
        raise KeyError((u, v))

    def weights(self) -> dict[tuple[int, int], float]:
        return {(u, v): w for u, v, w in self.edges}


def modified_weight(p: WeightParams, d_norm: float, r_u: float, r_v: float) -> float:
    """Blend normalised distance with the inverse endpoint-reliability product."""
    if not 0.0 < d_norm <= 1.0:
        raise DomainError(f"normalised distance must lie in (0, 1], got {d_norm}")
    for r in (r_u, r_v):
        if not RELIABILITY_MIN <= r <= RELIABILITY_MAX:
            raise DomainError(f"reliability must lie in [0.5, 1.0], got {r}")
    a = p.alpha
    return a * d_norm + (1.0 - a) * (1.0 / (r_u * r_v))


def build_modified_graph(
    t: Topology, r: ReliabilityAssignment, p: WeightParams
) -> WeightedGraph:
    if len(r) != t.n:
        raise DomainError(f"reliability assignment covers {len(r)} nodes, topology has {t.n}")
    dnorm = normalize_distances(t)
    edges = [
        (ln.u, ln.v, modified_weight(p, dnorm[ln], r[ln.u], r[ln.v])) for ln in t.links
    ]
    return WeightedGraph.from_edges(t.n, edges)


def sample_reliabilities(
    t: Topology, base_seed: int, trial_index: int
) -> ReliabilityAssignment:
    """Draw R_v ~ Uniform[0.5, 1.0] for every node of one Monte Carlo trial.

    The stream is keyed on ``(base_seed, trial_index)`` alone, and node ``v``
    always takes the v-th draw, so trials can be evaluated in any order or
    process.  Nodes with a fixed reliability keep it (their draw is discarded).
    """
    if trial_index < 0:
        raise DomainError(f"trial_index must be non-negative, got {trial_index}")
    ss = np.random.SeedSequence([base_seed & _MASK64, trial_index])
    draws = np.random.default_rng(ss).uniform(RELIABILITY_MIN, RELIABILITY_MAX, size=t.n)
    fixed = t.fixed_reliabilities()
    return ReliabilityAssignment(
        tuple(fixed.get(v, float(draws[v])) for v in range(t.n))
    )


def fixed_assignment(t: Topology, values: Mapping[int, float] | Sequence[float]) -> ReliabilityAssignment:
    if isinstance(values, Mapping):
        return ReliabilityAssignment(tuple(float(values[v]) for v in range(t.n)))
    return ReliabilityAssignment(tuple(float(x) for x in values))
