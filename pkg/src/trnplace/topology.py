"""Network data model, topology file parsing and synthetic topology generation.

Two on-disk formats are understood:

* JSON::

    {"name": "metro", "nodes": [{"id": "A", "label": "Alpha", "reliability": 0.9}],
     "links": [{"source": "A", "target": "B", "distance_km": 12.5}]}

* edge list, one ``<u> <v> <distance_km>`` link per line with ``#`` comments.

Node identifiers in files are arbitrary strings or integers.  After parsing,
nodes carry dense integer indices ``0..n-1`` assigned by sorting the file
identifiers (numerically when all of them are integers), so the order in which
records appear in a file never changes the result.
"""

from __future__ import annotations

import io
import json
import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import IO, Iterable, Optional, Union

import numpy as np

from .errors import InvalidParams, ParseError, ValidationError

RELIABILITY_MIN = 0.5
RELIABILITY_MAX = 1.0

GEN_MIN_KM = 10.0
GEN_MAX_KM = 80.0

_INT_RE = re.compile(r"^-?\d+$")

Source = Union[bytes, str, IO[bytes], IO[str]]


@dataclass(frozen=True)
class Node:
    index: int
    key: str
    label: Optional[str] = None
    reliability: Optional[float] = None

    @property
    def display(self) -> str:
        return self.label if self.label is not None else self.key


@dataclass(frozen=True, order=True)
class Link:
    u: int
    v: int
    distance_km: float

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class Topology:
    name: str
    nodes: tuple[Node, ...]
    links: tuple[Link, ...]
    _adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[list[int]] = [[] for _ in self.nodes]
        for link in self.links:
            adj[link.u].append(link.v)
            adj[link.v].append(link.u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.links)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def index_of(self, key) -> int:
        key = str(key)
        for node in self.nodes:
            if node.key == key:
                return node.index
        raise KeyError(key)

    def fixed_reliabilities(self) -> dict[int, float]:
        return {nd.index: nd.reliability for nd in self.nodes if nd.reliability is not None}

    def to_dict(self) -> dict:
        nodes = []
        for nd in self.nodes:
            rec: dict = {"id": _json_id(nd.key)}
            if nd.label is not None:
                rec["label"] = nd.label
            if nd.reliability is not None:
                rec["reliability"] = nd.reliability
            nodes.append(rec)
        links = [
            {
                "source": _json_id(self.nodes[ln.u].key),
                "target": _json_id(self.nodes[ln.v].key),
                "distance_km": ln.distance_km,
            }
            for ln in self.links
        ]
        return {"name": self.name, "nodes": nodes, "links": links}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def scaled(self, factor: float) -> "Topology":
        """Copy with every link distance multiplied by ``factor``."""
        links = tuple(Link(ln.u, ln.v, ln.distance_km * factor) for ln in self.links)
        return Topology(self.name, self.nodes, links)


def _json_id(key: str):
    return int(key) if _INT_RE.match(key) else key


def _read_text(source: Source) -> str:
    if isinstance(source, bytes):
        data = source
    elif isinstance(source, str):
        return source
    else:
        data = source.read()
        if isinstance(data, str):
            return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc}") from exc


def parse_topology(source: Source, format: str = "json", name: Optional[str] = None) -> Topology:
    """Parse and validate a topology from bytes, text or a readable stream.

    Raises ParseError for syntax problems and ValidationError when the graph
    breaks an invariant (self-loop, duplicate link, non-positive distance,
    fewer than two nodes, or more than one connected component).
    """
    text = _read_text(source)
    if format == "json":
        return _parse_json(text, name)
    if format == "edgelist":
        return _parse_edgelist(text, name or "edgelist")
    raise ParseError(f"unknown topology format {format!r}")


def load_topology(path, format: Optional[str] = None) -> Topology:
    path = str(path)
    if format is None:
        format = "json" if path.lower().endswith(".json") else "edgelist"
    with open(path, "rb") as fh:
        return parse_topology(fh, format)


def _number(value, what, record) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{what} must be a number", record)
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{what} must be finite", record)
    return value


def _parse_json(text: str, name: Optional[str]) -> Topology:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    raw_nodes = doc.get("nodes")
    raw_links = doc.get("links")
    if not isinstance(raw_nodes, list) or not isinstance(raw_links, list):
        raise ParseError("'nodes' and 'links' must both be lists")

    records: dict[str, tuple[Optional[str], Optional[float]]] = {}
    for rec in raw_nodes:
        if not isinstance(rec, dict) or "id" not in rec:
            raise ParseError("node record needs an 'id'", rec)
        nid = rec["id"]
        if isinstance(nid, bool) or not isinstance(nid, (int, str)):
            raise ParseError("node id must be a string or integer", rec)
        key = str(nid)
        if key in records:
            raise ValidationError(f"duplicate node id {key!r}", rec)
        label = rec.get("label")
        if label is not None and not isinstance(label, str):
            raise ParseError("node label must be a string", rec)
        rel = rec.get("reliability")
        if rel is not None:
            rel = _number(rel, "reliability", rec)
            if not RELIABILITY_MIN <= rel <= RELIABILITY_MAX:
                raise ValidationError(
                    f"reliability {rel} of node {key!r} outside [0.5, 1.0]", rec
                )
        records[key] = (label, rel)

    edges = []
    for rec in raw_links:
        if not isinstance(rec, dict) or not {"source", "target", "distance_km"} <= rec.keys():
            raise ParseError("link record needs 'source', 'target' and 'distance_km'", rec)
        u, v = str(rec["source"]), str(rec["target"])
        for end in (u, v):
            if end not in records:
                raise ValidationError(f"link references unknown node {end!r}", rec)
        edges.append((u, v, _number(rec["distance_km"], "distance_km", rec), rec))

    topo_name = name if name is not None else doc.get("name", "topology")
    if not isinstance(topo_name, str):
        raise ParseError("'name' must be a string")
    return _build(topo_name, records, edges)


def _parse_edgelist(text: str, name: str) -> Topology:
    records: dict[str, tuple[Optional[str], Optional[float]]] = {}
    edges = []
    for lineno, line in enumerate(io.StringIO(text), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        record = f"line {lineno}: {line.strip()}"
        if len(parts) != 3:
            raise ParseError(f"expected '<u> <v> <distance_km>', got {len(parts)} fields", record)
        u, v, d = parts
        try:
            dist = float(d)
        except ValueError:
            raise ParseError(f"distance {d!r} is not a number", record) from None
        if not math.isfinite(dist):
            raise ValidationError("distance_km must be finite", record)
        records.setdefault(u, (None, None))
        records.setdefault(v, (None, None))
        edges.append((u, v, dist, record))
    return _build(name, records, edges)


def _sorted_keys(keys: Iterable[str]) -> list[str]:
    keys = list(keys)
    if all(_INT_RE.match(k) for k in keys) and len({int(k) for k in keys}) == len(keys):
        return sorted(keys, key=int)
    return sorted(keys)


def _build(name, records, edges) -> Topology:
    if len(records) < 2:
        raise ValidationError(f"topology needs at least 2 nodes, got {len(records)}")
    if not edges:
        raise ValidationError("topology needs at least 1 link")
    order = _sorted_keys(records)
    index = {k: i for i, k in enumerate(order)}
    nodes = tuple(
        Node(i, k, records[k][0], records[k][1]) for i, k in enumerate(order)
    )

    seen: dict[tuple[int, int], object] = {}
    links = []
    for u, v, dist, rec in edges:
        if u == v:
            raise ValidationError(f"self-loop on node {u!r}", rec)
        if dist <= 0:
            raise ValidationError(f"non-positive distance {dist} on link {u!r}-{v!r}", rec)
        a, b = sorted((index[u], index[v]))
        if (a, b) in seen:
            raise ValidationError(f"duplicate link {u!r}-{v!r}", rec)
        seen[(a, b)] = rec
        links.append(Link(a, b, dist))
    topo = Topology(name, nodes, tuple(sorted(links)))
    _check_connected(topo)
    return topo


def components(t: Topology) -> list[list[int]]:
    """Connected components as sorted index lists, ordered by smallest member."""
    seen = [False] * t.n
    comps = []
    for start in range(t.n):
        if seen[start]:
            continue
        seen[start] = True
        comp, queue = [], deque([start])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in t.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _check_connected(t: Topology) -> None:
    comps = components(t)
    if len(comps) > 1:
        reps = [t.nodes[c[0]].key for c in comps]
        raise ValidationError(
            f"graph is disconnected: {len(comps)} components, e.g. nodes "
            + ", ".join(repr(r) for r in reps),
            components=[[t.nodes[i].key for i in c] for c in comps],
        )


def normalize_distances(t: Topology) -> dict[Link, float]:
    """Divide every link distance by the longest one; the longest maps to 1.0."""
    longest = max(ln.distance_km for ln in t.links)
    return {ln: ln.distance_km / longest for ln in t.links}


def generate_topology(model: str, n: int, m: int, seed: int) -> Topology:
    """Deterministic synthetic metro topology with ``n`` nodes and ``m`` links.

    ``ring_chords`` starts from an n-cycle and adds ``m - n`` random chords;
    ``grid_diag`` lays nodes on a near-square grid, threads a serpentine path
    through them and adds random grid/diagonal neighbour links.  Distances are
    uniform in [10, 80] km rounded to 0.1 km.
    """
    if n < 2:
        raise InvalidParams(f"n must be at least 2, got {n}")
    if m < n:
        raise InvalidParams(f"m must be at least n ({n}), got {m}")
    rng = np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)

    if model == "ring_chords":
        max_m = n * (n - 1) // 2
        if m > max_m:
            raise InvalidParams(f"m={m} exceeds simple-graph maximum {max_m} for n={n}")
        backbone = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
        candidates = [
            (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in backbone
        ]
    elif model == "grid_diag":
        cols = math.ceil(math.sqrt(n))
        pos = [divmod(i, cols) for i in range(n)]
        snake = sorted(range(n), key=lambda i: (pos[i][0], pos[i][1] if pos[i][0] % 2 == 0 else -pos[i][1]))
        backbone = {tuple(sorted(p)) for p in zip(snake, snake[1:])}
        candidates = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if max(abs(pos[i][0] - pos[j][0]), abs(pos[i][1] - pos[j][1])) == 1
            and (i, j) not in backbone
        ]
        max_m = len(backbone) + len(candidates)
        if m > max_m:
            raise InvalidParams(f"m={m} exceeds the {max_m} grid/diagonal links available for n={n}")
    else:
        raise InvalidParams(f"unknown model {model!r}")

    extra = m - len(backbone)
    picked = rng.choice(len(candidates), size=extra, replace=False) if extra else []
    pairs = sorted(backbone | {candidates[int(i)] for i in picked})
    dists = rng.uniform(GEN_MIN_KM, GEN_MAX_KM, size=len(pairs))
    links = tuple(Link(u, v, round(float(d), 1)) for (u, v), d in zip(pairs, dists))
    nodes = tuple(Node(i, str(i)) for i in range(n))
    topo = Topology(f"{model}-n{n}-m{m}-s{seed}", nodes, links)
    _check_connected(topo)
    return topo
