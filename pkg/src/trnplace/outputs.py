"""CSV writers/readers for rankings and coverage curves."""

from __future__ import annotations

import csv
import io
from typing import Sequence

from .errors import ParseError
from .evaluation import Comparison, CpcCurve
from .placement import Ranking
from .topology import Topology

RANKING_HEADER = ["rank", "node", "label", "total_score", "mean_bc", "mean_ec"]


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def ranking_csv(r: Ranking, t: Topology) -> str:
    rows = [RANKING_HEADER]
    for i, e in enumerate(r.entries, start=1):
        rows.append(
            [i, e.node, t.nodes[e.node].display, f"{e.total_score:.6f}", f"{e.mean_bc:.6f}", f"{e.mean_ec:.6f}"]
        )
    return _csv(rows)


def read_ranking_csv(text: str, t: Topology) -> list[int]:
    """Node order from a ranking CSV, checked against the topology's labels."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != RANKING_HEADER:
        raise ParseError(f"ranking CSV must start with header {','.join(RANKING_HEADER)}")
    body = sorted(rows[1:], key=lambda row: int(row[0]) if row and row[0].isdigit() else -1)
    order = []
    for row in body:
        if len(row) != len(RANKING_HEADER) or not row[0].isdigit():
            raise ParseError("malformed ranking row", row)
        try:
            node = int(row[1])
        except ValueError:
            raise ParseError("node column must be an integer id", row) from None
        if not 0 <= node < t.n or t.nodes[node].display != row[2]:
            raise ParseError(f"ranking row does not match topology node {row[1]}/{row[2]!r}", row)
        order.append(node)
    if sorted(order) != list(range(t.n)):
        raise ParseError("ranking must list every topology node exactly once")
    return order


def _pct(x: float) -> str:
    out = f"{x:.2f}"
    return "0.00" if out == "-0.00" else out


def curve_csv(curve: CpcCurve) -> str:
    return _csv([["k", "coverage_pct"]] + [[k, _pct(c)] for k, c in curve.points])


def compare_csv(cmp: Comparison) -> str:
    rows = [["k", "composite_pct", "degree_pct", "delta_pct"]]
    for (k, c), (_, d), (_, delta) in zip(cmp.composite.points, cmp.degree.points, cmp.delta):
        rows.append([k, _pct(c), _pct(d), _pct(delta)])
    return _csv(rows)
