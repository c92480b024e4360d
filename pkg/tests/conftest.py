import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from trnplace.reliability import WeightedGraph  # noqa: E402
from trnplace.topology import parse_topology  # noqa: E402

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def topo_json(edges, name="t", reliability=None):
    import json

    nodes = sorted({u for u, _, _ in edges} | {v for _, v, _ in edges}, key=str)
    recs = []
    for nd in nodes:
        rec = {"id": nd}
        if reliability and nd in reliability:
            rec["reliability"] = reliability[nd]
        recs.append(rec)
    doc = {
        "name": name,
        "nodes": recs,
        "links": [{"source": u, "target": v, "distance_km": d} for u, v, d in edges],
    }
    return json.dumps(doc)


def make_topology(edges, **kw):
    return parse_topology(topo_json(edges, **kw).encode(), "json")


@pytest.fixture
def p3():
    return WeightedGraph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)])


@pytest.fixture
def c4():
    return WeightedGraph.from_edges(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 3, 1.0)])


@pytest.fixture
def star3():
    return WeightedGraph.from_edges(4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
