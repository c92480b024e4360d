"""Command-line front end: ``trnplace {validate,rank,cpc,compare,gen,replay}``.

Exit status is 0 on success, 1 when an input file is malformed or fails
validation, and 2 for bad parameters.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Optional

from . import __version__
from .charts import line_chart
from .errors import DomainError, InvalidParams, NoConvergence, ParseError, ValidationError
from .evaluation import compare_baselines, cpc_curve, degree_order
from .outputs import compare_csv, curve_csv, ranking_csv, read_ranking_csv
from .placement import DEFAULT_SEED, DEFAULT_TRIALS, ScoreParams, monte_carlo_rank
from .topology import Topology, generate_topology, parse_topology

BUNDLED_PREFIX = "@"

EC_MODE_FLAGS = {"inverse-weight": "inverse_weight", "unweighted": "unweighted", "raw-weight": "raw_weight"}
ENDPOINT_FLAGS = {"interior": "interior_only", "endpoints": "include_endpoints"}


class ParamError(Exception):
    pass


def read_input(path: str) -> bytes:
    """Bytes of a topology file; ``@name`` refers to a bundled topology."""
    if path.startswith(BUNDLED_PREFIX):
        res = resources.files("trnplace") / "data" / f"{path[1:]}.json"
        if not res.is_file():
            raise ParamError(f"no bundled topology named {path[1:]!r}")
        return res.read_bytes()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise ParamError(f"cannot read {path}: {exc.strerror}") from None


def _format_for(path: str, fmt: Optional[str]) -> str:
    if fmt:
        return fmt
    return "json" if path.startswith(BUNDLED_PREFIX) or path.lower().endswith(".json") else "edgelist"


def load(args) -> tuple[Topology, bytes]:
    data = read_input(args.input)
    return parse_topology(data, _format_for(args.input, args.format)), data


def _write(path: Path, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _score_params(args) -> ScoreParams:
    return ScoreParams(
        beta=args.beta,
        alpha=args.alpha,
        trials=args.trials,
        base_seed=args.seed,
        ec_mode=EC_MODE_FLAGS[args.ec_mode],
    )


def _k_max(args, t: Topology) -> int:
    k = t.n if args.k_max is None else args.k_max
    if not 1 <= k <= t.n:
        raise ParamError(f"--k-max must lie in [1, {t.n}], got {k}")
    return k


# flags echoed into the sidecar; --threads is left out because it never changes results
_REPLAYED = (
    "input", "format", "alpha", "beta", "trials", "seed", "ec_mode", "k_max",
    "endpoints", "cpc_graph", "paths", "method", "ranking", "svg",
)


def _sidecar(args, data: bytes) -> str:
    params = {k: getattr(args, k) for k in _REPLAYED if hasattr(args, k)}
    params["output"] = Path(args.output).name
    doc = {
        "command": args.command,
        "params": params,
        "topology_sha256": hashlib.sha256(data).hexdigest(),
        "tool_version": __version__,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _sidecar_path(output: Path) -> Path:
    return output.with_name(output.name + ".json")


def cmd_validate(args) -> int:
    t, _ = load(args)
    dists = [ln.distance_km for ln in t.links]
    degs = [t.degree(v) for v in range(t.n)]
    print(f"name: {t.name}")
    print(f"nodes: {t.n}")
    print(f"links: {t.m}")
    print("connected: yes")
    print(f"distance_km: min {min(dists):g} max {max(dists):g}")
    print(f"degree: min {min(degs)} max {max(degs)}")
    print(f"fixed reliabilities: {len(t.fixed_reliabilities())}")
    return 0


def cmd_rank(args) -> int:
    t, data = load(args)
    ranking = monte_carlo_rank(t, _score_params(args), threads=args.threads)
    out = Path(args.output)
    _write(out, ranking_csv(ranking, t))
    _write(_sidecar_path(out), _sidecar(args, data))
    return 0


def cmd_cpc(args) -> int:
    t, data = load(args)
    params = _score_params(args)
    k_max = _k_max(args, t)
    if args.method == "degree":
        order = degree_order(t)
    elif args.ranking:
        try:
            text = Path(args.ranking).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParamError(f"cannot read {args.ranking}: {exc.strerror}") from None
        order = read_ranking_csv(text, t)
    else:
        order = monte_carlo_rank(t, params, threads=args.threads).order
    curve = cpc_curve(
        t, order, k_max, params,
        endpoint_mode=ENDPOINT_FLAGS[args.endpoints],
        cpc_graph=args.cpc_graph,
        paths=args.paths,
        method=args.method,
        threads=args.threads,
    )
    out = Path(args.output)
    _write(out, curve_csv(curve))
    _write(_sidecar_path(out), _sidecar(args, data))
    if args.svg:
        svg = line_chart(
            [(f"{args.method} ranking", curve.points)],
            f"Cumulative path coverage ({t.name})",
            "Number of TRNs (K)",
            "Shortest paths covered (%)",
        )
        _write(out.with_suffix(".svg"), svg)
    return 0


def cmd_compare(args) -> int:
    t, data = load(args)
    cmp = compare_baselines(
        t, _score_params(args), _k_max(args, t),
        endpoint_mode=ENDPOINT_FLAGS[args.endpoints],
        cpc_graph=args.cpc_graph,
        paths=args.paths,
        threads=args.threads,
    )
    out = Path(args.output)
    _write(out, compare_csv(cmp))
    _write(_sidecar_path(out), _sidecar(args, data))
    if args.svg:
        svg = line_chart(
            [("composite score", cmp.composite.points), ("degree centrality", cmp.degree.points)],
            f"CPC: composite score vs degree centrality ({t.name})",
            "Number of TRNs (K)",
            "Shortest paths covered (%)",
        )
        _write(out.with_suffix(".svg"), svg)
    return 0


def cmd_gen(args) -> int:
    t = generate_topology(args.model, args.n, args.m, args.seed)
    if args.name:
        t = Topology(args.name, t.nodes, t.links)
    _write(Path(args.output), t.to_json())
    return 0


def cmd_replay(args) -> int:
    try:
        doc = json.loads(Path(args.sidecar).read_text(encoding="utf-8"))
        command, params = doc["command"], dict(doc["params"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ParamError(f"unreadable sidecar {args.sidecar}: {exc}") from None
    out_dir = Path(args.out_dir) if args.out_dir else Path(args.sidecar).parent
    params["output"] = str(out_dir / params["output"])
    ns = argparse.Namespace(command=command, threads=args.threads, **params)
    data = read_input(ns.input)
    if hashlib.sha256(data).hexdigest() != doc.get("topology_sha256"):
        raise ValidationError(f"topology {ns.input} no longer matches the sidecar's sha256")
    return COMMANDS[command](ns)


COMMANDS = {
    "validate": cmd_validate,
    "rank": cmd_rank,
    "cpc": cmd_cpc,
    "compare": cmd_compare,
    "gen": cmd_gen,
    "replay": cmd_replay,
}


def _unit(text: str) -> float:
    x = float(text)
    if not 0.0 <= x <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return x


def _positive(text: str) -> int:
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trnplace", description="Reliability-aware trusted repeater placement for QKD networks."
    )
    parser.add_argument("--version", action="version", version=f"trnplace {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def topo_args(p):
        p.add_argument("input", help="topology file (.json or edge list), or @metro28 for the bundled sample")
        p.add_argument("--format", choices=["json", "edgelist"], help="override format detection")

    def score_args(p):
        p.add_argument("-o", "--output", required=True)
        p.add_argument("--alpha", type=_unit, default=0.5, help="distance vs reliability balance (default 0.5)")
        p.add_argument("--beta", type=_unit, default=0.5, help="betweenness vs eigenvector balance (default 0.5)")
        p.add_argument("--trials", type=_positive, default=DEFAULT_TRIALS)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--ec-mode", choices=list(EC_MODE_FLAGS), default="inverse-weight")
        p.add_argument("--threads", type=_positive, default=1, help="worker processes; results do not depend on it")

    def cpc_args(p):
        p.add_argument("--k-max", type=int, default=None, help="largest K (default: node count)")
        p.add_argument("--endpoints", choices=list(ENDPOINT_FLAGS), default="interior")
        p.add_argument("--cpc-graph", choices=["trials", "distance"], default="trials")
        p.add_argument("--paths", choices=["canonical", "all"], default="canonical")
        p.add_argument("--svg", action="store_true", help="also write an SVG chart next to the CSV")

    p = sub.add_parser("validate", help="check a topology file and print its statistics")
    topo_args(p)

    p = sub.add_parser("rank", help="Monte Carlo composite-score ranking")
    topo_args(p)
    score_args(p)

    p = sub.add_parser("cpc", help="cumulative path coverage curve for one ranking")
    topo_args(p)
    score_args(p)
    cpc_args(p)
    p.add_argument("--ranking", help="ranking CSV written by 'rank' (default: compute it)")
    p.add_argument("--method", choices=["composite", "degree"], default="composite")

    p = sub.add_parser("compare", help="composite score vs degree centrality coverage")
    topo_args(p)
    score_args(p)
    cpc_args(p)

    p = sub.add_parser("gen", help="write a synthetic topology")
    p.add_argument("--model", choices=["ring_chords", "grid_diag"], default="ring_chords")
    p.add_argument("--n", type=int, default=28)
    p.add_argument("--m", type=int, default=52)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--name")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("replay", help="re-run the command recorded in a JSON sidecar")
    p.add_argument("sidecar")
    p.add_argument("--out-dir", help="where to write outputs (default: next to the sidecar)")
    p.add_argument("--threads", type=_positive, default=1)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, ValidationError, NoConvergence) as exc:
        print(f"trnplace: error: {exc}", file=sys.stderr)
        return 1
    except (ParamError, InvalidParams, DomainError) as exc:
        print(f"trnplace: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
