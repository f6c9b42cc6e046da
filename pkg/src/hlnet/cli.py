"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on a bad invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__, bounds
from .bounds import BudgetExceeded
from .fault import (
    extremal_witness,
    find_breaking_fault_set,
    verify_lemma_2_7,
    verify_lower_bound,
)
from .graph import delete_edges
from .io import load_graph, parse_edge_pairs, to_dot, to_edge_list
from .menger import is_sm_lambda, max_edge_disjoint_paths

DEFAULT_BUDGET = bounds.DEFAULT_SUBSET_BUDGET


@dataclass
class RunConfig:
    command: str
    graph: str | None = None
    r: int | None = None
    m: int | None = None
    mode: str = "exhaustive"
    samples: int = 1000
    seed: int | None = None
    workers: int = 1
    output: str = "json"
    budget: int = DEFAULT_BUDGET

    def validate(self) -> None:
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.mode == "sampled" and self.seed is None:
            raise ValueError("--seed is required in sampled mode")


def _envelope(cfg: RunConfig, result) -> dict:
    return {
        "tool": "hlnet",
        "version": __version__,
        "command": cfg.command,
        "graph": cfg.graph,
        "seed": cfg.seed,
        "budget": cfg.budget,
        "result": result,
    }


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def cmd_build(cfg: RunConfig, args) -> int:
    g = load_graph(cfg.graph)
    if cfg.output == "dot":
        sys.stdout.write(to_dot(g))
    else:
        sys.stdout.write(to_edge_list(g))
    return 0


def cmd_flow(cfg: RunConfig, args) -> int:
    g = load_graph(cfg.graph)
    res = max_edge_disjoint_paths(g, args.u, args.v)
    _emit(_envelope(cfg, res.to_dict()))
    return 0


def cmd_smlambda(cfg: RunConfig, args) -> int:
    g = load_graph(cfg.graph)
    faults = []
    if args.faults:
        faults = parse_edge_pairs(Path(args.faults).read_text())
        g = delete_edges(g, faults)
    rep = is_sm_lambda(g)
    out = rep.to_dict()
    out["faults"] = [list(e) for e in faults]
    _emit(_envelope(cfg, out))
    return 0 if rep.verdict else 1


def cmd_bounds(cfg: RunConfig, args) -> int:
    rows = bounds.bound_rows(args.n, args.g_max)
    if args.table:
        print(f"{'g':>8} {'e_g':>10} {'f(g)':>10}")
        for row in rows:
            print(f"{row.g:>8} {row.e_g:>10} {row.f_g:>10}")
    else:
        for row in rows:
            print(json.dumps(row.to_dict()))
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    g = load_graph(cfg.graph)
    res = verify_lower_bound(
        g, cfg.r, cfg.m, cfg.mode, cfg.samples, cfg.seed, cfg.budget, cfg.workers
    )
    _emit(_envelope(cfg, res.to_dict()))
    return 0 if res.verdict == "holds" else 1


def cmd_breaking(cfg: RunConfig, args) -> int:
    g = load_graph(cfg.graph)
    res = find_breaking_fault_set(g, cfg.r, cfg.m, cfg.samples, cfg.seed, cfg.budget, cfg.workers)
    _emit(_envelope(cfg, res.to_dict()))
    return 0 if res.verdict == "refuted" else 1


def cmd_witness(cfg: RunConfig, args) -> int:
    g = load_graph(cfg.graph)
    w = extremal_witness(g, cfg.r)
    _emit(_envelope(cfg, w.to_dict()))
    if args.dot:
        Path(args.dot).write_text(to_dot(g, highlight=w.F, name="witness"))
    return 0


def cmd_lemma27(cfg: RunConfig, args) -> int:
    g = load_graph(cfg.graph)
    res = verify_lemma_2_7(g, cfg.r, cfg.mode, cfg.samples, cfg.seed, cfg.budget)
    _emit(_envelope(cfg, res.to_dict()))
    return 0 if res.passed else 1


def cmd_reproduce(cfg: RunConfig, args) -> int:
    from .reproduce import run_all

    only = args.only or None
    results = run_all(cfg.workers, only=only)
    if cfg.output == "json":
        _emit(_envelope(cfg, [asdict(r) for r in results]))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hlnet", description="Edge-fault tolerance of hypercube-like networks")
    p.add_argument("--version", action="version", version=f"hlnet {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_arg(sp, positional=False):
        if positional:
            sp.add_argument("graph", help="qn:<n> | cq3 | random:<n>:<seed> | file path")
        else:
            sp.add_argument("--graph", required=True, help="qn:<n> | cq3 | random:<n>:<seed> | file path")

    def search_args(sp, modes=("exhaustive", "sampled")):
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--mode", choices=modes, default="exhaustive")
        sp.add_argument("--samples", type=int, default=1000)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = sub.add_parser("build", help="print a network as an edge list or DOT")
    graph_arg(sp)
    sp.add_argument("--format", dest="output", choices=("edgelist", "dot"), default="edgelist")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("flow", help="edge-disjoint paths and a minimum cut between u and v")
    graph_arg(sp, positional=True)
    sp.add_argument("u", type=int)
    sp.add_argument("v", type=int)
    sp.set_defaults(func=cmd_flow)

    sp = sub.add_parser("smlambda", help="strong Menger edge test, optionally after faults")
    graph_arg(sp, positional=True)
    sp.add_argument("--faults", help="file of 'u v' lines to delete first")
    sp.set_defaults(func=cmd_smlambda)

    sp = sub.add_parser("bounds", help="e_g and f(g) rows")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--g-max", type=int)
    sp.add_argument("--table", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("verify", help="no admissible fault set of size <= m breaks the property")
    graph_arg(sp)
    search_args(sp)
    sp.add_argument("--m", type=int)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("break", help="search for an admissible fault set that breaks the property")
    graph_arg(sp)
    search_args(sp)
    sp.add_argument("--m", type=int)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_breaking)

    sp = sub.add_parser("witness", help="extremal fault set construction")
    graph_arg(sp)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--dot", help="also write DOT with the faults highlighted")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("lemma27", help="largest component after removing few edges")
    graph_arg(sp)
    search_args(sp)
    sp.set_defaults(func=cmd_lemma27, samples=10_000)

    sp = sub.add_parser("reproduce", help="run every acceptance check and print a pass/fail matrix")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    sp.add_argument("--json", dest="output", action="store_const", const="json", default="table")
    sp.set_defaults(func=cmd_reproduce)
    return p


def config_from_args(args) -> RunConfig:
    fields = RunConfig.__dataclass_fields__
    values = {k: getattr(args, k) for k in fields if hasattr(args, k) and getattr(args, k) is not None}
    return RunConfig(**values)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        cfg.validate()
        if cfg.graph and cfg.graph.startswith("random:") and len(cfg.graph.split(":")) != 3:
            raise ValueError("random graphs need an explicit seed: random:<n>:<seed>")
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(cfg, args)
    except (ValueError, KeyError, BudgetExceeded, OSError) as exc:
        print(f"hlnet: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
