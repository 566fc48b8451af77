"""Command-line front end.

Graph inputs are auto-detected: a first line ``n=<n> k=<k>`` is a k-set file,
``n=<n>`` alone starts an edge list, anything else is read as graph6 (one
graph per line).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from t3recon.classrecon import (
    reconstruct_cycle,
    reconstruct_multipartite,
    reconstruct_planar5,
    reconstruct_regular_planar,
    reconstruct_srg,
    reconstruct_wheel,
)
from t3recon.errors import ReconError
from t3recon.graph import LabeledGraph, encode_graph6, graph_profile, parse_edge_list, parse_graph6
from t3recon.ksets import (
    KSetFamily,
    connected_ksets,
    connectivity_from_ksets,
    format_ksets,
    lift_ksets,
    parse_ksets,
)
from t3recon.neighborhood import all_neighborhoods
from t3recon.strong import check_strong_fast, check_strong_oracle, enumerate_realizations, find_twin_graphs
from t3recon.sweep import DEFAULT_BOUNDS, MODES, SweepConfig, resolve_jobs, run_sweep, write_jsonl

CLASSES = ("cycle", "wheel", "multipartite", "srg", "planar5", "regular-planar")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _first_line(text: str) -> str:
    return next((ln.strip() for ln in text.splitlines() if ln.strip()), "")


def _is_kset_text(text: str) -> bool:
    head = _first_line(text).split()
    return len(head) == 2 and head[0].startswith("n=") and head[1].startswith("k=")


def read_graphs(text: str) -> list[LabeledGraph]:
    if _is_kset_text(text):
        raise UsageError("expected a graph, got a k-set file")
    if _first_line(text).startswith("n="):
        return [parse_edge_list(text)]
    graphs = [parse_graph6(ln.strip()) for ln in text.splitlines() if ln.strip()]
    if not graphs:
        raise UsageError("no graph in input")
    return graphs


def read_graph(text: str) -> LabeledGraph:
    graphs = read_graphs(text)
    if len(graphs) != 1:
        raise UsageError(f"expected one graph, got {len(graphs)}")
    return graphs[0]


def read_family(text: str, k: int = 3) -> KSetFamily:
    """A k-set file, or a graph whose connected k-sets are taken."""
    if _is_kset_text(text):
        return parse_ksets(text)
    g = read_graph(text)
    _check_k(k, g.n)
    return connected_ksets(g, k)


def _check_k(k: int, n: int) -> None:
    if not 2 <= k <= n:
        raise UsageError(f"--k must lie in 2..n={n}, got {k}")


def _dump(obj: object) -> str:
    return json.dumps(obj) + "\n"


# ---------------------------------------------------------------- subcommands


def cmd_triples(args: argparse.Namespace) -> str:
    g = read_graph(_read(args.input))
    _check_k(args.k, g.n)
    return format_ksets(connected_ksets(g, args.k))


def cmd_lift(args: argparse.Namespace) -> str:
    fam = read_family(_read(args.input), args.k)
    if fam.k >= fam.n:
        raise UsageError(f"cannot lift k={fam.k} on n={fam.n} vertices")
    return format_ksets(lift_ksets(fam))


def cmd_reconstruct(args: argparse.Namespace) -> str:
    fam = read_family(_read(args.input), args.k)
    if args.cls == "srg" and args.k_degree is None:
        raise UsageError("--class srg needs --k-degree")
    if args.cls != "multipartite" and fam.k != 3:
        raise UsageError(f"--class {args.cls} works from connected triples, got k={fam.k}")
    if args.cls == "regular-planar":
        res = reconstruct_regular_planar(fam)
        print(f"degree {res.degree}", file=sys.stderr)
        return encode_graph6(res.graph) + "\n"
    table: dict[str, Callable[[KSetFamily], LabeledGraph]] = {
        "cycle": reconstruct_cycle,
        "wheel": reconstruct_wheel,
        "multipartite": reconstruct_multipartite,
        "srg": lambda f: reconstruct_srg(f, args.k_degree),
        "planar5": reconstruct_planar5,
    }
    return encode_graph6(table[args.cls](fam)) + "\n"


def cmd_check_strong(args: argparse.Namespace) -> str:
    out = []
    for g in read_graphs(_read(args.input)):
        rec: dict = {"graph6": encode_graph6(g)}
        fast = check_strong_fast(g) if args.method in ("fast", "both") else None
        oracle = check_strong_oracle(g) if args.method in ("oracle", "both") else None
        rec["fast_verdict"] = None if fast is None else fast.reconstructible
        rec["oracle_verdict"] = None if oracle is None else oracle.reconstructible
        if fast is not None and oracle is not None:
            rec["agree"] = fast.reconstructible == oracle.reconstructible
        witness = next((v.witness for v in (fast, oracle) if v is not None and v.witness is not None), None)
        rec["witness"] = None if witness is None else str(witness)
        rec["families_used"] = list(fast.families_used) if fast is not None else []
        out.append(_dump(rec))
    return "".join(out)


def cmd_realizations(args: argparse.Namespace) -> str:
    fam = read_family(_read(args.input))
    if fam.k != 3:
        raise UsageError("realizations are enumerated from connected triples")
    rs = enumerate_realizations(fam, limit=args.limit)
    if rs.truncated:
        print(f"truncated at {args.limit} realizations", file=sys.stderr)
    return "".join(encode_graph6(h) + "\n" for h in rs.realizations)


def cmd_connectivity(args: argparse.Namespace) -> str:
    res = connectivity_from_ksets(read_family(_read(args.input), args.k))
    sep = None if res.separator is None else list(res.separator)
    return _dump({"kappa": res.kappa, "exact": res.exact, "separator": sep})


def cmd_twins(args: argparse.Namespace) -> str:
    preds = [p.strip() for p in args.cls.split(",") if p.strip()] if args.cls else []
    try:
        pairs = find_twin_graphs(args.n, preds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = sorted(tuple(sorted((encode_graph6(a), encode_graph6(b)))) for a, b in pairs)
    return "".join(f"{a} {b}\n" for a, b in lines)


def cmd_sweep(args: argparse.Namespace) -> str:
    cfg = SweepConfig(n=args.n, mode=args.mode, jobs=resolve_jobs(args.jobs), timing=args.timing, bound=args.bound)
    records, summary = run_sweep(cfg)
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            write_jsonl(records, summary, fh)
        return _dump(summary.as_json())
    write_jsonl(records, summary, sys.stdout)
    return ""


def cmd_profile(args: argparse.Namespace) -> str:
    return "".join(_dump({"graph6": encode_graph6(g), **graph_profile(g).as_json()}) for g in read_graphs(_read(args.input)))


def cmd_neighborhoods(args: argparse.Namespace) -> str:
    fam = read_family(_read(args.input))
    if fam.k != 3:
        raise UsageError("neighbourhood families are computed from connected triples")
    return "".join(
        _dump({"vertex": nf.center, "cardinality": nf.cardinality, "edgeless": nf.edgeless,
               "elements": [sorted(e) for e in nf.elements]})
        for nf in all_neighborhoods(fam)
    )


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="t3recon", description="Graph reconstruction from connected k-sets.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable[[argparse.Namespace], str], help: str, k: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        if k:
            sp.add_argument("--k", type=int, default=3, help="subset size when the input is a graph")
        return sp

    def with_input(sp: argparse.ArgumentParser) -> argparse.ArgumentParser:
        sp.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
        return sp

    with_input(add("triples", cmd_triples, "connected k-sets of a graph", k=True))
    with_input(add("lift", cmd_lift, "lift a k-set family to k+1", k=True))

    sp = with_input(add("reconstruct", cmd_reconstruct, "class-conditional reconstruction", k=True))
    sp.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    sp.add_argument("--k-degree", type=int, default=None, help="vertex degree for --class srg")

    sp = with_input(add("check-strong", cmd_check_strong, "strong reconstructibility verdicts as JSONL"))
    sp.add_argument("--method", choices=("fast", "oracle", "both"), default="fast")

    sp = with_input(add("realizations", cmd_realizations, "all graphs sharing the connected triples"))
    sp.add_argument("--limit", type=int, default=1000)

    with_input(add("connectivity", cmd_connectivity, "vertex connectivity from connected k-sets", k=True))

    sp = add("twins", cmd_twins, "pairs of graphs with equal connected triples")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--class", dest="cls", default="", help="comma-separated predicates, e.g. hamiltonian,planar")

    sp = add("sweep", cmd_sweep, "exhaustive sweep over connected labeled graphs")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=MODES, default="equivalence")
    sp.add_argument("--out", default="-")
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: $RECON_JOBS or 1)")
    sp.add_argument("--timing", action="store_true", help="record per-graph elapsed time")
    sp.add_argument("--bound", type=int, default=None, help=f"override the size bound {DEFAULT_BOUNDS}")

    with_input(add("profile", cmd_profile, "structural profile as JSON"))
    with_input(add("neighborhoods", cmd_neighborhoods, "neighbourhood families from connected triples"))
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ReconError, ValueError, OSError) as exc:
        print(f"t3recon {args.command}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
