"""Round-trip random connected d-regular planar graphs through the regular
planar reconstructor and tally which per-vertex case rules fire."""

from __future__ import annotations

import argparse
import json
from collections import Counter

import networkx as nx

from t3recon.classrecon import reconstruct_regular_planar
from t3recon.errors import PromiseViolation
from t3recon.graph import LabeledGraph
from t3recon.ksets import connected_ksets


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--sizes", type=int, nargs=2, default=[8, 20], metavar=("LO", "HI"))
    ap.add_argument("--tries", type=int, default=2000)
    args = ap.parse_args()

    for d in args.degree:
        hits: Counter[str] = Counter()
        graphs = failures = 0
        for n in range(args.sizes[0], args.sizes[1] + 1):
            if n * d % 2 or n <= d:
                continue
            for seed in range(args.tries):
                h = nx.random_regular_graph(d, n, seed=seed)
                if not nx.is_connected(h) or not nx.check_planarity(h)[0]:
                    continue
                g = LabeledGraph.from_edges(n, h.edges())
                graphs += 1
                try:
                    res = reconstruct_regular_planar(connected_ksets(g, 3))
                    failures += res.graph != g
                    hits.update(res.branches.values())
                except PromiseViolation:
                    failures += 1
        print(json.dumps({"degree": d, "graphs": graphs, "failures": failures, "branches": dict(sorted(hits.items()))}))


if __name__ == "__main__":
    main()
