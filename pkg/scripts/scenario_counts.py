"""Tally the neighbourhood-family shapes over all connected labeled graphs of
each order (every vertex of every graph)."""

from __future__ import annotations

import argparse
import json
from collections import Counter

from t3recon.corpus import connected_labeled_graphs
from t3recon.ksets import connected_ksets
from t3recon.neighborhood import classify_neighborhoods, t3_neighborhoods


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[3, 4, 5, 6])
    args = ap.parse_args()
    for n in args.n:
        tally: Counter[str] = Counter()
        for _, g in connected_labeled_graphs(n):
            t3 = connected_ksets(g, 3)
            for v in range(n):
                tally[classify_neighborhoods(t3_neighborhoods(t3, v), g).tag.value] += 1
        print(json.dumps({"n": n, **dict(sorted(tally.items()))}))


if __name__ == "__main__":
    main()
