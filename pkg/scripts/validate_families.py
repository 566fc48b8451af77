"""Check the edge-necessity patterns.

For every pattern: (1) local necessity, exhaustively over all graphs on the
pattern's vertex set; (2) random hosts, where every matched edge must be
necessary according to the realization oracle.  Finally, count fast/oracle
disagreements at a given order with each pattern left out, which shows which
patterns the characterization actually needs.
"""

from __future__ import annotations

import argparse
import itertools
import random
from dataclasses import dataclass

from t3recon import corpus
from t3recon.graph import LabeledGraph, is_connected
from t3recon.ksets import connected_ksets
from t3recon.strong import FAMILIES, check_strong_oracle, is_edge_necessary, match_family, twin_pair


@dataclass
class Config:
    hosts: int = 500
    max_host: int = 8
    order: int = 6
    seed: int = 1


def locally_necessary(pat) -> bool:
    u, v = pat.highlighted_edge
    k = pat.vertex_count
    pairs = list(itertools.combinations(range(k), 2))
    groups: dict = {}
    for mask in range(1 << len(pairs)):
        h = LabeledGraph.from_edges(k, [p for i, p in enumerate(pairs) if mask >> i & 1])
        groups.setdefault(connected_ksets(h, 3), []).append(h)
    return all(o.has_edge(u, v) for c in pat.completions() for o in groups[connected_ksets(c, 3)])


def fast_with(g: LabeledGraph, families) -> bool:
    if twin_pair(g) is not None:
        return False
    rows = g.rows
    return all(match_family(g, u, v, families) is not None for u, v in g.edges() if rows[u] & rows[v])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--hosts", type=int, default=Config.hosts)
    ap.add_argument("--order", type=int, default=Config.order)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    cfg = Config(hosts=a.hosts, order=a.order, seed=a.seed)

    rng = random.Random(cfg.seed)
    hosts = [corpus.random_connected_graph(rng.randint(5, cfg.max_host), rng, rng.choice((0.3, 0.5))) for _ in range(cfg.hosts)]
    for pat in FAMILIES:
        matched = bad = 0
        for g in hosts:
            for u, v in g.edges():
                if match_family(g, u, v, [pat]) is not None:
                    matched += 1
                    bad += not is_edge_necessary(g, u, v)
        print(f"{pat.family_id}: locally necessary={locally_necessary(pat)}  host matches={matched}  violations={bad}")

    truth = {}
    for _, g in corpus.connected_labeled_graphs(cfg.order):
        truth[g] = check_strong_oracle(g).reconstructible
    for drop in [None] + [p.family_id for p in FAMILIES]:
        fams = [p for p in FAMILIES if p.family_id != drop]
        wrong = sum(fast_with(g, fams) != ok for g, ok in truth.items() if is_connected(g))
        label = "all patterns" if drop is None else f"without {drop}"
        print(f"n={cfg.order} {label}: {wrong} disagreements with the oracle")


if __name__ == "__main__":
    main()
