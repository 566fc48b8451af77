"""Strong-reconstructibility census over all connected labeled graphs.

    python scripts/census.py --n 4 5 6 --out results/
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from t3recon.sweep import SweepConfig, resolve_jobs, run_sweep, write_jsonl


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--mode", choices=("census", "equivalence"), default="census")
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--out", type=Path, default=None, help="directory for per-n JSONL reports")
    args = ap.parse_args()

    for n in args.n:
        cfg = SweepConfig(n=n, mode=args.mode, jobs=resolve_jobs(args.jobs))
        start = time.perf_counter()
        records, summary = run_sweep(cfg)
        row = summary.as_json() | {"seconds": round(time.perf_counter() - start, 2)}
        print(json.dumps(row))
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            with open(args.out / f"{args.mode}_n{n}.jsonl", "w") as fh:
                write_jsonl(records, summary, fh)


if __name__ == "__main__":
    main()
