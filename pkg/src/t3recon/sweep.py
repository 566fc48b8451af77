"""Exhaustive sweeps over connected labeled graphs with JSONL reports.

Graphs are enumerated by edge mask; work is split into mask chunks that can
run in a process pool.  Records are sorted by mask before writing, so the
worker count never changes the output.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable

from t3recon.corpus import connected_count, connected_labeled_graphs, graph_from_mask
from t3recon.errors import BoundExceeded
from t3recon.graph import encode_graph6
from t3recon.strong import check_strong_fast, check_strong_oracle

MODES = ("equivalence", "census")
DEFAULT_BOUNDS = {"equivalence": 6, "census": 7}


@dataclass(frozen=True)
class SweepConfig:
    n: int
    mode: str = "equivalence"
    jobs: int = 1
    timing: bool = False  # record per-graph wall time; off keeps reports byte-stable
    bound: int | None = None
    chunk: int = 2000

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown sweep mode {self.mode!r}; choose from {MODES}")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    @property
    def effective_bound(self) -> int:
        return self.bound if self.bound is not None else DEFAULT_BOUNDS[self.mode]


@dataclass(frozen=True)
class SweepRecord:
    graph6: str
    n: int
    fast_verdict: bool | None
    oracle_verdict: bool
    agree: bool
    witness: str | None
    families_used: tuple[str, ...]
    elapsed_us: int

    def as_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "fast_verdict": self.fast_verdict,
            "oracle_verdict": self.oracle_verdict,
            "agree": self.agree,
            "witness": self.witness,
            "families_used": list(self.families_used),
            "elapsed_us": self.elapsed_us,
        }


@dataclass(frozen=True)
class SweepSummary:
    mode: str
    n: int
    total: int
    agree: int
    reconstructible: int

    @property
    def fraction(self) -> float:
        return self.reconstructible / self.total if self.total else 0.0

    def as_json(self) -> dict:
        return {
            "summary": True,
            "mode": self.mode,
            "n": self.n,
            "total": self.total,
            "agree": self.agree,
            "disagree": self.total - self.agree,
            "reconstructible": self.reconstructible,
            "fraction": self.fraction,
        }


def resolve_jobs(flag: int | None) -> int:
    """Worker count from the flag, else the RECON_JOBS variable, else 1."""
    if flag is not None:
        return flag
    env = os.environ.get("RECON_JOBS", "").strip()
    return int(env) if env else 1


def sweep_record(n: int, mask: int, mode: str, timing: bool = False) -> tuple[int, SweepRecord]:
    g = graph_from_mask(n, mask)
    start = time.perf_counter_ns()
    oracle = check_strong_oracle(g)
    fast = check_strong_fast(g) if mode == "equivalence" else None
    elapsed = (time.perf_counter_ns() - start) // 1000 if timing else 0
    witness = oracle.witness
    if fast is not None and fast.witness is not None:
        witness = fast.witness
    rec = SweepRecord(
        graph6=encode_graph6(g),
        n=n,
        fast_verdict=None if fast is None else fast.reconstructible,
        oracle_verdict=oracle.reconstructible,
        agree=fast is None or fast.reconstructible == oracle.reconstructible,
        witness=None if witness is None else str(witness),
        families_used=() if fast is None else fast.families_used,
        elapsed_us=elapsed,
    )
    return mask, rec


def _run_chunk(args: tuple[int, list[int], str, bool]) -> list[tuple[int, SweepRecord]]:
    n, masks, mode, timing = args
    return [sweep_record(n, m, mode, timing) for m in masks]


def _chunks(masks: list[int], size: int) -> Iterable[list[int]]:
    for i in range(0, len(masks), size):
        yield masks[i : i + size]


def run_sweep(cfg: SweepConfig) -> tuple[list[SweepRecord], SweepSummary]:
    if cfg.n > cfg.effective_bound:
        raise BoundExceeded(
            f"n={cfg.n} exceeds the {cfg.mode} bound {cfg.effective_bound} "
            f"({connected_count(cfg.n)} connected labeled graphs)"
        )
    masks = [m for m, _ in connected_labeled_graphs(cfg.n)]
    tasks = [(cfg.n, c, cfg.mode, cfg.timing) for c in _chunks(masks, cfg.chunk)]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = [r for part in pool.map(_run_chunk, tasks) for r in part]
    else:
        results = [r for t in tasks for r in _run_chunk(t)]
    results.sort(key=lambda mr: mr[0])
    records = [r for _, r in results]
    summary = SweepSummary(
        mode=cfg.mode,
        n=cfg.n,
        total=len(records),
        agree=sum(r.agree for r in records),
        reconstructible=sum(r.oracle_verdict for r in records),
    )
    return records, summary


def write_jsonl(records: Iterable[SweepRecord], summary: SweepSummary, out: IO[str]) -> None:
    for r in records:
        out.write(json.dumps(r.as_json()) + "\n")
    out.write(json.dumps(summary.as_json()) + "\n")
