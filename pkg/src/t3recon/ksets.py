"""Connected k-sets T_k(G), lifting, complements, glued sets and the recovery
of vertex connectivity from T_k alone.

A family is kept in canonical form: each set as an ascending tuple, the
collection sorted lexicographically.  Membership queries go through a cached
set of bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from t3recon.errors import GraphFormatError
from t3recon.graph import LabeledGraph, bits, mask_connected, mask_of


@dataclass(frozen=True)
class KSetFamily:
    n: int
    k: int
    sets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "KSetFamily":
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        canon = set()
        for s in sets:
            t = tuple(sorted(s))
            if len(t) != k or len(set(t)) != k:
                raise ValueError(f"{t} is not a set of {k} distinct ids")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"{t} has ids outside 0..{n - 1}")
            if t in canon:
                raise ValueError(f"duplicate set {t}")
            canon.add(t)
        return cls(n, k, tuple(sorted(canon)))

    @cached_property
    def masks(self) -> frozenset[int]:
        return frozenset(mask_of(s) for s in self.sets)

    @cached_property
    def pair_rows(self) -> tuple[tuple[int, ...], ...]:
        """For triples: ``pair_rows[v][a]`` has bit ``b`` set iff ``{a, b, v}`` is a member."""
        if self.k != 3:
            raise ValueError("pair rows are defined for triple families only")
        rows = [[0] * self.n for _ in range(self.n)]
        for a, b, c in self.sets:
            rows[a][b] |= 1 << c
            rows[a][c] |= 1 << b
            rows[b][a] |= 1 << c
            rows[b][c] |= 1 << a
            rows[c][a] |= 1 << b
            rows[c][b] |= 1 << a
        return tuple(tuple(r) for r in rows)

    def __contains__(self, item: Iterable[int]) -> bool:
        return mask_of(item) in self.masks

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.sets)


@dataclass(frozen=True)
class GluedSet:
    vertices: frozenset[int]
    member_count: int


@lru_cache(maxsize=64)
def _subsets(n: int, k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((c, mask_of(c)) for c in combinations(range(n), k))


def connected_ksets(g: LabeledGraph, k: int) -> KSetFamily:
    """All k-subsets inducing a connected subgraph of ``g``."""
    if not 2 <= k <= g.n:
        raise ValueError(f"k={k} outside 2..n={g.n}")
    rows = g.rows
    if k == 3:
        # a triple is connected iff it spans at least two edges
        sets = tuple(
            t
            for t, _ in _subsets(g.n, 3)
            if (rows[t[0]] >> t[1] & 1) + (rows[t[0]] >> t[2] & 1) + (rows[t[1]] >> t[2] & 1) >= 2
        )
    else:
        sets = tuple(t for t, m in _subsets(g.n, k) if mask_connected(rows, m))
    return KSetFamily(g.n, k, sets)


def lift_ksets(family: KSetFamily) -> KSetFamily:
    """Connected (k+1)-sets determined from connected k-sets.

    A (k+1)-set is kept iff at least two of its k-subsets are members.
    """
    if family.k >= family.n:
        raise ValueError(f"cannot lift k={family.k} family on n={family.n} vertices")
    members = family.masks
    out = []
    for t, m in _subsets(family.n, family.k + 1):
        hits = 0
        for v in t:
            if m ^ (1 << v) in members:
                hits += 1
                if hits == 2:
                    out.append(t)
                    break
    return KSetFamily(family.n, family.k + 1, tuple(out))


def complement_ksets(family: KSetFamily) -> KSetFamily:
    members = family.masks
    return KSetFamily(family.n, family.k, tuple(t for t, m in _subsets(family.n, family.k) if m not in members))


def _glue(masks: Iterable[int]) -> list[tuple[int, int]]:
    """Components of the intersection graph of ``masks`` as (union, count)."""
    comps: list[list[int]] = []  # [union mask, member count]
    for m in masks:
        merged = [m, 1]
        keep = []
        for c in comps:
            if c[0] & merged[0]:
                merged[0] |= c[0]
                merged[1] += c[1]
            else:
                keep.append(c)
        keep.append(merged)
        comps = keep
    return [(u, c) for u, c in comps]


def _glued_from(masks: list[int]) -> int:
    """Union of the glued component containing ``masks[0]``."""
    union = masks[0]
    grown = True
    while grown:
        grown = False
        for m in masks:
            if m & union and m & ~union:
                union |= m
                grown = True
    return union


def maximal_glued_sets(family: KSetFamily) -> list[GluedSet]:
    """Vertex unions of the connected components of the intersection graph
    (two k-sets adjacent iff they share a vertex), sorted by minimum vertex."""
    comps = _glue(mask_of(s) for s in family.sets)
    comps.sort(key=lambda uc: (uc[0] & -uc[0]))
    return [GluedSet(frozenset(bits(u)), c) for u, c in comps]


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    exact: bool
    separator: tuple[int, ...] | None = None


def connectivity_from_ksets(family: KSetFamily) -> ConnectivityResult:
    """Vertex connectivity recovered from T_k alone.

    For j = 1, 2, ... every j-subset S is deleted (together with all members
    meeting S) and the remainder is tested for a glued set covering all
    ``n - j`` surviving vertices.  The first j with a failing S is the
    connectivity.  Exactness needs ``k <= n - kappa``; when no separator of
    size up to ``n - k`` shows up the result is ``n - k`` with ``exact=False``.
    """
    if not family.sets:
        raise ValueError("empty k-set family")
    n, k = family.n, family.k
    masks = sorted(family.masks)
    full = (1 << n) - 1
    for j in range(1, n - k + 1):
        for cut in combinations(range(n), j):
            cm = mask_of(cut)
            rest = [m for m in masks if not m & cm]
            # glued components have disjoint unions, so a spanning one
            # must contain the first surviving member
            if not rest or _glued_from(rest) != full & ~cm:
                return ConnectivityResult(j, True, cut)
    return ConnectivityResult(n - k, False)


# ---------------------------------------------------------------- file format


def format_ksets(family: KSetFamily) -> str:
    lines = [f"n={family.n} k={family.k}"]
    lines += [" ".join(map(str, s)) for s in family.sets]
    return "\n".join(lines) + "\n"


def parse_ksets(text: str) -> KSetFamily:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphFormatError("missing 'n=<n> k=<k>' header", line=1)
    try:
        fields = dict(tok.split("=", 1) for tok in lines[0].split())
        n, k = int(fields["n"]), int(fields["k"])
    except (ValueError, KeyError):
        raise GraphFormatError(f"bad header {lines[0]!r}", line=1) from None
    sets = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        try:
            s = tuple(int(x) for x in raw.split())
        except ValueError:
            raise GraphFormatError(f"non-integer id in {raw!r}", line=lineno) from None
        if len(s) != k or len(set(s)) != k or min(s) < 0 or max(s) >= n:
            raise GraphFormatError(f"expected {k} distinct ids in 0..{n - 1}: {raw!r}", line=lineno)
        sets.append(s)
    try:
        return KSetFamily.from_sets(n, k, sets)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
