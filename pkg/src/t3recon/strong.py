"""Strong T3-reconstructibility.

Two independent routes decide whether a connected labeled graph is the only
connected graph with its connected triples:

* the oracle enumerates every realization of the triple family by
  backtracking over candidate edges;
* the fast check tests twin-freeness plus a local certificate (an induced
  copy of one of the necessity patterns) for every edge lying in a triangle.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from t3recon.errors import BoundExceeded
from t3recon.graph import (
    LabeledGraph,
    _trusted,
    encode_graph6,
    is_connected,
    is_eulerian,
    is_hamiltonian,
    is_planar,
    mask_connected,
    regular_degree,
    triangle_free,
    vertex_connectivity,
)
from t3recon.ksets import KSetFamily, connected_ksets

# ---------------------------------------------------------------- patterns


@dataclass(frozen=True)
class FamilyPattern:
    """Induced-subgraph pattern forcing its highlighted edge to be necessary.

    Local ids: 0 = u, 1 = v (the highlighted edge), 2 = v1, 3 = v2, 4 = v3.
    """

    family_id: str
    vertex_count: int
    required_edges: tuple[tuple[int, int], ...]
    forbidden_edges: tuple[tuple[int, int], ...]
    optional_edges: tuple[tuple[int, int], ...]
    highlighted_edge: tuple[int, int] = (0, 1)

    def __post_init__(self) -> None:
        lists = (self.required_edges, self.forbidden_edges, self.optional_edges)
        seen = [p for lst in lists for p in lst]
        allpairs = set(combinations(range(self.vertex_count), 2))
        if len(seen) != len(set(seen)) or set(seen) != allpairs:
            raise ValueError(f"{self.family_id}: edge lists must partition all local pairs")
        if self.highlighted_edge not in self.required_edges:
            raise ValueError(f"{self.family_id}: highlighted edge must be required")

    def completions(self) -> Iterator[LabeledGraph]:
        """Every concrete graph the pattern allows (each optional edge on or off)."""
        opt = self.optional_edges
        for m in range(1 << len(opt)):
            extra = [e for i, e in enumerate(opt) if m >> i & 1]
            yield LabeledGraph.from_edges(self.vertex_count, list(self.required_edges) + extra)


def _pattern(fid: str, k: int, required: Iterable[tuple[int, int]], optional: Iterable[tuple[int, int]] = ()) -> FamilyPattern:
    req = tuple(sorted(tuple(sorted(e)) for e in required))
    opt = tuple(sorted(tuple(sorted(e)) for e in optional))
    forb = tuple(p for p in combinations(range(k), 2) if p not in req and p not in opt)
    return FamilyPattern(fid, k, req, forb, opt)


U, V, V1, V2, V3 = range(5)

FAMILIES: tuple[FamilyPattern, ...] = (
    # triangle u v v2, pendant v1 on u
    _pattern("F1", 4, [(U, V), (U, V2), (V, V2), (U, V1)]),
    # star centred at v with leaves u, v1, v2
    _pattern("F2", 4, [(U, V), (V, V1), (V, V2)], [(V1, V2)]),
    # 4-cycle v2-u-v-v3, pendant v1 on v2
    _pattern("F3", 5, [(V2, U), (U, V), (V, V3), (V3, V2), (V2, V1)], [(U, V3)]),
    # path u-v-v1, with v1 also joined to v2 and v3
    _pattern("F4", 5, [(U, V), (V, V1), (V1, V2), (V1, V3)], [(V2, V3)]),
    # induced path v-u-v3-v2-v1, highlighted edge at the end
    _pattern("F5", 5, [(V, U), (U, V3), (V3, V2), (V2, V1)]),
    # 5-cycle v2-v1-u-v-v3
    _pattern("F6", 5, [(V2, V1), (V1, U), (U, V), (V, V3), (V3, V2)], [(V1, V3)]),
    # induced path v1-u-v-v2, highlighted edge in the middle
    _pattern("F7", 4, [(V1, U), (U, V), (V, V2)]),
)


@dataclass(frozen=True)
class FamilyMatch:
    family_id: str
    mapping: tuple[int, ...]  # local id -> graph vertex


def _embed(g: LabeledGraph, pat: FamilyPattern, hu: int, hv: int) -> tuple[int, ...] | None:
    k = pat.vertex_count
    req = [0] * k
    forb = [0] * k
    for a, b in pat.required_edges:
        req[b] |= 1 << a
    for a, b in pat.forbidden_edges:
        forb[b] |= 1 << a
    rows = g.rows
    mapping = [hu, hv] + [-1] * (k - 2)

    def images(local: int) -> int:
        m = 0
        for s in range(k):
            if local >> s & 1:
                m |= 1 << mapping[s]
        return m

    def extend(t: int, used: int) -> bool:
        if t == k:
            return True
        need, avoid = images(req[t]), images(forb[t])
        for x in range(g.n):
            if used >> x & 1:
                continue
            if rows[x] & need == need and not rows[x] & avoid:
                mapping[t] = x
                if extend(t + 1, used | 1 << x):
                    return True
        mapping[t] = -1
        return False

    # pair (u, v) itself: required edge, already checked by the caller
    return tuple(mapping) if extend(2, 1 << hu | 1 << hv) else None


def match_family(
    g: LabeledGraph, u: int, v: int, families: Sequence[FamilyPattern] = FAMILIES
) -> FamilyMatch | None:
    """First pattern (in family order) with an induced copy whose highlighted
    edge lands on ``uv``; the lexicographically least mapping is returned."""
    if not g.has_edge(u, v):
        return None
    for pat in families:
        for hu, hv in sorted([(u, v), (v, u)]):
            m = _embed(g, pat, hu, hv)
            if m is not None:
                return FamilyMatch(pat.family_id, m)
    return None


# ---------------------------------------------------------------- realizations


def candidate_edges(t3: KSetFamily) -> list[tuple[int, int]]:
    """Pairs co-occurring in some triple; every realization's edges lie here."""
    if t3.k != 3:
        raise ValueError("candidate edges need a triple family")
    pairs = set()
    for a, b, c in t3.sets:
        pairs.update(((a, b), (a, c), (b, c)))
    return sorted(pairs)


@dataclass(frozen=True)
class RealizationSet:
    input: KSetFamily
    realizations: tuple[LabeledGraph, ...]
    truncated: bool


def _search(t3: KSetFamily, absent: Iterable[tuple[int, int]] = ()) -> Iterator[LabeledGraph]:
    """Backtracking over candidate edges (lexicographic, absent before present)
    keeping every decided triple consistent with membership in ``t3``.

    Pairs listed in ``absent`` are forced to be non-edges.
    """
    n = t3.n
    cands = candidate_edges(t3)
    index = {p: i for i, p in enumerate(cands)}
    m = len(cands)
    members = t3.masks
    forced = {index[tuple(sorted(p))] for p in absent if tuple(sorted(p)) in index}
    # for each candidate: (is member, index of the two other pairs or -1)
    touching: list[list[tuple[bool, int, int]]] = [[] for _ in range(m)]
    for a, b, c in combinations(range(n), 3):
        ids = (index.get((a, b), -1), index.get((a, c), -1), index.get((b, c), -1))
        if ids == (-1, -1, -1):
            continue
        member = (1 << a | 1 << b | 1 << c) in members
        for pos in range(3):
            if ids[pos] >= 0:
                others = [ids[q] for q in range(3) if q != pos]
                touching[ids[pos]].append((member, others[0], others[1]))

    dec = [-1] * m

    def consistent(i: int, val: int) -> bool:
        for member, j, l in touching[i]:
            dj = dec[j] if j >= 0 else 0
            dl = dec[l] if l >= 0 else 0
            if member:
                if (val == 0) + (dj == 0) + (dl == 0) >= 2:
                    return False
            elif val + (dj == 1) + (dl == 1) >= 2:
                return False
        return True

    choice = [-1] * (m + 1)
    full = (1 << n) - 1
    i = 0
    while i >= 0:
        if i == m:
            rows = [0] * n
            for p, d in zip(cands, dec):
                if d == 1:
                    rows[p[0]] |= 1 << p[1]
                    rows[p[1]] |= 1 << p[0]
            if mask_connected(rows, full):
                yield _trusted(n, rows)
            i -= 1
            continue
        val = choice[i] + 1
        top = 0 if i in forced else 1
        while val <= top and not consistent(i, val):
            val += 1
        if val <= top:
            choice[i] = val
            dec[i] = val
            i += 1
            choice[i] = -1
        else:
            choice[i] = -1
            dec[i] = -1
            i -= 1


def enumerate_realizations(t3: KSetFamily, limit: int = 1000) -> RealizationSet:
    """Connected graphs whose triple family equals ``t3``, at most ``limit``
    of them, sorted by graph6; ``truncated`` is set when more exist."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if t3.n < 3 or not t3.sets:
        raise ValueError("need a nonempty triple family on n >= 3 vertices")
    found = []
    for h in _search(t3):
        found.append(h)
        if len(found) > limit:
            break
    truncated = len(found) > limit
    return RealizationSet(t3, tuple(sorted(found[:limit], key=encode_graph6)), truncated)


def is_edge_necessary(g: LabeledGraph, u: int, v: int) -> bool:
    """True iff every connected graph with the same triples contains ``uv``."""
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    if g.n < 3:
        return True
    t3 = connected_ksets(g, 3)
    return next(_search(t3, absent=[(u, v)]), None) is None


def twin_pair(g: LabeledGraph) -> tuple[int, int] | None:
    """Lexicographically least pair with N(a) - {b} == N(b) - {a}."""
    rows = g.rows
    for a, b in combinations(range(g.n), 2):
        if rows[a] & ~(1 << b) == rows[b] & ~(1 << a):
            return (a, b)
    return None


# ---------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class Witness:
    kind: str  # "twin", "unmatched-edge", "twin-nonadjacent" or "realization"
    vertices: tuple[int, ...] = ()
    graph6: str | None = None

    def __str__(self) -> str:
        if self.graph6 is not None:
            return f"{self.kind}:{self.graph6}"
        return f"{self.kind}:" + ",".join(map(str, self.vertices))


@dataclass(frozen=True)
class Verdict:
    reconstructible: bool
    method: str
    witness: Witness | None = None
    families_used: tuple[str, ...] = ()


def check_strong_oracle(g: LabeledGraph) -> Verdict:
    if not is_connected(g):
        raise ValueError("strong reconstructibility is defined for connected graphs")
    if g.n < 3:
        return Verdict(True, "oracle")
    rs = enumerate_realizations(connected_ksets(g, 3), limit=2)
    if rs.realizations == (g,):
        return Verdict(True, "oracle")
    other = next(h for h in rs.realizations if h != g)
    return Verdict(False, "oracle", Witness("realization", graph6=encode_graph6(other)))


def check_strong_fast(g: LabeledGraph) -> Verdict:
    """Twin-freeness plus a pattern certificate for every triangle edge.

    Edges in no triangle need no certificate once the graph is twin-free.
    Below five vertices the characterization does not apply and the oracle
    answers instead.
    """
    if not is_connected(g):
        raise ValueError("strong reconstructibility is defined for connected graphs")
    if g.n < 5:
        return Verdict(check_strong_oracle(g).reconstructible, "oracle-fallback")
    tw = twin_pair(g)
    if tw is not None:
        return Verdict(False, "fast", Witness("twin", tw))
    used = set()
    rows = g.rows
    for u, v in g.edges():
        if not rows[u] & rows[v]:
            continue
        fm = match_family(g, u, v)
        if fm is None:
            return Verdict(False, "fast", Witness("unmatched-edge", (u, v)), tuple(sorted(used)))
        used.add(fm.family_id)
    return Verdict(True, "fast", families_used=tuple(sorted(used)))


def check_strong_trianglefree(g: LabeledGraph) -> Verdict:
    if not triangle_free(g):
        raise ValueError("graph has a triangle")
    if not is_connected(g) or g.n < 5:
        raise ValueError("needs a connected graph on at least 5 vertices")
    rows = g.rows
    for a, b in combinations(range(g.n), 2):
        if not rows[a] >> b & 1 and rows[a] == rows[b]:
            return Verdict(False, "triangle-free", Witness("twin-nonadjacent", (a, b)))
    return Verdict(True, "triangle-free")


# ---------------------------------------------------------------- twin search

PREDICATES: dict[str, Callable[[LabeledGraph], bool]] = {
    "hamiltonian": is_hamiltonian,
    "eulerian": is_eulerian,
    "planar": is_planar,
    "triangle-free": triangle_free,
    "regular": lambda g: regular_degree(g) is not None,
}


def resolve_predicate(name: str) -> Callable[[LabeledGraph], bool]:
    """Named class predicate; ``<k>-connected`` is accepted for any k."""
    if name in PREDICATES:
        return PREDICATES[name]
    if name.endswith("-connected") and name[: -len("-connected")].isdigit():
        k = int(name[: -len("-connected")])
        return lambda g: vertex_connectivity(g) >= k
    raise ValueError(f"unknown class predicate {name!r}; known: {sorted(PREDICATES)} or <k>-connected")


def find_twin_graphs(
    n: int,
    class_filter: Iterable[str | Callable[[LabeledGraph], bool]] = (),
    bound: int = 8,
) -> list[tuple[LabeledGraph, LabeledGraph]]:
    """All pairs of distinct connected labeled graphs of order ``n`` that pass
    every predicate and share their connected triples."""
    from t3recon.corpus import connected_labeled_graphs, connected_count

    if n > bound:
        raise BoundExceeded(
            f"n={n} exceeds the sweep bound {bound}: it would scan {connected_count(n)} connected labeled graphs"
        )
    preds = [resolve_predicate(p) if isinstance(p, str) else p for p in class_filter]
    groups: dict[frozenset[int], list[LabeledGraph]] = defaultdict(list)
    for _, g in connected_labeled_graphs(n):
        if all(p(g) for p in preds):
            key = connected_ksets(g, 3).masks if n >= 3 else frozenset()
            groups[key].append(g)
    pairs = []
    for members in groups.values():
        pairs.extend(combinations(members, 2))
    return pairs
