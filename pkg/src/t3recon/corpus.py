"""Named test graphs and exhaustive enumeration of small labeled graphs."""

from __future__ import annotations

import math
import random
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

from t3recon.graph import LabeledGraph, _trusted, mask_connected


def cycle(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, combinations(range(n), 2))


def star(leaves: int) -> LabeledGraph:
    """Star with centre 0 and leaves ``1..leaves``."""
    return LabeledGraph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel(rim: int) -> LabeledGraph:
    """Rim cycle on ``0..rim-1`` plus hub ``rim``."""
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return LabeledGraph.from_edges(rim + 1, edges)


def complete_multipartite(*sizes: int) -> LabeledGraph:
    """Parts are consecutive id blocks of the given sizes."""
    part_of = [p for p, s in enumerate(sizes) for _ in range(s)]
    n = len(part_of)
    return LabeledGraph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]))


def petersen() -> LabeledGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return LabeledGraph.from_edges(10, outer + spokes + inner)


def prism(m: int) -> LabeledGraph:
    """C_m x K_2; ``prism(4)`` is the cube."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    return LabeledGraph.from_edges(2 * m, edges)


def antiprism(m: int) -> LabeledGraph:
    """4-regular planar; ``antiprism(3)`` is the octahedron, ``antiprism(4)`` the square antiprism."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)] + [(i, m + (i + 1) % m) for i in range(m)]
    return LabeledGraph.from_edges(2 * m, edges)


def hypercube(d: int) -> LabeledGraph:
    n = 1 << d
    return LabeledGraph.from_edges(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)))


def bull() -> LabeledGraph:
    """Triangle 0,1,2 with horns 3 on 1 and 4 on 2."""
    return LabeledGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


def paw() -> LabeledGraph:
    """Triangle 0,1,2 with pendant 3 on 0."""
    return LabeledGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


# ---------------------------------------------------------------- polyhedra

PHI = (1 + math.sqrt(5)) / 2


def _cyclic(p: tuple[float, float, float]) -> list[tuple[float, float, float]]:
    x, y, z = p
    return [(x, y, z), (y, z, x), (z, x, y)]


def _signed(p: tuple[float, ...]) -> list[tuple[float, ...]]:
    out = []
    for signs in product((1, -1), repeat=len(p)):
        q = tuple(s * c for s, c in zip(signs, p))
        if q not in out:
            out.append(q)
    return out


def _all_perms(p: tuple[float, float, float]) -> list[tuple[float, float, float]]:
    out: list[tuple[float, float, float]] = []
    for q in permutations(p):
        if q not in out:
            out.append(q)
    return out


def _from_points(points: list[tuple[float, ...]]) -> LabeledGraph:
    """Unit-distance graph of a vertex-transitive polyhedron: edges join
    pairs at the minimum pairwise distance."""
    pts = []
    for p in points:
        if not any(math.dist(p, q) < 1e-9 for q in pts):
            pts.append(p)
    dmin = min(math.dist(p, q) for p, q in combinations(pts, 2))
    edges = [(i, j) for i, j in combinations(range(len(pts)), 2) if math.dist(pts[i], pts[j]) < dmin * (1 + 1e-6)]
    return LabeledGraph.from_edges(len(pts), edges)


def icosahedron() -> LabeledGraph:
    pts = [q for s in _signed((0, 1, PHI)) for q in _cyclic(s)]
    return _from_points(pts)


def dodecahedron() -> LabeledGraph:
    pts = list(_signed((1, 1, 1)))
    pts += [q for s in _signed((0, 1 / PHI, PHI)) for q in _cyclic(s)]
    return _from_points(pts)


def cuboctahedron() -> LabeledGraph:
    return _from_points([q for s in _signed((1, 1, 0)) for q in _all_perms(s)])


def truncated_octahedron() -> LabeledGraph:
    return _from_points([q for s in _signed((0, 1, 2)) for q in _all_perms(s)])


def truncated_tetrahedron() -> LabeledGraph:
    pts = [q for q in (p for s in _signed((3, 1, 1)) for p in _all_perms(s)) if sum(1 for c in q if c < 0) % 2 == 0]
    return _from_points(pts)


def rhombicuboctahedron() -> LabeledGraph:
    return _from_points([q for s in _signed((1, 1, 1 + math.sqrt(2))) for q in _all_perms(s)])


def icosidodecahedron() -> LabeledGraph:
    pts = [q for s in _signed((0, 0, PHI)) for q in _cyclic(s)]
    pts += [q for s in _signed((0.5, PHI / 2, PHI * PHI / 2)) for q in _cyclic(s)]
    return _from_points(pts)


def snub_cube() -> LabeledGraph:
    """5-regular planar on 24 vertices."""
    t = (1 + (19 + 3 * math.sqrt(33)) ** (1 / 3) + (19 - 3 * math.sqrt(33)) ** (1 / 3)) / 3
    base = (1.0, 1 / t, t)
    even = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    odd = [(1, 0, 2), (0, 2, 1), (2, 1, 0)]
    pts = []
    for signs in product((1, -1), repeat=3):
        plus = sum(1 for s in signs if s > 0)
        for p in even if plus % 2 == 0 else odd:
            pts.append(tuple(signs[i] * base[p[i]] for i in range(3)))
    return _from_points(pts)


# ---------------------------------------------------------------- enumeration


@lru_cache(maxsize=None)
def pair_index(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs in lexicographic order; bit ``i`` of an edge mask is pair ``i``."""
    return tuple(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> LabeledGraph:
    rows = [0] * n
    pairs = pair_index(n)
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        mask ^= low
    return _trusted(n, rows)


def edge_mask(g: LabeledGraph) -> int:
    pos = {p: i for i, p in enumerate(pair_index(g.n))}
    m = 0
    for e in g.edges():
        m |= 1 << pos[e]
    return m


def connected_labeled_graphs(n: int) -> Iterator[tuple[int, LabeledGraph]]:
    """All connected labeled graphs on ``0..n-1`` as ``(edge mask, graph)``,
    in increasing mask order."""
    full = (1 << n) - 1
    pairs = pair_index(n)
    # rows for the low and high halves of the mask are tabulated separately
    half = len(pairs) // 2
    lo_rows = [_rows_of(n, pairs[:half], m) for m in range(1 << half)]
    hi_pairs = pairs[half:]
    lo_mask = (1 << half) - 1
    for hi in range(1 << (len(pairs) - half)):
        hrows = _rows_of(n, hi_pairs, hi)
        for lo in range(1 << half):
            lrows = lo_rows[lo]
            rows = [a | b for a, b in zip(lrows, hrows)]
            if mask_connected(rows, full):
                yield (hi << half) | (lo & lo_mask), _trusted(n, rows)


def _rows_of(n: int, pairs: tuple[tuple[int, int], ...], mask: int) -> list[int]:
    rows = [0] * n
    i = 0
    while mask:
        if mask & 1:
            u, v = pairs[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        mask >>= 1
        i += 1
    return rows


@lru_cache(maxsize=None)
def connected_count(n: int) -> int:
    """Number of connected labeled graphs on n vertices via the standard
    recurrence c(n) = 2^C(n,2) - sum_k C(n-1,k-1) c(k) 2^C(n-k,2)."""
    if n <= 1:
        return 1
    total = 2 ** math.comb(n, 2)
    for k in range(1, n):
        total -= math.comb(n - 1, k - 1) * connected_count(k) * 2 ** math.comb(n - k, 2)
    return total


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> LabeledGraph:
    """G(n, p) conditioned on connectivity by rejection."""
    full = (1 << n) - 1
    while True:
        rows = [0] * n
        for u, v in combinations(range(n), 2):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        if mask_connected(rows, full):
            return _trusted(n, rows)


def random_relabel(g: LabeledGraph, rng: random.Random) -> LabeledGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabeled(perm)
