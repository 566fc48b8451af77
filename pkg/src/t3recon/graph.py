"""Labeled simple graphs on vertex ids ``0..n-1`` stored as adjacency bit rows.

Row ``v`` is an int whose bit ``u`` is set iff ``uv`` is an edge.  Graphs are
immutable; labels matter, so two graphs differing by a relabeling compare
unequal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from t3recon.errors import GraphFormatError, UnsupportedSizeError

MAX_N = 62


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def reach(rows: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def mask_connected(rows: Sequence[int], allowed: int) -> bool:
    """True iff the subgraph induced by the vertex mask ``allowed`` is connected."""
    if allowed == 0:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return reach(rows, start, allowed) == allowed


@dataclass(frozen=True, slots=True)
class LabeledGraph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise UnsupportedSizeError(f"n={self.n} outside supported range 0..{MAX_N}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly n adjacency rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "LabeledGraph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def complement(self) -> "LabeledGraph":
        full = (1 << self.n) - 1
        return LabeledGraph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def toggled(self, u: int, v: int) -> "LabeledGraph":
        """Copy with the pair ``uv`` flipped between edge and non-edge."""
        rows = list(self.rows)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return LabeledGraph(self.n, tuple(rows))

    def relabeled(self, perm: Sequence[int]) -> "LabeledGraph":
        """Image of the graph under ``v -> perm[v]``."""
        return LabeledGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, edges={self.edges()})"


def _trusted(n: int, rows: Sequence[int]) -> LabeledGraph:
    # Skips validation; callers guarantee a symmetric loop-free row set.
    g = object.__new__(LabeledGraph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "rows", tuple(rows))
    return g


# ---------------------------------------------------------------- codecs


def encode_graph6(g: LabeledGraph) -> str:
    if g.n > MAX_N:
        raise UnsupportedSizeError(f"graph6 single-byte size supports n <= {MAX_N}")
    out = [chr(g.n + 63)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> LabeledGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphFormatError("empty graph6 string", offset=0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range [63,126]", offset=pos)
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise UnsupportedSizeError(f"graph6 multi-byte sizes (n > {MAX_N}) are not supported")
    npairs = n * (n - 1) // 2
    nchars = -(-npairs // 6)
    if len(s) != 1 + nchars:
        raise GraphFormatError(f"expected {1 + nchars} characters for n={n}, got {len(s)}", offset=len(s))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = nchars * 6 - npairs
    if pad and (ord(s[-1]) - 63) & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", offset=len(s) - 1)
    return _trusted(n, rows)


def parse_edge_list(text: str) -> LabeledGraph:
    lines = text.splitlines()
    header_idx = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if header_idx is None:
        raise GraphFormatError("empty edge list", line=1)
    header = lines[header_idx].strip()
    if not header.startswith("n="):
        raise GraphFormatError("first line must be 'n=<int>'", line=header_idx + 1)
    try:
        n = int(header[2:])
    except ValueError:
        raise GraphFormatError(f"bad vertex count {header[2:]!r}", line=header_idx + 1) from None
    if not 0 <= n <= MAX_N:
        raise UnsupportedSizeError(f"n={n} outside supported range 0..{MAX_N}")
    rows = [0] * n
    for lineno, raw in enumerate(lines[header_idx + 1 :], start=header_idx + 2):
        ln = raw.strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {ln!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {ln!r}", line=lineno) from None
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range in {ln!r}", line=lineno)
        if u > v:
            raise GraphFormatError(f"edge must be written with u < v: {ln!r}", line=lineno)
        if rows[u] >> v & 1:
            raise GraphFormatError(f"duplicate edge {u} {v}", line=lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _trusted(n, rows)


def format_edge_list(g: LabeledGraph) -> str:
    return "\n".join([f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# ---------------------------------------------------------------- structure


def induced_subgraph(g: LabeledGraph, vertices: Iterable[int]) -> tuple[LabeledGraph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``, relabeled densely by ascending id.

    Returns the graph and the map ``new id -> original id``.
    """
    ids = tuple(sorted(set(vertices)))
    for v in ids:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(ids)}
    rows = []
    for v in ids:
        r = 0
        for u in bits(g.rows[v]):
            if u in pos:
                r |= 1 << pos[u]
        rows.append(r)
    return _trusted(len(ids), rows), ids


def is_connected(g: LabeledGraph) -> bool:
    return mask_connected(g.rows, (1 << g.n) - 1)


def vertex_connectivity(g: LabeledGraph) -> int:
    """Smallest number of vertices whose deletion disconnects ``g``.

    ``n - 1`` for complete graphs, 0 for disconnected input.  Direct search
    over deletion sets of increasing size, which is fine at desk scale.
    """
    n = g.n
    full = (1 << n) - 1
    if not mask_connected(g.rows, full):
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return max(n - 1, 0)
    # a non-complete graph has a separator of size <= n - 2
    for size in range(1, n - 1):
        for cut in combinations(range(n), size):
            if not mask_connected(g.rows, full & ~mask_of(cut)):
                return size
    raise AssertionError("unreachable: non-complete graph without a separator")


def triangle_free(g: LabeledGraph) -> bool:
    return not any(g.rows[u] & g.rows[v] for u, v in g.edges())


def is_planar(g: LabeledGraph) -> bool:
    # exact left-right planarity test
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.check_planarity(h)[0]


def is_eulerian(g: LabeledGraph) -> bool:
    return is_connected(g) and all(d % 2 == 0 for d in g.degrees())


def is_hamiltonian(g: LabeledGraph) -> bool:
    """Backtracking search for a Hamiltonian cycle (False for n < 3)."""
    n = g.n
    if n < 3 or not is_connected(g) or min(g.degrees()) < 2:
        return False
    full = (1 << n) - 1
    rows = g.rows

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(rows[v] & 1)
        rest = full & ~visited
        # every unvisited vertex needs a way in and a way out
        ends = rest | 1 | 1 << v
        for w in bits(rest):
            if (rows[w] & ends).bit_count() < 2:
                return False
        for w in bits(rows[v] & rest):
            if extend(w, visited | 1 << w):
                return True
        return False

    return extend(0, 1)


def regular_degree(g: LabeledGraph) -> int | None:
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


@dataclass(frozen=True)
class SrgParams:
    v_count: int
    k_degree: int
    lambda_adj: int
    u_nonadj: int

    def __post_init__(self) -> None:
        if not (self.k_degree < self.v_count and self.lambda_adj <= self.k_degree - 1 and self.u_nonadj <= self.k_degree):
            raise ValueError(f"inconsistent strongly regular parameters {self}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v_count, self.k_degree, self.lambda_adj, self.u_nonadj)


def srg_parameters(g: LabeledGraph) -> SrgParams | None:
    """Parameters ``(v, k, lambda, mu)`` if ``g`` is strongly regular.

    Complete and edgeless graphs are rejected: one of the two common-neighbour
    counts would be undefined.
    """
    k = regular_degree(g)
    if k is None or g.n < 3 or k == 0 or k == g.n - 1:
        return None
    lam: set[int] = set()
    mu: set[int] = set()
    for u, v in combinations(range(g.n), 2):
        c = (g.rows[u] & g.rows[v]).bit_count()
        (lam if g.has_edge(u, v) else mu).add(c)
    if len(lam) != 1 or len(mu) != 1:
        return None
    return SrgParams(g.n, k, lam.pop(), mu.pop())


def multipartite_parts(g: LabeledGraph) -> tuple[frozenset[int], ...] | None:
    """Parts of ``g`` when it is complete multipartite, i.e. its complement is a
    disjoint union of cliques; None otherwise (and for n < 2)."""
    if g.n < 2:
        return None
    comp = g.complement()
    parts = []
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        block = comp.rows[v] | 1 << v
        for u in bits(block):
            if (comp.rows[u] | 1 << u) != block:
                return None
        seen |= block
        parts.append(frozenset(bits(block)))
    return tuple(parts) if len(parts) >= 2 else None


@dataclass(frozen=True)
class ClassProfile:
    connected: bool
    kappa: int
    regular_degree: int | None
    triangle_free: bool
    planar: bool
    eulerian: bool
    hamiltonian: bool | None
    srg: SrgParams | None
    multipartite_parts: tuple[frozenset[int], ...] | None

    def as_json(self) -> dict:
        return {
            "connected": self.connected,
            "kappa": self.kappa,
            "regular_degree": self.regular_degree,
            "triangle_free": self.triangle_free,
            "planar": self.planar,
            "eulerian": self.eulerian,
            "hamiltonian": self.hamiltonian,
            "srg": list(self.srg.as_tuple()) if self.srg else None,
            "multipartite_parts": [sorted(p) for p in self.multipartite_parts] if self.multipartite_parts else None,
        }


def graph_profile(g: LabeledGraph, hamiltonian_bound: int = 12) -> ClassProfile:
    return ClassProfile(
        connected=is_connected(g),
        kappa=vertex_connectivity(g),
        regular_degree=regular_degree(g),
        triangle_free=triangle_free(g),
        planar=is_planar(g),
        eulerian=is_eulerian(g),
        hamiltonian=is_hamiltonian(g) if g.n <= hamiltonian_bound else None,
        srg=srg_parameters(g),
        multipartite_parts=multipartite_parts(g),
    )
