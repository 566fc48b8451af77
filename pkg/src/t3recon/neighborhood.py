"""Roughly neighbour sets computed from connected triples alone.

For a centre ``v`` the pair graph joins ``a`` and ``b`` whenever ``{a, b, v}``
is a connected triple.  The T3-neighbourhoods of ``v`` are the cliques of
maximum cardinality in that graph; every neighbour set ``N(v)`` is such a
clique candidate, so the maximum cliques are either ``N(v)`` itself, ``N(v)``
plus one outside vertex, or ``N(v)`` with one member swapped out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from t3recon.errors import ClassificationError
from t3recon.graph import LabeledGraph, bits, mask_of
from t3recon.ksets import KSetFamily


@dataclass(frozen=True)
class PairGraph:
    center: int
    aux_adjacency: tuple[int, ...]  # bit rows over all ids; the centre row is 0

    @property
    def vertex_mask(self) -> int:
        return ((1 << len(self.aux_adjacency)) - 1) & ~(1 << self.center)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.aux_adjacency[a] >> b & 1)


def pair_graph(t3: KSetFamily, v: int) -> PairGraph:
    if t3.k != 3:
        raise ValueError(f"pair graphs need a triple family, got k={t3.k}")
    if not 0 <= v < t3.n:
        raise IndexError(f"vertex {v} out of range for n={t3.n}")
    return PairGraph(v, t3.pair_rows[v])


def maximum_cliques(rows: tuple[int, ...], candidates: int) -> list[int]:
    """All maximum-cardinality cliques (as bitmasks) of the graph with bit rows
    ``rows`` restricted to the vertex mask ``candidates``.

    Pivoting Bron-Kerbosch, pruning branches that cannot reach the best size.
    Singletons count as cliques, and the empty set is returned for an empty
    vertex set.
    """
    best = 0
    found: list[int] = []

    def expand(r: int, size: int, p: int, x: int) -> None:
        nonlocal best, found
        if not p:
            if not x:
                if size > best:
                    best, found = size, [r]
                elif size == best:
                    found.append(r)
            return
        if size + p.bit_count() < best:
            return
        pu = p | x
        pivot, most = 0, -1
        while pu:
            low = pu & -pu
            u = low.bit_length() - 1
            c = (rows[u] & p).bit_count()
            if c > most:
                pivot, most = u, c
            pu ^= low
        todo = p & ~rows[pivot]
        while todo:
            low = todo & -todo
            w = low.bit_length() - 1
            expand(r | low, size + 1, p & rows[w], x & rows[w])
            p ^= low
            x |= low
            todo ^= low

    if candidates == 0:
        return [0]
    expand(0, 0, candidates, 0)
    return sorted(found, key=lambda m: tuple(bits(m)))


@dataclass(frozen=True)
class NeighborhoodFamily:
    center: int
    elements: tuple[frozenset[int], ...]
    cardinality: int
    edgeless: bool = False  # pair graph without edges: elements are singletons

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.elements)


def t3_neighborhoods(t3: KSetFamily, v: int) -> NeighborhoodFamily:
    pg = pair_graph(t3, v)
    rows = pg.aux_adjacency
    cands = pg.vertex_mask
    cliques = maximum_cliques(rows, cands)
    return NeighborhoodFamily(
        center=v,
        elements=tuple(frozenset(bits(c)) for c in cliques),
        cardinality=cliques[0].bit_count(),
        edgeless=not any(rows),
    )


def all_neighborhoods(t3: KSetFamily) -> list[NeighborhoodFamily]:
    return [t3_neighborhoods(t3, v) for v in range(t3.n)]


class Scenario(enum.Enum):
    SINGLE_EXACT = "single-exact"
    SINGLE_PLUS_W = "single-plus-w"
    ALL_PLUS_W = "all-plus-w"
    EXACT_PLUS_SWAPS = "exact-plus-swaps"


@dataclass(frozen=True)
class NeighborhoodScenario:
    tag: Scenario
    witness: tuple[int, ...] = ()
    swaps: tuple[tuple[int, int], ...] = ()  # (dropped neighbour, added vertex)


def classify_neighborhoods(fam: NeighborhoodFamily, g: LabeledGraph) -> NeighborhoodScenario:
    """Which shape the family takes relative to the true neighbour set.

    Diagnostic aid: consults ``g``.  Raises ClassificationError when no shape
    fits.
    """
    v = fam.center
    nv = g.rows[v]
    closed = nv | 1 << v
    masks = fam.masks

    def plus_w(m: int) -> int | None:
        # m == N(v) + {w} with w outside N[v] adjacent to all of N(v)
        if m & nv != nv:
            return None
        extra = m & ~nv
        if extra.bit_count() != 1 or extra & closed:
            return None
        w = extra.bit_length() - 1
        return w if g.rows[w] & nv == nv else None

    if len(masks) == 1:
        if masks[0] == nv:
            return NeighborhoodScenario(Scenario.SINGLE_EXACT)
        w = plus_w(masks[0])
        if w is not None:
            return NeighborhoodScenario(Scenario.SINGLE_PLUS_W, (w,))
        raise ClassificationError(f"vertex {v}: single element fits no shape", fam.elements[0])

    ws = [plus_w(m) for m in masks]
    if all(w is not None for w in ws):
        return NeighborhoodScenario(Scenario.ALL_PLUS_W, tuple(sorted(ws)))  # type: ignore[arg-type]
    if nv in masks:
        swaps = []
        for m, elem in zip(masks, fam.elements):
            if m == nv:
                continue
            dropped, added = nv & ~m, m & ~nv
            if dropped.bit_count() != 1 or added.bit_count() != 1 or added & closed:
                raise ClassificationError(f"vertex {v}: element is not a single swap of N(v)", elem)
            w = added.bit_length() - 1
            if g.rows[w] & (nv & ~dropped) != nv & ~dropped:
                raise ClassificationError(f"vertex {v}: swapped-in vertex {w} misses part of N(v)", elem)
            swaps.append((dropped.bit_length() - 1, w))
        return NeighborhoodScenario(Scenario.EXACT_PLUS_SWAPS, swaps=tuple(sorted(swaps)))
    bad = next(e for e, w in zip(fam.elements, ws) if w is None)
    raise ClassificationError(f"vertex {v}: mixed element shapes without N(v)", bad)
