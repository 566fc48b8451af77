"""Reconstruction of a graph from its connected triples (or k-sets) given the
promise that it belongs to a known class.

Every reconstructor recomputes the k-set family of its output and raises
PromiseViolation on mismatch, so a false promise never returns a graph
silently.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from t3recon.errors import PromiseViolation
from t3recon.graph import LabeledGraph, bits, is_connected, is_planar, regular_degree, srg_parameters
from t3recon.ksets import KSetFamily, complement_ksets, connected_ksets, maximal_glued_sets
from t3recon.neighborhood import t3_neighborhoods


def _require_triples(t3: KSetFamily) -> None:
    if t3.k != 3:
        raise ValueError(f"expected a triple family, got k={t3.k}")


def _verify(g: LabeledGraph, family: KSetFamily, what: str) -> LabeledGraph:
    if connected_ksets(g, family.k) != family:
        raise PromiseViolation(f"{what}: reconstructed graph does not reproduce the input family")
    return g


def _pair_counts(t3: KSetFamily) -> Counter[tuple[int, int]]:
    counts: Counter[tuple[int, int]] = Counter()
    for a, b, c in t3.sets:
        counts[(a, b)] += 1
        counts[(a, c)] += 1
        counts[(b, c)] += 1
    return counts


def reconstruct_cycle(t3: KSetFamily) -> LabeledGraph:
    """Cycle edges are exactly the pairs lying in two triples (n >= 5)."""
    _require_triples(t3)
    if t3.n < 5:
        raise PromiseViolation(f"cycle reconstruction needs n >= 5, got n={t3.n}")
    edges = [p for p, c in _pair_counts(t3).items() if c == 2]
    g = LabeledGraph.from_edges(t3.n, edges)
    if regular_degree(g) != 2 or not is_connected(g):
        raise PromiseViolation("triples do not come from a cycle")
    return _verify(g, t3, "cycle")


def reconstruct_wheel(t3: KSetFamily) -> LabeledGraph:
    """The hub lies in C(l, 2) triples; the rest is a cycle."""
    _require_triples(t3)
    n = t3.n
    rim = n - 1
    if rim < 5:
        raise PromiseViolation(f"wheel reconstruction needs rim >= 5, got n={n}")
    per_vertex = Counter(v for s in t3.sets for v in s)
    hubs = [v for v in range(n) if per_vertex[v] == comb(rim, 2)]
    if len(hubs) != 1:
        raise PromiseViolation(f"expected exactly one vertex in {comb(rim, 2)} triples, found {len(hubs)}")
    hub = hubs[0]
    ids = [v for v in range(n) if v != hub]
    pos = {v: i for i, v in enumerate(ids)}
    rim_family = KSetFamily.from_sets(rim, 3, ([pos[x] for x in s] for s in t3.sets if hub not in s))
    cyc = reconstruct_cycle(rim_family)
    edges = [(ids[a], ids[b]) for a, b in cyc.edges()] + [(hub, v) for v in ids]
    return _verify(LabeledGraph.from_edges(n, edges), t3, "wheel")


def reconstruct_multipartite(family: KSetFamily) -> LabeledGraph:
    """Parts are the maximal glued sets of the disconnected k-sets."""
    parts = [gs.vertices for gs in maximal_glued_sets(complement_ksets(family))]
    covered = set().union(*parts) if parts else set()
    if len(parts) < 3:
        raise PromiseViolation(f"found {len(parts)} parts; need at least 3")
    if covered != set(range(family.n)):
        raise PromiseViolation(f"vertices {sorted(set(range(family.n)) - covered)} lie in no part")
    if min(len(p) for p in parts) < family.k:
        raise PromiseViolation("a part is smaller than k")
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    g = LabeledGraph.from_edges(
        family.n, ((u, v) for u, v in combinations(range(family.n), 2) if part_of[u] != part_of[v])
    )
    return _verify(g, family, "multipartite")


def reconstruct_srg(t3: KSetFamily, k_degree: int) -> LabeledGraph:
    """Adjacent pairs sit in 2(k-1)-lambda triples, non-adjacent ones in mu.

    The two pair classes are told apart by the degree of vertex 0.
    """
    _require_triples(t3)
    n = t3.n
    counts = _pair_counts(t3)
    pairs = list(combinations(range(n), 2))
    values = sorted({counts[p] for p in pairs})
    if len(values) != 2:
        raise PromiseViolation(f"expected two distinct pair counts, found {values}")
    options = [LabeledGraph.from_edges(n, (p for p in pairs if counts[p] == c)) for c in values]
    options = [g for g in options if g.degree(0) == k_degree]
    if not options:
        raise PromiseViolation(f"neither pair class gives vertex 0 degree {k_degree}")
    fits = [g for g in options if connected_ksets(g, 3) == t3]
    if len(fits) != 1:
        raise PromiseViolation(f"strongly regular: {len(fits)} pair classes reproduce the input family")
    g = fits[0]
    params = srg_parameters(g)
    if params is None or params.k_degree != k_degree:
        raise PromiseViolation("reconstructed graph is not strongly regular with the given degree")
    v, k, lam, mu = params.as_tuple()
    if 2 * k - lam == mu + 2 or v == 2 * k + 1:
        raise PromiseViolation(f"parameters {params.as_tuple()} fall outside the uniquely reconstructible range")
    return g


# ---------------------------------------------------------------- planar classes


def _families(t3: KSetFamily) -> list[tuple[int, ...]]:
    return [t3_neighborhoods(t3, v).masks for v in range(t3.n)]


def _assemble(n: int, nbrs: list[int], what: str) -> LabeledGraph:
    for v, row in enumerate(nbrs):
        for u in bits(row):
            if not nbrs[u] >> v & 1:
                raise PromiseViolation(f"{what}: {u} is listed as a neighbour of {v} but not vice versa")
        if row >> v & 1:
            raise PromiseViolation(f"{what}: vertex {v} listed as its own neighbour")
    return LabeledGraph(n, tuple(nbrs))


def _contains(big: int, small: int) -> bool:
    return big & small == small


def reconstruct_planar5(t3: KSetFamily) -> LabeledGraph:
    """5-connected planar graphs.

    An element of the neighbourhood family is the true neighbour set iff none
    of its members ``w`` owns an element containing the rest of it; otherwise
    exactly one member (the fake neighbour) does, and dropping it leaves N(v).
    """
    _require_triples(t3)
    fams = _families(t3)

    def faker(elem: int) -> list[int]:
        return [w for w in bits(elem) if any(_contains(f, elem & ~(1 << w)) for f in fams[w])]

    nbrs = []
    for v in range(t3.n):
        exact = [e for e in fams[v] if not faker(e)]
        if len(exact) > 1:
            raise PromiseViolation(f"vertex {v}: several elements look like the neighbour set")
        if exact:
            nbrs.append(exact[0])
            continue
        elem = fams[v][0]
        fakes = faker(elem)
        if len(fakes) != 1:
            raise PromiseViolation(f"vertex {v}: cannot single out the fake neighbour ({fakes})")
        nbrs.append(elem & ~(1 << fakes[0]))
    g = _assemble(t3.n, nbrs, "planar5")
    _verify(g, t3, "planar5")
    if not is_planar(g) or min(g.degrees(), default=0) < 5:
        raise PromiseViolation("reconstructed graph is not a 5-connected planar candidate")
    return g


@dataclass(frozen=True)
class RegularPlanarResult:
    graph: LabeledGraph
    degree: int
    branches: dict[int, str] = field(default_factory=dict, compare=False)  # vertex -> case rule used


class _Resolver:
    """Per-vertex neighbour-set resolution for d-regular planar graphs, one
    method per degree, each case rule reported as a separate branch tag."""

    def __init__(self, fams: list[tuple[int, ...]]):
        self.fams = fams

    def _fake_twin(self, v: int, elem: int) -> list[int]:
        # members s with (elem + v - s) itself an element of s's family
        closed = elem | 1 << v
        return [s for s in bits(elem) if closed & ~(1 << s) in self.fams[s]]

    def _single(self, v: int, d: int, prefix: str) -> tuple[int, str]:
        elem = self.fams[v][0]
        size = elem.bit_count()
        if size == d:
            return elem, f"{prefix}:single-exact"
        if size != d + 1:
            raise PromiseViolation(f"vertex {v}: element of size {size} for degree {d}")
        fakes = self._fake_twin(v, elem)
        if len(fakes) != 1:
            raise PromiseViolation(f"vertex {v}: {len(fakes)} candidates for the extra vertex")
        return elem & ~(1 << fakes[0]), f"{prefix}:single-plus-w"

    def _unique_overlap(self, els: tuple[int, ...], d: int) -> int | None:
        good = [e for e in els if all((e & s).bit_count() == d - 1 for s in els if s != e)]
        return good[0] if len(good) == 1 else None

    def _is_swap_vertex(self, v: int, x: int, elem: int, size: int | None) -> bool:
        # x owns several elements, one of them elem + v - x, and v lies in exactly one
        fx = self.fams[x]
        if len(fx) < 2 or (size is not None and any(f.bit_count() != size for f in fx)):
            return False
        if (elem | 1 << v) & ~(1 << x) not in fx:
            return False
        return sum(f >> v & 1 for f in fx) == 1

    def degree3(self, v: int) -> tuple[int, str]:
        els = self.fams[v]
        if len(els) == 1:
            return self._single(v, 3, "cubic")
        if any(e.bit_count() != 3 for e in els):
            raise PromiseViolation(f"vertex {v}: several elements of size 4 in a cubic planar graph")
        unique = self._unique_overlap(els, 3)
        if unique is not None:
            return unique, "cubic:multi-unique-overlap"
        common = els[0]
        for e in els[1:]:
            common &= e
        if common.bit_count() != 2:
            raise PromiseViolation(f"vertex {v}: elements do not share two vertices")
        extra = {e: (e & ~common).bit_length() - 1 for e in els}
        fams = self.fams
        if len(els) == 3:
            # the genuine third neighbour has no element containing the shared pair
            real = [e for e in els if not any(_contains(f, common) for f in fams[extra[e]])]
            if len(real) == 1:
                return real[0], "cubic:three-elements"
            raise PromiseViolation(f"vertex {v}: three-element case left {len(real)} candidates")
        if len(els) == 2:
            e1, e2 = els
            x1, x2 = extra[e1], extra[e2]

            def twin_fake(x: int) -> bool:
                fx = fams[x]
                return all(f.bit_count() == 4 for f in fx) and not any(f >> v & 1 for f in fx)

            def overlap_fake(x: int) -> bool:
                fx = fams[x]
                return all(f.bit_count() == 3 for f in fx) and sum(_contains(f, common) for f in fx) >= 2

            a1, a2 = twin_fake(x1), twin_fake(x2)
            if a1 != a2:
                return (e2 if a1 else e1), "cubic:two-elements-twin"
            b1, b2 = overlap_fake(x1), overlap_fake(x2)
            if b1 != b2:
                return (e2 if b1 else e1), "cubic:two-elements-overlap"
            if b1 and b2 and {len(fams[x1]), len(fams[x2])} == {2, 3}:
                return (e2 if len(fams[x1]) == 3 else e1), "cubic:two-elements-count"
            raise PromiseViolation(f"vertex {v}: cannot tell the third neighbour from the impostor")
        raise PromiseViolation(f"vertex {v}: {len(els)} elements without a unique overlap pattern")

    def degree4(self, v: int) -> tuple[int, str]:
        els = self.fams[v]
        if len(els) == 1:
            return self._single(v, 4, "quartic")
        if any(e.bit_count() != 4 for e in els):
            raise PromiseViolation(f"vertex {v}: several elements of size 5 in a 4-regular planar graph")
        if len(els) >= 3:
            unique = self._unique_overlap(els, 4)
            if unique is None:
                raise PromiseViolation(f"vertex {v}: no unique element overlapping all others in three")
            return unique, "quartic:multi-unique-overlap"
        return self._two_elements(v, els, 4, "quartic")

    def degree5(self, v: int) -> tuple[int, str]:
        els = self.fams[v]
        if len(els) == 1:
            return self._single(v, 5, "quintic")
        if len(els) != 2 or any(e.bit_count() != 5 for e in els):
            raise PromiseViolation(f"vertex {v}: a 5-regular planar graph allows at most two elements of size 5")
        return self._two_elements(v, els, None, "quintic")

    def _two_elements(self, v: int, els: tuple[int, ...], size: int | None, prefix: str) -> tuple[int, str]:
        e1, e2 = els
        x1 = (e1 & ~e2).bit_length() - 1
        x2 = (e2 & ~e1).bit_length() - 1
        f1 = self._is_swap_vertex(v, x1, e1, size)
        f2 = self._is_swap_vertex(v, x2, e2, size)
        if f1 == f2:
            raise PromiseViolation(f"vertex {v}: swap test does not single out the impostor")
        return (e2 if f1 else e1), f"{prefix}:two-elements"


def reconstruct_regular_planar(t3: KSetFamily) -> RegularPlanarResult:
    """Connected d-regular planar graphs on n >= 7 vertices, d in 2..5.

    The degree is read off the triples first: the cycle pattern means d = 2,
    a vertex whose elements all have 3 (resp. 4) members means d = 3 (resp. 4),
    anything else d = 5.
    """
    _require_triples(t3)
    n = t3.n
    if n < 7:
        raise PromiseViolation(f"regular planar reconstruction needs n >= 7, got n={n}")
    try:
        return RegularPlanarResult(reconstruct_cycle(t3), 2, {v: "cycle" for v in range(n)})
    except PromiseViolation:
        pass
    fams = _families(t3)
    if any(all(e.bit_count() == 3 for e in f) for f in fams):
        d = 3
    elif any(all(e.bit_count() == 4 for e in f) for f in fams):
        d = 4
    else:
        d = 5
    resolver = _Resolver(fams)
    resolve = {3: resolver.degree3, 4: resolver.degree4, 5: resolver.degree5}[d]
    nbrs, branches = [], {}
    for v in range(n):
        row, tag = resolve(v)
        nbrs.append(row)
        branches[v] = tag
    g = _assemble(n, nbrs, "regular planar")
    _verify(g, t3, "regular planar")
    if regular_degree(g) != d or not is_planar(g):
        raise PromiseViolation(f"reconstructed graph is not {d}-regular planar")
    return RegularPlanarResult(g, d, branches)
