from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from t3recon import corpus
from t3recon.errors import GraphFormatError, UnsupportedSizeError
from t3recon.graph import (
    LabeledGraph,
    encode_graph6,
    graph_profile,
    induced_subgraph,
    is_connected,
    is_hamiltonian,
    is_planar,
    parse_edge_list,
    parse_graph6,
    srg_parameters,
    vertex_connectivity,
)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> LabeledGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def to_nx(g: LabeledGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# ------------------------------------------------------------------ graph6


def test_single_vertex_graph6():
    assert encode_graph6(LabeledGraph.empty(1)) == "@"
    g = parse_graph6("@")
    assert g.n == 1 and g.edge_count == 0


def test_k2_sets_its_only_bit():
    s = encode_graph6(corpus.complete(2))
    assert len(s) == 2
    assert (ord(s[1]) - 63) >> 5 & 1


def test_k4_decodes_to_cubic():
    g = parse_graph6(encode_graph6(corpus.complete(4)))
    assert g.edge_count == 6 and g.degrees() == [3, 3, 3, 3]


@given(graphs(max_n=10))
def test_graph6_agrees_with_networkx(g):
    s = encode_graph6(g)
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    back = nx.from_graph6_bytes(s.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == list(g.edges())
    assert parse_graph6(s) == g


def test_graph6_exhaustive_round_trip_small():
    for n in range(6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = corpus.graph_from_mask(n, mask)
            assert parse_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("D", 1), ("Dx", None), ("D\x7fG", 1), ("A", 1)],
)
def test_graph6_errors(text, offset):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph6(text)
    if offset is not None:
        assert exc.value.offset is not None


def test_graph6_nonzero_padding():
    # n=2 has one data bit; set a padding bit
    with pytest.raises(GraphFormatError, match="padding"):
        parse_graph6("A" + chr(63 + 1))


def test_graph6_too_large():
    with pytest.raises(UnsupportedSizeError):
        encode_graph6(LabeledGraph.empty(63))


# ------------------------------------------------------------------ edge lists


def test_edge_list_examples():
    assert parse_edge_list("n=3\n0 1\n1 2") == corpus.path(3)
    assert parse_edge_list("n=2") == LabeledGraph.empty(2)
    with pytest.raises(GraphFormatError, match="loop") as exc:
        parse_edge_list("n=3\n0 0")
    assert exc.value.line == 2


@pytest.mark.parametrize("body", ["0 1\n0 1", "0 5", "1 0", "0 x", "0 1 2"])
def test_edge_list_errors_name_the_line(body):
    with pytest.raises(GraphFormatError) as exc:
        parse_edge_list("n=3\n" + body)
    assert exc.value.line is not None and exc.value.line >= 2


# ------------------------------------------------------------------ structure


def test_induced_subgraph_examples():
    k3, _ = induced_subgraph(corpus.complete(4), [0, 1, 2])
    assert k3 == corpus.complete(3)
    h, ids = induced_subgraph(corpus.cycle(5), [0, 1, 3])
    assert ids == (0, 1, 3) and h.edges() == [(0, 1)]
    # 4 and 0 are consecutive on the cycle, so one edge survives
    h, _ = induced_subgraph(corpus.cycle(5), [0, 2, 4])
    assert h.edges() == [(0, 2)]
    h, _ = induced_subgraph(corpus.cycle(5), [1, 3])
    assert h.edge_count == 0
    with pytest.raises(IndexError):
        induced_subgraph(corpus.cycle(5), [0, 5])


def test_connectivity_examples():
    assert is_connected(corpus.cycle(5))
    assert is_connected(LabeledGraph.empty(1))
    broken = LabeledGraph.from_edges(5, [(0, 1), (3, 4)])
    assert not is_connected(broken)
    assert vertex_connectivity(corpus.cycle(5)) == 2
    assert vertex_connectivity(corpus.path(5)) == 1
    assert vertex_connectivity(corpus.petersen()) == 3
    assert vertex_connectivity(broken) == 0


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=8))
def test_vertex_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


@settings(max_examples=60)
@given(graphs(min_n=0, max_n=7))
def test_hamiltonian_matches_permutation_search(g):
    def brute(g: LabeledGraph) -> bool:
        if g.n < 3:
            return False
        for rest in itertools.permutations(range(1, g.n)):
            order = (0, *rest)
            if all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n)):
                return True
        return False

    assert is_hamiltonian(g) == brute(g)


def test_profiles():
    k4 = graph_profile(corpus.complete(4))
    assert (k4.planar, k4.kappa, k4.regular_degree, k4.hamiltonian, k4.eulerian) == (True, 3, 3, True, False)
    pet = graph_profile(corpus.petersen())
    assert pet.srg is not None and pet.srg.as_tuple() == (10, 3, 0, 1) and not pet.planar
    parts = graph_profile(corpus.complete_multipartite(3, 3, 3)).multipartite_parts
    assert sorted(sorted(p) for p in parts) == [[0, 1, 2], [3, 4, 5], [6, 7, 8]]


def test_srg_parameters_by_counting():
    g = corpus.petersen()
    lam = {len(set(g.neighbors(a)) & set(g.neighbors(b))) for a, b in g.edges()}
    mu = {
        len(set(g.neighbors(a)) & set(g.neighbors(b)))
        for a, b in itertools.combinations(range(10), 2)
        if not g.has_edge(a, b)
    }
    assert lam == {0} and mu == {1}
    assert srg_parameters(corpus.complete(5)) is None
    assert srg_parameters(corpus.path(5)) is None


# ------------------------------------------------------------------ corpus


def test_connected_counts_match_recurrence():
    expected = [1, 1, 4, 38, 728]
    for n, want in enumerate(expected, start=1):
        assert sum(1 for _ in corpus.connected_labeled_graphs(n)) == want == corpus.connected_count(n)
    assert corpus.connected_count(6) == 26704
    assert corpus.connected_count(7) == 1866256


def test_enumeration_is_in_mask_order_and_connected():
    masks = [m for m, g in corpus.connected_labeled_graphs(5)]
    assert masks == sorted(masks)
    for m, g in corpus.connected_labeled_graphs(4):
        assert corpus.edge_mask(g) == m and nx.is_connected(to_nx(g))


@pytest.mark.parametrize(
    "make, n, degree, planar",
    [
        (corpus.icosahedron, 12, 5, True),
        (corpus.dodecahedron, 20, 3, True),
        (corpus.cuboctahedron, 12, 4, True),
        (corpus.truncated_octahedron, 24, 3, True),
        (corpus.truncated_tetrahedron, 12, 3, True),
        (corpus.rhombicuboctahedron, 24, 4, True),
        (corpus.icosidodecahedron, 30, 4, True),
        (corpus.snub_cube, 24, 5, True),
        (corpus.petersen, 10, 3, False),
        (lambda: corpus.prism(4), 8, 3, True),
        (lambda: corpus.antiprism(4), 8, 4, True),
    ],
)
def test_named_graphs(make, n, degree, planar):
    g = make()
    assert g.n == n and set(g.degrees()) == {degree}
    assert is_planar(g) == planar and is_connected(g)


def test_cube_is_q3():
    assert nx.is_isomorphic(to_nx(corpus.prism(4)), to_nx(corpus.hypercube(3)))
