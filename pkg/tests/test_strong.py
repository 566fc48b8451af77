from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import assume, given, settings

from t3recon import corpus
from t3recon.errors import BoundExceeded
from t3recon.graph import LabeledGraph, is_connected, triangle_free
from t3recon.ksets import KSetFamily, connected_ksets
from t3recon.strong import (
    FAMILIES,
    FamilyPattern,
    candidate_edges,
    check_strong_fast,
    check_strong_oracle,
    check_strong_trianglefree,
    enumerate_realizations,
    find_twin_graphs,
    is_edge_necessary,
    match_family,
    twin_pair,
)

from test_graph import graphs


def t3(g: LabeledGraph) -> KSetFamily:
    return connected_ksets(g, 3)


def all_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield LabeledGraph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def brute_realizations(t: KSetFamily) -> set[LabeledGraph]:
    """Every connected graph on t.n vertices with the same triples, by scanning all graphs."""
    return {h for h in all_graphs(t.n) if is_connected(h) and t3(h) == t}


# ------------------------------------------------------------------ realizations


def test_candidate_edges():
    assert len(candidate_edges(t3(corpus.complete(4)))) == 6
    p5 = candidate_edges(t3(corpus.path(5)))
    assert p5 == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
    assert len(candidate_edges(t3(corpus.cycle(5)))) == 10


def test_realizations_of_c5():
    rs = enumerate_realizations(t3(corpus.cycle(5)))
    assert rs.realizations == (corpus.cycle(5),) and not rs.truncated


def test_realizations_of_k4_match_brute_force():
    rs = enumerate_realizations(t3(corpus.complete(4)))
    brute = brute_realizations(t3(corpus.complete(4)))
    assert len(brute) == 10 and set(rs.realizations) == brute
    edge_counts = sorted(h.edge_count for h in rs.realizations)
    assert edge_counts == [4, 4, 4] + [5] * 6 + [6]


def test_realizations_of_k5_include_every_k5_minus_e():
    rs = enumerate_realizations(t3(corpus.complete(5)))
    k5 = corpus.complete(5)
    assert k5 in rs.realizations
    for e in k5.edges():
        assert k5.toggled(*e) in rs.realizations


def test_realization_limit():
    rs = enumerate_realizations(t3(corpus.complete(4)), limit=3)
    assert len(rs.realizations) == 3 and rs.truncated
    with pytest.raises(ValueError):
        enumerate_realizations(t3(corpus.complete(4)), limit=0)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=3, max_n=5))
def test_oracle_matches_brute_force(g):
    assume(is_connected(g))
    t = t3(g)
    assert set(enumerate_realizations(t).realizations) == brute_realizations(t)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=9))
def test_every_realization_reproduces_the_triples(g):
    assume(is_connected(g))
    t = t3(g)
    rs = enumerate_realizations(t, limit=50)
    assert g in rs.realizations or rs.truncated
    for h in rs.realizations:
        assert is_connected(h) and t3(h) == t


# ------------------------------------------------------------------ necessity and twins


def test_edge_necessity_examples():
    assert all(is_edge_necessary(corpus.cycle(5), *e) for e in corpus.cycle(5).edges())
    assert not any(is_edge_necessary(corpus.complete(5), *e) for e in corpus.complete(5).edges())
    assert all(is_edge_necessary(corpus.path(5), *e) for e in corpus.path(5).edges())
    with pytest.raises(ValueError):
        is_edge_necessary(corpus.cycle(5), 0, 2)


def test_twin_examples():
    assert twin_pair(corpus.star(4)) == (1, 2)
    assert twin_pair(corpus.complete(4)) == (0, 1)
    assert twin_pair(corpus.cycle(5)) is None


# ------------------------------------------------------------------ families


def test_family_examples():
    m = match_family(corpus.paw(), 0, 1)
    assert m is not None and m.family_id == "F1" and m.mapping == (0, 1, 3, 2)
    m = match_family(corpus.path(5), 0, 1)
    assert m is not None and m.family_id == "F5"
    k4 = corpus.complete(4)
    assert all(match_family(k4, *e) is None for e in k4.edges())
    assert match_family(corpus.cycle(5), 0, 2) is None


def test_family_pattern_validation():
    with pytest.raises(ValueError):
        FamilyPattern("bad", 3, ((0, 1),), ((0, 2),), ())
    with pytest.raises(ValueError):
        FamilyPattern("bad", 3, ((0, 2), (1, 2)), ((0, 1),), ())


@pytest.mark.parametrize("pat", FAMILIES, ids=[p.family_id for p in FAMILIES])
def test_family_is_locally_necessary(pat):
    """Any graph on the pattern's vertices with the same triples as a
    completion keeps the highlighted edge.  Induced triples of a host are the
    host's triples restricted to the copy, so this makes the edge necessary in
    every host containing an induced copy."""
    u, v = pat.highlighted_edge
    by_triples: dict[KSetFamily, list[LabeledGraph]] = {}
    for h in all_graphs(pat.vertex_count):
        by_triples.setdefault(t3(h), []).append(h)
    count = 0
    for comp in pat.completions():
        count += 1
        for other in by_triples[t3(comp)]:
            assert other.has_edge(u, v), (pat.family_id, comp.edges(), other.edges())
    assert count == 1 << len(pat.optional_edges)


@pytest.mark.parametrize("pat", FAMILIES, ids=[p.family_id for p in FAMILIES])
def test_family_embedded_in_random_hosts(pat):
    rng = random.Random(1000 + int(pat.family_id[1:]))
    checked = 0
    for _ in range(40):
        n = rng.randint(pat.vertex_count, 8)
        g = corpus.random_connected_graph(n, rng, p=rng.choice([0.3, 0.5]))
        for a, b in g.edges():
            m = match_family(g, a, b, [pat])
            if m is not None:
                assert is_edge_necessary(g, a, b)
                checked += 1
    assert checked > 0


# ------------------------------------------------------------------ verdicts


def test_verdict_examples():
    assert check_strong_fast(corpus.cycle(5)).reconstructible
    assert check_strong_fast(corpus.bull()).reconstructible
    v = check_strong_fast(corpus.star(4))
    assert not v.reconstructible and v.witness.kind == "twin" and v.witness.vertices == (1, 2)
    assert check_strong_oracle(corpus.cycle(5)).reconstructible
    assert check_strong_oracle(corpus.path(5)).reconstructible
    v = check_strong_oracle(corpus.complete(4))
    assert not v.reconstructible and v.witness.kind == "realization"


def test_fast_below_five_falls_back():
    v = check_strong_fast(corpus.complete(4))
    assert v.method == "oracle-fallback" and not v.reconstructible


def test_disconnected_input_rejected():
    g = LabeledGraph.from_edges(5, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        check_strong_fast(g)
    with pytest.raises(ValueError):
        check_strong_oracle(g)


def test_trianglefree_examples():
    assert check_strong_trianglefree(corpus.cycle(6)).reconstructible
    k23 = corpus.complete_multipartite(2, 3)
    assert not check_strong_trianglefree(k23).reconstructible
    cherry = LabeledGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)])
    v = check_strong_trianglefree(cherry)
    assert not v.reconstructible and v.witness.vertices == (4, 5)
    assert check_strong_trianglefree(corpus.path(6)).reconstructible
    with pytest.raises(ValueError):
        check_strong_trianglefree(corpus.complete(5))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=5, max_n=8))
def test_fast_agrees_with_oracle(g):
    assume(is_connected(g))
    fast, oracle = check_strong_fast(g), check_strong_oracle(g)
    assert fast.reconstructible == oracle.reconstructible
    if triangle_free(g):
        assert check_strong_trianglefree(g).reconstructible == oracle.reconstructible


# ------------------------------------------------------------------ twin search


def test_twins_k4_c4_hamiltonian():
    pairs = {frozenset(p) for p in find_twin_graphs(4, ["hamiltonian"])}
    k4 = corpus.complete(4)
    for c4 in (corpus.cycle(4), corpus.cycle(4).relabeled([0, 2, 1, 3]), corpus.cycle(4).relabeled([0, 1, 3, 2])):
        assert frozenset((k4, c4)) in pairs


def test_twins_k5_unfiltered():
    k5 = corpus.complete(5)
    pairs = {frozenset(p) for p in find_twin_graphs(5)}
    assert frozenset((k5, k5.toggled(0, 1))) in pairs


def test_twins_trianglefree_all_have_nonadjacent_twins():
    for a, b in find_twin_graphs(5, ["triangle-free"]):
        assert not check_strong_trianglefree(a).reconstructible
        assert not check_strong_trianglefree(b).reconstructible


def test_twins_bound_and_unknown_predicate():
    with pytest.raises(BoundExceeded):
        find_twin_graphs(9)
    with pytest.raises(ValueError):
        find_twin_graphs(4, ["no-such-class"])
    assert find_twin_graphs(4, ["3-connected"]) == []
