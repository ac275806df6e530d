import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_crgs, crgs
from editdist.crg import Crg, cycle_crg, from_gray_graph, k_rs, path_crg
from editdist.graphs import BudgetExceeded, SmallGraph, complement, make_named
from editdist.hom import (
    admissible, comp_family, exists_hom, family_from_tag, find_hom, is_colored_hom,
    kword_family, simplified_comp_family, truncation_bound, word_family,
)


def brute_hom(G, K):
    return any(is_colored_hom(G, K, list(phi)) for phi in itertools.product(range(K.k), repeat=G.n))


@st.composite
def tiny_graphs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SmallGraph.from_edges(n, [e for e, b in zip(pairs, keep) if b])


def test_hom_examples():
    assert exists_hom(make_named("F1"), k_rs(1, 1))
    assert not exists_hom(make_named("cycle", 5), k_rs(2, 0))
    assert exists_hom(make_named("complete", 3), k_rs(0, 1))
    assert exists_hom(make_named("W5"), k_rs(4, 0))
    assert not exists_hom(make_named("W5"), k_rs(3, 0))


def test_found_maps_verify():
    for G, K in [(make_named("F2"), k_rs(0, 2)), (make_named("F1p"), k_rs(1, 1)),
                 (complement(make_named("cycle", 9)), cycle_crg(6))]:
        phi = find_hom(G, K)
        assert phi is not None and is_colored_hom(G, K, phi)


@settings(max_examples=150, deadline=None)
@given(tiny_graphs(), crgs(max_k=3))
def test_search_matches_brute_force(G, K):
    assert exists_hom(G, K) == brute_hom(G, K)


@settings(max_examples=80, deadline=None)
@given(tiny_graphs(max_n=6), crgs(min_k=2, max_k=4), st.data())
def test_induced_sub_crg_monotone(G, K, data):
    keep = data.draw(st.lists(st.sampled_from(range(K.k)), min_size=1, unique=True))
    if exists_hom(G, K.induced(sorted(keep))):
        assert exists_hom(G, K)


@settings(max_examples=80, deadline=None)
@given(tiny_graphs(max_n=6), crgs(min_k=2, max_k=4), st.data())
def test_recolor_preserves_maps(G, K, data):
    nongray = K.pairs("w") + K.pairs("b")
    if not nongray:
        return
    i, j = data.draw(st.sampled_from(nongray))
    phi = find_hom(G, K)
    if phi is not None:
        assert is_colored_hom(G, K.recolor(i, j, "g"), phi)


def test_admissibility_examples():
    assert admissible(k_rs(3, 0), word_family()).overall
    r = admissible(k_rs(4, 0), word_family())
    assert not r.overall and "W5" in r.witnesses
    r = admissible(path_crg(5), comp_family())
    assert r.overall and r.truncation_bound == 12
    r = admissible(k_rs(2, 0), kword_family(2))
    assert not r.overall and r.witnesses == ["crown(6)"]


def test_family_members():
    assert [n for n, _ in word_family().members()] == ["F1", "F2", "W5"]
    names = [n for n, _ in comp_family().members(8)]
    assert names == ["F1p", "F2p", "co-C5", "co-C6", "co-C7", "co-C8"]
    names = [n for n, _ in simplified_comp_family().members(14)]
    assert names == ["F1p", "F2p", "co-C6", "co-C14"]
    assert family_from_tag("kword:3").name == "kword:3"
    with pytest.raises(ValueError):
        family_from_tag("kword:1")
    with pytest.raises(ValueError):
        family_from_tag("planar")


def test_truncation_bound():
    assert truncation_bound(path_crg(5)) == 12
    assert truncation_bound(path_crg(16)) == 32


@pytest.mark.parametrize("j", range(5, 13))
def test_cycle_complement_window(j):
    for k in range(3, 13):
        want = math.ceil(j / 2) <= k <= j
        assert exists_hom(complement(make_named("cycle", j)), cycle_crg(k)) == want


def test_structure_embeddings():
    claw5 = from_gray_graph(5, [(0, 1), (0, 2), (0, 3)])
    claw4 = from_gray_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert exists_hom(make_named("F2"), k_rs(0, 2))
    assert exists_hom(make_named("F1"), claw5)
    assert exists_hom(make_named("F1p"), claw4)
    assert exists_hom(make_named("F2p"), k_rs(0, 2))
    for t in (3, 4, 5):
        ring = [(i, (i + 1) % t) for i in range(t)]
        assert exists_hom(make_named("W5"), from_gray_graph(t + 1, ring))
        assert exists_hom(make_named("cycle", 5), from_gray_graph(t, ring))
    assert not exists_hom(make_named("F1"), path_crg(5))


def _agree(K):
    full = admissible(K, comp_family(), stop_at_first=True).overall
    return full == admissible(K, simplified_comp_family(), stop_at_first=True).overall


def test_simplified_comp_family_agrees_without_white_pairs():
    checked = 0
    for K in all_crgs(4):
        if "w" not in K.ecolor:
            assert _agree(K), K
            checked += 1
    for ec in itertools.product("bg", repeat=10):
        assert _agree(Crg(5, "wwwww", "".join(ec)))
    rng = np.random.default_rng(3)
    for _ in range(300):
        assert _agree(Crg(6, "w" * 6, "".join(rng.choice(["b", "g"], size=15))))
    assert checked == 1098


def test_simplified_comp_family_differs_with_white_pairs():
    # co-C5 maps here but none of co-C6, co-C14, co-C30 do
    K = Crg(4, "wwww", "wwbbgg")
    assert not admissible(K, comp_family()).overall
    assert admissible(K, simplified_comp_family()).overall
    assert not exists_hom(complement(make_named("cycle", 30)), K)


def test_node_cap():
    with pytest.raises(BudgetExceeded):
        exists_hom(make_named("complete", 12), k_rs(11, 0), node_cap=1000)


def test_verifier_rejects_non_edge_on_black_vertex():
    G = SmallGraph.from_edges(3, [(0, 1)])
    assert is_colored_hom(G, Crg(1, "b", ""), [0, 0, 0]) is False
