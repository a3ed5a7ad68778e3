from __future__ import annotations

import networkx as nx
import pytest

from critcrown.corpus import (
    ExhaustiveLimitError,
    canonical_form,
    certificate,
    corona_corpus,
    graphs_of_order,
    random_graphs,
)
from critcrown.graph import Graph
from critcrown import generators as gen

# OEIS A000088, A001349, A006785, A033995, A000055, A033483, A005195
COUNTS = {
    "all": [1, 1, 2, 4, 11, 34, 156, 1044, 12346],
    "connected": [1, 1, 1, 2, 6, 21, 112, 853, 11117],
    "triangle-free": [1, 1, 2, 3, 7, 14, 38, 107, 410],
    "connected-bipartite": [1, 1, 1, 1, 3, 5, 17, 44, 182],
    "tree": [1, 1, 1, 1, 2, 3, 6, 11, 23],
    "bipartite": [1, 1, 2, 3, 7, 13, 35, 88, 303],
    "forest": [1, 1, 2, 3, 6, 10, 20, 37, 76],
}


@pytest.mark.parametrize("kind", sorted(COUNTS))
def test_class_sizes_match_published_counts(kind):
    got = [len(graphs_of_order(n, kind)) for n in range(1, 9)]
    assert got == COUNTS[kind][1:]


@pytest.mark.parametrize("kind", ["all", "triangle-free", "bipartite", "forest"])
def test_members_belong_to_class_and_are_pairwise_non_isomorphic(kind):
    test = {
        "all": lambda G: True,
        "triangle-free": Graph.is_triangle_free,
        "bipartite": Graph.is_bipartite,
        "forest": Graph.is_forest,
    }[kind]
    level = graphs_of_order(7, kind)
    assert all(test(G) for G in level)
    assert len({certificate(G) for G in level}) == len(level)


def test_agrees_with_networkx_atlas():
    atlas: dict[int, set[bytes]] = {}
    for H in nx.graph_atlas_g():
        G = Graph.from_edges(H.number_of_nodes(), H.edges())
        atlas.setdefault(G.n, set()).add(certificate(G))
    for n in range(1, 8):
        assert {certificate(G) for G in graphs_of_order(n)} == atlas[n]


def test_canonical_form_is_isomorphism_invariant():
    C = gen.cycle(6)
    D = C.relabel([3, 0, 4, 1, 5, 2])
    assert canonical_form(C) == canonical_form(D)
    assert certificate(C) == certificate(D)
    assert certificate(C) != certificate(gen.path(6))


def test_limits_raise():
    with pytest.raises(ExhaustiveLimitError):
        graphs_of_order(10, "all")
    with pytest.raises(ValueError):
        graphs_of_order(3, "planar")


def test_random_corpus_is_seeded():
    a = random_graphs(20, 10, seed=7)
    b = random_graphs(20, 10, seed=7)
    assert a == b and all(1 <= G.n <= 10 for G in a)
    assert a != random_graphs(20, 10, seed=8)


def test_corona_corpus():
    cor = corona_corpus(3)
    assert len(cor) == 1 + 2 + 4 and all(G.n % 2 == 0 for G in cor)
