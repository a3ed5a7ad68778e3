from __future__ import annotations

import pytest
from hypothesis import given

from conftest import S, bipartite_graphs, graphs
from critcrown import generators as gen
from critcrown.graph import Graph
from critcrown.matching import (
    Matching,
    MatchingError,
    brute_force_matching_number,
    count_perfect_matchings,
    hall_violator,
    is_uniquely_restricted,
    konig_cover,
    matching_number,
    max_bipartite_matching,
    max_matching,
    perfect_matching_status,
    saturating_matching_into,
)


def test_petersen_has_perfect_matching():
    M = max_matching(gen.petersen())
    M.check(gen.petersen())
    assert len(M) == 5


def test_odd_cycle_needs_blossoms():
    for n in (3, 5, 7, 9):
        assert matching_number(gen.cycle(n)) == n // 2


def test_bipartite_matching_c6():
    M = max_bipartite_matching(gen.cycle(6), S(0, 2, 4), S(1, 3, 5))
    assert len(M) == 3


def test_perfect_matching_status():
    assert perfect_matching_status(gen.cycle(6)).kind == "multiple"
    assert perfect_matching_status(gen.path(4)).kind == "unique"
    assert perfect_matching_status(gen.path(3)).kind == "none"
    st = perfect_matching_status(gen.cycle(6))
    assert st.matching != st.other and len(st.other) == 3


def test_matching_validation():
    with pytest.raises(MatchingError):
        Matching.from_edges([(0, 1), (1, 2)])
    with pytest.raises(MatchingError):
        Matching.from_edges([(0, 2)]).check(gen.path(3))


def test_uniquely_restricted():
    assert is_uniquely_restricted(gen.path(4), Matching.from_edges([(0, 1), (2, 3)]))
    assert not is_uniquely_restricted(gen.cycle(4), Matching.from_edges([(0, 1), (2, 3)]))


def test_hall_violator_and_saturation():
    K = gen.star(3)  # leaves 0..2, centre 3
    assert saturating_matching_into(K, S(0, 1, 2)) is not None
    assert hall_violator(K, S(0, 1, 2)) == 0
    # the centre cannot absorb its three neighbours
    assert saturating_matching_into(K, S(3)) is None
    Y = hall_violator(K, S(3))
    assert Y and not Y & ~S(0, 1, 2)
    assert (K.nbhd(Y) & S(3)).bit_count() < Y.bit_count()


@given(graphs(max_n=9))
def test_blossom_matches_brute_force(G):
    M = max_matching(G)
    M.check(G)
    assert len(M) == brute_force_matching_number(G)
    status = perfect_matching_status(G)
    count = count_perfect_matchings(G)
    assert status.kind == ("none" if count == 0 else "unique" if count == 1 else "multiple")


@given(bipartite_graphs())
def test_hopcroft_karp_and_koenig_cover(G):
    L, R = G.bipartition()
    M = max_bipartite_matching(G, L, R)
    M.check(G)
    assert len(M) == brute_force_matching_number(G, L, R) == matching_number(G)
    C = konig_cover(G, L, R, M)
    assert C.bit_count() == len(M)
    assert all(C >> u & 1 or C >> v & 1 for u, v in G.edges())
