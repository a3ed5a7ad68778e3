from __future__ import annotations

import pytest
from hypothesis import given

from conftest import S, graphs
from critcrown import generators as gen
from critcrown.crowns import (
    NotACrownError,
    boundary_matching,
    crown_augment,
    crown_reduce_vertex_cover,
    enumerate_crowns,
    extend_to_max_crown,
    hall_crown_oracle,
    is_crown,
    max_crown,
    max_crown_certificate,
)
from critcrown.critical import enumerate_crit_indep
from critcrown.graph import Graph
from critcrown.independence import independent_sets, vertex_cover_number


def test_p3_crowns():
    P3 = gen.path(3)
    cert = is_crown(P3, S(0))
    assert cert is not None and cert.matching.to_json() == [[0, 1]]
    assert enumerate_crowns(P3).to_json() == [[], [0], [2], [0, 2]]


def test_p5_intersection_of_crowns_is_not_a_crown():
    P5 = gen.path(5)
    A, B = S(0, 2), S(2, 4)
    assert is_crown(P5, A) and is_crown(P5, B)
    assert is_crown(P5, A & B) is None
    assert crown_augment(P5, A, B) == (S(0, 2, 4), S(0, 2, 4))
    assert len(boundary_matching(P5, A, B)) == 0


def test_odd_cycle_has_only_empty_crown():
    assert enumerate_crowns(gen.cycle(5)).to_json() == [[]]
    assert enumerate_crowns(gen.cycle(7)).to_json() == [[]]
    assert max_crown(gen.cycle(5)) == 0


def test_star_crowns():
    for n in (2, 3, 5):
        K = gen.star(n)
        leaves = S(*range(n))
        for X in range(1, leaves):
            assert is_crown(K, X)
        assert max_crown(K) == leaves
        assert extend_to_max_crown(K, S(0)) == leaves


def test_c4_crowns_and_c6_boundary():
    assert enumerate_crowns(gen.cycle(4)).to_json() == [[], [0, 2], [1, 3]]
    M = boundary_matching(gen.cycle(6), S(0, 2, 4), S(1, 3, 5))
    assert len(M) == 3


def test_augment_rejects_non_crowns():
    with pytest.raises(NotACrownError):
        crown_augment(gen.path(5), S(2), S(0))


def test_isolated_vertex_is_a_crown():
    G = Graph.from_edges(3, [(0, 1)])
    cert = is_crown(G, S(2))
    assert cert is not None and cert.nbhd == 0 and len(cert.matching) == 0


def test_kernelizer_examples():
    res = crown_reduce_vertex_cover(gen.cycle(5), 3)
    assert res.kernel == gen.cycle(5) and res.k == 3 and not res.trace
    res = crown_reduce_vertex_cover(gen.path(3), 1)
    assert res.kernel.n == 0 and res.k == 0 and res.feasible
    assert not crown_reduce_vertex_cover(gen.path(3), 0).feasible
    with pytest.raises(ValueError):
        crown_reduce_vertex_cover(gen.path(3), -1)


@given(graphs(max_n=8))
def test_crown_test_agrees_with_hall(G):
    for X in independent_sets(G):
        cert = is_crown(G, X)
        assert (cert is not None) == hall_crown_oracle(G, X)
        if cert is not None:
            cert.check(G)


@given(graphs(max_n=8))
def test_max_crown_certificate(G):
    cert = max_crown_certificate(G)
    cert.check(G)
    crowns = enumerate_crowns(G)
    assert cert.S.bit_count() == crowns.max_size
    assert enumerate_crit_indep(G).as_set() <= crowns.as_set()


@given(graphs(max_n=10))
def test_kernelizer_preserves_cover_number(G):
    k = G.n
    res = crown_reduce_vertex_cover(G, k)
    assert vertex_cover_number(G) == vertex_cover_number(res.kernel) + res.removed_cover
    assert res.k == k - res.removed_cover
