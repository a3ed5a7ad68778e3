from __future__ import annotations

import pytest
from hypothesis import given

from conftest import S, bipartite_graphs, graphs
from critcrown import generators as gen
from critcrown.graph import Graph
from critcrown.independence import (
    Limits,
    SizeLimitError,
    alpha,
    core,
    independent_sets,
    is_konig_egervary,
    is_very_well_covered,
    is_well_covered,
    maximal_independent_sets,
    naive_alpha,
    omega_sets,
    vertex_cover_number,
)
from critcrown.matching import matching_number

K1 = Graph.empty(1)


def test_corona_k3_k1():
    G = gen.corona(gen.complete(3), K1)
    assert alpha(G) == 3
    assert {M.bit_count() for M in maximal_independent_sets(G)} == {3}
    assert is_konig_egervary(G) and alpha(G) + matching_number(G) == 6
    assert is_very_well_covered(G)


def test_coronas_are_very_well_covered():
    from critcrown.corpus import exhaustive

    for H in exhaustive(5):
        assert is_very_well_covered(gen.corona(H, K1))


def test_c5_well_covered_but_not_very():
    C5 = gen.cycle(5)
    assert is_well_covered(C5) and not is_very_well_covered(C5)
    assert not is_konig_egervary(C5)


def test_omega_and_core():
    assert omega_sets(gen.cycle(6)).to_json() == [[0, 2, 4], [1, 3, 5]]
    assert core(gen.cycle(6)) == 0
    assert core(gen.path(3)) == S(0, 2)
    assert vertex_cover_number(gen.petersen()) == 10 - 4


def test_limits_are_enforced():
    small = Limits(alpha=5, omega=5, family=5)
    with pytest.raises(SizeLimitError):
        alpha(gen.cycle(6), small)
    with pytest.raises(ValueError):
        Limits(alpha=0)


@given(graphs(max_n=9))
def test_alpha_matches_enumeration(G):
    ind = independent_sets(G)
    assert alpha(G) == naive_alpha(G) == max(s.bit_count() for s in ind)
    a = alpha(G)
    assert omega_sets(G).as_set() == {s for s in ind if s.bit_count() == a}
    assert all(G.is_independent(s) for s in ind)
    assert len(set(ind)) == len(ind)


@given(bipartite_graphs())
def test_bipartite_graphs_are_ke(G):
    assert is_konig_egervary(G)
