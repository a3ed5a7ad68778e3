from __future__ import annotations

import pytest
from hypothesis import given

from conftest import S, graphs
from critcrown import generators as gen
from critcrown.graph import Graph
from critcrown.independence import alpha_within, independent_sets, omega_sets
from critcrown.lmis import (
    NeighborhoodNotNestedError,
    NotLMISError,
    enumerate_psi,
    extend_to_maximum_independent,
    family_relations_report,
    is_lmis,
    lmis_augment,
    local_diagnostics,
)


def test_psi_listings():
    C5 = gen.cycle(5)
    assert enumerate_psi(C5).as_set() == omega_sets(C5).as_set() | {0}
    assert enumerate_psi(gen.path(3)).to_json() == [[], [0], [2], [0, 2]]
    assert enumerate_psi(gen.cycle(4)).to_json() == [[], [0, 2], [1, 3]]


def test_leaves_of_trees_are_lmis():
    T = Graph.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    for v in range(6):
        if T.degree(v) == 1:
            assert is_lmis(T, S(v))


def test_lmis_augment():
    P3 = gen.path(3)
    assert lmis_augment(P3, S(0), S(0, 2)) == S(0, 2)
    with pytest.raises(NotLMISError):
        lmis_augment(P3, S(1), S(0, 2))
    with pytest.raises(NeighborhoodNotNestedError):
        lmis_augment(gen.path(5), S(0), S(4))


def test_extend_to_maximum():
    assert extend_to_maximum_independent(gen.path(3), S(0)) == S(0, 2)
    C6 = gen.cycle(6)
    assert extend_to_maximum_independent(C6, S(1, 3, 5)) == S(1, 3, 5)
    # N[0] in C6 holds the independent pair {1, 5}, so {0} is not local maximum
    with pytest.raises(NotLMISError):
        extend_to_maximum_independent(C6, S(0))


@given(graphs(max_n=8))
def test_extend_to_maximum_property(G):
    omega = omega_sets(G)
    for S1 in enumerate_psi(G):
        out = extend_to_maximum_independent(G, S1)
        assert out & S1 == S1 and out in omega


def test_family_relations():
    r = family_relations_report(gen.cycle(6))
    assert r.crit_eq_crown and r.crown_eq_psi and r.crit_eq_psi
    r = family_relations_report(gen.path(3))
    assert not r.crit_eq_crown and r.crown_eq_psi
    r = family_relations_report(Graph.empty(1))
    assert 0 in r.psi and 0 not in r.crit


def test_local_diagnostics_on_c5():
    diag = local_diagnostics(gen.cycle(5), S(0, 2))
    assert not diag.konig_egervary and not diag.perfect_matching


@given(graphs(max_n=8))
def test_lmis_matches_definition(G):
    for X in independent_sets(G):
        assert is_lmis(G, X) == (alpha_within(G, G.closed_nbhd(X)) == X.bit_count())


@given(graphs(max_n=8))
def test_lmis_augment_property(G):
    psi = list(enumerate_psi(G))
    for S1 in psi[:6]:
        for S2 in psi:
            if G.closed_nbhd(S1) & ~G.closed_nbhd(S2) == 0:
                S3 = lmis_augment(G, S1, S2)
                assert S3 & S1 == S1 and S3.bit_count() == S2.bit_count() and is_lmis(G, S3)
