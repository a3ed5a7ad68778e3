from __future__ import annotations

from hypothesis import given

from conftest import S, graphs
from critcrown import generators as gen
from critcrown.critical import (
    best_extension_difference,
    brute_force_critical_difference,
    brute_force_critical_independence_difference,
    critical_difference,
    critical_seed,
    double_cover,
    enumerate_crit_indep,
    is_critical_independent,
    is_inclusion_maximal_critical,
    ker,
    max_critical_independent_set,
)
from critcrown.graph import Graph, difference
from critcrown.independence import alpha, core, omega_sets


def test_critical_difference_examples():
    assert critical_difference(gen.cycle(5)) == 0
    assert critical_difference(gen.path(3)) == 1
    for n in (2, 3, 5):
        assert critical_difference(gen.star(n)) == n - 1


def test_double_cover_of_c5_is_c10():
    B = double_cover(gen.cycle(5))
    assert B.graph.n == 10 and B.graph.m == 10
    assert alpha(B.graph) == 5


def test_maximum_critical_sets():
    for n in (2, 3, 5):
        assert max_critical_independent_set(gen.star(n)) == S(*range(n))
    C6 = gen.cycle(6)
    assert max_critical_independent_set(C6) in omega_sets(C6)
    assert max_critical_independent_set(gen.cycle(5)) == 0


def test_p3_critical_sets():
    P3 = gen.path(3)
    assert is_critical_independent(P3, S(0, 2))
    assert not is_critical_independent(P3, S(0))
    assert enumerate_crit_indep(P3).to_json() == [[0, 2]]
    assert ker(P3) == S(0, 2)


def test_family_listings():
    assert enumerate_crit_indep(gen.cycle(5)).to_json() == [[]]
    C6 = gen.cycle(6)
    assert enumerate_crit_indep(C6).as_set() == omega_sets(C6).as_set() | {0}


def test_k1_has_no_empty_critical_set():
    K1 = Graph.empty(1)
    assert enumerate_crit_indep(K1).to_json() == [[0]]


@given(graphs(max_n=9))
def test_polynomial_difference_matches_both_brute_forces(G):
    d = critical_difference(G)
    assert d == brute_force_critical_difference(G) == brute_force_critical_independence_difference(G)


@given(graphs(max_n=9))
def test_seed_and_maximum_set(G):
    d = critical_difference(G)
    seed = critical_seed(G)
    assert G.is_independent(seed) and difference(G, seed) == d
    M = max_critical_independent_set(G)
    assert is_critical_independent(G, M, d) and is_inclusion_maximal_critical(G, M)
    assert M.bit_count() == enumerate_crit_indep(G).max_size


@given(graphs(max_n=8))
def test_extension_formula(G):
    from critcrown.independence import independent_sets

    ind = independent_sets(G)
    for T in ind[:: max(1, len(ind) // 6)]:
        best = max(difference(G, I) for I in ind if I & T == T)
        assert best_extension_difference(G, T) == best


@given(graphs(max_n=8))
def test_ker_inside_core(G):
    assert ker(G) & ~core(G) == 0
