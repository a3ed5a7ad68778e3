from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import S
from critcrown.setsystems import (
    EmptyFamilyError,
    SetFamily,
    accessibility_chain,
    augmentation_witness,
    every_feasible_extends_to_maximum,
    is_augmentoid,
    is_greedoid,
)


def fam(*sets) -> SetFamily:
    return SetFamily.of(6, [S(*s) for s in sets])


def test_order_is_by_size_then_lexicographic():
    F = fam((1, 2), (0,), (), (0, 3), (2,))
    assert F.to_json() == [[], [0], [2], [0, 3], [1, 2]]


def test_p3_crown_family_is_a_greedoid():
    F = fam((), (0,), (2,), (0, 2))
    assert is_greedoid(F)
    assert accessibility_chain(F, S(0, 2)) in ([0, S(0), S(0, 2)], [0, S(2), S(0, 2)])


def test_c4_psi_is_augmentoid_not_greedoid():
    F = fam((), (0, 2), (1, 3))
    v = is_greedoid(F)
    assert not v and v.axiom == "accessibility" and v.witness == (S(0, 2),)
    assert accessibility_chain(F, S(0, 2)) is None
    assert is_augmentoid(F)
    assert augmentation_witness(F, S(0, 2), S(1, 3)) == (0, 0)


def test_exchange_failure():
    F = fam((), (0,), (1,), (0, 2), (1, 3))
    v = is_greedoid(F)
    assert not v and v.axiom == "exchange"


def test_augmentoid_failure():
    F = fam((), (0,), (1,), (0, 2))
    v = is_augmentoid(F)
    assert not v and set(v.witness) == {S(1), S(0, 2)} or v.witness == (S(0), S(1))


def test_empty_family_rejected():
    with pytest.raises(EmptyFamilyError):
        is_greedoid(SetFamily.of(3, []))
    with pytest.raises(ValueError):
        SetFamily.of(2, [S(3)])


def brute_augmentoid(F: SetFamily) -> bool:
    for X in F:
        for Y in F:
            found = False
            for A in range(1 << 6):
                if A & ~(X & ~Y) or (Y | A) not in F:
                    continue
                for B in range(1 << 6):
                    if B & ~(Y & ~X) or (X | B) not in F:
                        continue
                    if (Y | A).bit_count() == (X | B).bit_count():
                        found = True
                        break
                if found:
                    break
            if not found:
                return False
    return True


families = st.sets(st.integers(0, 63), min_size=1, max_size=8).map(lambda s: SetFamily.of(6, s))


@given(families)
def test_augmentoid_checker_matches_definition(F):
    assert bool(is_augmentoid(F)) == brute_augmentoid(F)


@given(families)
def test_augmentoids_extend_to_maximum_members(F):
    if is_augmentoid(F):
        assert every_feasible_extends_to_maximum(F)


@given(families)
def test_greedoid_implies_augmentoid(F):
    if is_greedoid(F):
        assert is_augmentoid(F)
