"""Set families and the greedoid / augmentoid axiom checkers.

Families are small (they come from graphs on a dozen vertices), so every
checker is an exhaustive oracle rather than a heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import VertexSet, iter_bits, members, set_key


class EmptyFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class SetFamily:
    """Distinct vertex sets over ``0..ground_size-1`` in canonical (size, lex) order."""

    ground_size: int
    members: tuple[VertexSet, ...]
    _lookup: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ordered = tuple(sorted(set(self.members), key=set_key))
        full = (1 << self.ground_size) - 1
        for s in ordered:
            if s & ~full or s < 0:
                raise ValueError(f"member {members(s)} outside the ground set")
        object.__setattr__(self, "members", ordered)
        object.__setattr__(self, "_lookup", frozenset(ordered))

    @classmethod
    def of(cls, ground_size: int, sets: Iterable[VertexSet]) -> SetFamily:
        return cls(ground_size, tuple(sets))

    def __contains__(self, s: VertexSet) -> bool:
        return s in self._lookup

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def as_set(self) -> frozenset:
        return self._lookup

    @property
    def max_size(self) -> int:
        return max((s.bit_count() for s in self.members), default=0)

    def maximum_members(self) -> list[VertexSet]:
        k = self.max_size
        return [s for s in self.members if s.bit_count() == k]

    def to_json(self) -> list[list[int]]:
        return [members(s) for s in self.members]


@dataclass(frozen=True)
class AxiomVerdict:
    holds: bool
    axiom: str | None = None
    witness: tuple[VertexSet, ...] = ()

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        out: dict = {"holds": self.holds}
        if not self.holds:
            out["axiom"] = self.axiom
            out["witness"] = [members(s) for s in self.witness]
        return out


def _require_nonempty(F: SetFamily) -> None:
    if not len(F):
        raise EmptyFamilyError("set system must be non-empty")


def accessibility_violation(F: SetFamily) -> VertexSet | None:
    for X in F:
        if X and not any(X & ~(1 << x) in F for x in iter_bits(X)):
            return X
    return None


def exchange_violation(F: SetFamily) -> tuple[VertexSet, VertexSet] | None:
    by_size: dict[int, list[VertexSet]] = {}
    for S in F:
        by_size.setdefault(S.bit_count(), []).append(S)
    for k, bigger in by_size.items():
        for X in bigger:
            for Y in by_size.get(k - 1, ()):
                if not any(Y | (1 << x) in F for x in iter_bits(X & ~Y)):
                    return X, Y
    return None


def is_greedoid(F: SetFamily) -> AxiomVerdict:
    _require_nonempty(F)
    X = accessibility_violation(F)
    if X is not None:
        return AxiomVerdict(False, "accessibility", (X,))
    pair = exchange_violation(F)
    if pair is not None:
        return AxiomVerdict(False, "exchange", pair)
    return AxiomVerdict(True)


def _subsets_by_size(mask: VertexSet):
    elems = [1 << v for v in iter_bits(mask)]
    for r in range(len(elems) + 1):
        for combo in combinations(elems, r):
            yield sum(combo)


def augmentation_witness(F: SetFamily, X: VertexSet, Y: VertexSet) -> tuple[VertexSet, VertexSet] | None:
    """Smallest ``(A, B)`` with A within X-Y, B within Y-X, Y|A and X|B feasible and equal in size."""
    # sizes reachable from Y by adding subsets of X-Y, smallest A first
    from_y: dict[int, VertexSet] = {}
    for A in _subsets_by_size(X & ~Y):
        if Y | A in F:
            from_y.setdefault((Y | A).bit_count(), A)
    if not from_y:
        return None
    best = None
    for B in _subsets_by_size(Y & ~X):
        if X | B in F:
            A = from_y.get((X | B).bit_count())
            if A is not None:
                cand = (A, B)
                key = (A.bit_count() + B.bit_count(), set_key(A), set_key(B))
                if best is None or key < best[0]:
                    best = (key, cand)
    return None if best is None else best[1]


def is_augmentoid(F: SetFamily) -> AxiomVerdict:
    _require_nonempty(F)
    sets = F.members
    for i, X in enumerate(sets):
        for Y in sets[i + 1:]:
            # comparable pairs are trivially fine: take the larger set on both sides
            if X & Y == X or X & Y == Y:
                continue
            # A = X-Y, B = Y-X lands both sides on X|Y
            if X | Y in F:
                continue
            if augmentation_witness(F, X, Y) is None:
                return AxiomVerdict(False, "augmentation", (X, Y))
    return AxiomVerdict(True)


def accessibility_chain(F: SetFamily, S: VertexSet) -> list[VertexSet] | None:
    """Chain 0 = S_0 < S_1 < ... < S_k = S of members with |S_i| = i, or ``None``."""
    if S not in F:
        raise ValueError(f"{members(S)} is not a member of the family")
    dead: set[VertexSet] = set()

    def descend(X: VertexSet) -> list[VertexSet] | None:
        if not X:
            return [0]
        for x in iter_bits(X):
            Y = X & ~(1 << x)
            if Y in F and Y not in dead:
                chain = descend(Y)
                if chain is not None:
                    chain.append(X)
                    return chain
                dead.add(Y)
        return None

    return descend(S)


def every_feasible_extends_to_maximum(F: SetFamily) -> AxiomVerdict:
    _require_nonempty(F)
    tops = F.maximum_members()
    for X in F:
        if not any(X & T == X for T in tops):
            return AxiomVerdict(False, "extends-to-maximum", (X,))
    return AxiomVerdict(True)
