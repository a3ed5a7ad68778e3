"""Local maximum independent sets and comparisons between the three set families.

S is a local maximum independent set (LMIS) when it is a maximum independent
set of G[N[S]].  Psi(G) collects all of them.  The comparison report puts
CritIndep(G), Crown(G) and Psi(G) side by side together with the per-set
matching diagnostics that decide when they coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .critical import enumerate_crit_indep
from .crowns import enumerate_crowns
from .graph import Graph, VertexSet, members
from .independence import (
    DEFAULT_LIMITS,
    Limits,
    _check,
    alpha_exceeds,
    independent_sets,
    is_konig_egervary,
    omega_sets,
)
from .matching import perfect_matching_status
from .setsystems import AxiomVerdict, SetFamily, is_augmentoid, is_greedoid


class NotLMISError(ValueError):
    def __init__(self, name: str, S: VertexSet):
        self.name = name
        self.S = S
        super().__init__(f"{name}={members(S)} is not a local maximum independent set")


class NeighborhoodNotNestedError(ValueError):
    def __init__(self, S1: VertexSet, S2: VertexSet):
        self.S1 = S1
        self.S2 = S2
        super().__init__(f"N[{members(S1)}] is not contained in N[{members(S2)}]")


def is_lmis(G: Graph, S: VertexSet, limits: Limits = DEFAULT_LIMITS) -> bool:
    if not G.is_independent(S):
        return False
    closed = G.closed_nbhd(S)
    _check("is_lmis", closed.bit_count(), limits.alpha)
    return not alpha_exceeds(G, closed, S.bit_count())


def enumerate_psi(G: Graph, limits: Limits = DEFAULT_LIMITS) -> SetFamily:
    _check("enumerate_psi", G.n, limits.family)
    return SetFamily.of(G.n, (S for S in independent_sets(G) if is_lmis(G, S, limits)))


def _require_lmis(G: Graph, name: str, S: VertexSet, limits: Limits) -> None:
    if not is_lmis(G, S, limits):
        raise NotLMISError(name, S)


def lmis_augment(G: Graph, S1: VertexSet, S2: VertexSet, limits: Limits = DEFAULT_LIMITS,
                 validate: bool = True) -> VertexSet:
    """S1 | (S2 - N[S1]) for LMIS S1, S2 with N[S1] inside N[S2]; it is an LMIS of size |S2|.

    ``validate=False`` trusts that both inputs are LMIS; nesting is always checked.
    """
    if validate:
        _require_lmis(G, "S1", S1, limits)
        _require_lmis(G, "S2", S2, limits)
    closed1 = G.closed_nbhd(S1)
    if closed1 & ~G.closed_nbhd(S2):
        raise NeighborhoodNotNestedError(S1, S2)
    return S1 | (S2 & ~closed1)


def extend_to_maximum_independent(G: Graph, S1: VertexSet, limits: Limits = DEFAULT_LIMITS) -> VertexSet:
    """A maximum independent set containing the LMIS S1, drawn from the first member of Omega(G)."""
    _require_lmis(G, "S1", S1, limits)
    omega = omega_sets(G, limits)
    S2 = omega.members[0]
    out = S1 | (S2 & ~G.closed_nbhd(S1))
    if out.bit_count() != S2.bit_count() or not G.is_independent(out):
        raise AssertionError("extension did not produce a maximum independent set")
    return out


# -- family comparison ------------------------------------------------------------


@dataclass(frozen=True)
class LocalDiagnostics:
    """Matching facts about G[N[S]] for one S in Psi(G)."""

    S: VertexSet
    konig_egervary: bool
    perfect_matching: bool
    unique_perfect_matching: bool

    def to_json(self) -> dict:
        return {
            "S": members(self.S),
            "ke": self.konig_egervary,
            "perfect_matching": self.perfect_matching,
            "unique_perfect_matching": self.unique_perfect_matching,
        }


def local_diagnostics(G: Graph, S: VertexSet, limits: Limits = DEFAULT_LIMITS) -> LocalDiagnostics:
    H, _ = G.induced(G.closed_nbhd(S))
    status = perfect_matching_status(H)
    return LocalDiagnostics(S, is_konig_egervary(H, limits), status.exists, status.unique)


@dataclass(frozen=True)
class Comparison:
    """Whether two families coincide; otherwise a member of one missing from the other."""

    left: str
    right: str
    equal: bool
    only_left: VertexSet | None = None
    only_right: VertexSet | None = None

    def to_json(self) -> dict:
        out: dict = {"equal": self.equal}
        if self.only_left is not None:
            out[f"in_{self.left}_only"] = members(self.only_left)
        if self.only_right is not None:
            out[f"in_{self.right}_only"] = members(self.only_right)
        return out


def compare(left: str, F: SetFamily, right: str, H: SetFamily) -> Comparison:
    only_l = next((S for S in F if S not in H), None)
    only_r = next((S for S in H if S not in F), None)
    return Comparison(left, right, only_l is None and only_r is None, only_l, only_r)


@dataclass(frozen=True)
class FamilyRelationReport:
    crit: SetFamily
    crown: SetFamily
    psi: SetFamily
    crit_vs_crown: Comparison
    crown_vs_psi: Comparison
    crit_vs_psi: Comparison
    local: tuple[LocalDiagnostics, ...]
    greedoid: dict[str, AxiomVerdict] = field(default_factory=dict)
    augmentoid: dict[str, AxiomVerdict] = field(default_factory=dict)

    @property
    def crit_eq_crown(self) -> bool:
        return self.crit_vs_crown.equal

    @property
    def crown_eq_psi(self) -> bool:
        return self.crown_vs_psi.equal

    @property
    def crit_eq_psi(self) -> bool:
        return self.crit_vs_psi.equal

    @property
    def all_local_ke(self) -> bool:
        return all(x.konig_egervary for x in self.local)

    @property
    def all_local_ke_pm(self) -> bool:
        """Every S in Psi(G) has G[N[S]] Koenig-Egervary with a perfect matching."""
        return all(x.konig_egervary and x.perfect_matching for x in self.local)

    @property
    def all_local_ke_upm(self) -> bool:
        """Every S in Psi(G) has G[N[S]] Koenig-Egervary with a unique perfect matching."""
        return all(x.konig_egervary and x.unique_perfect_matching for x in self.local)

    def to_json(self) -> dict:
        return {
            "families": {
                "crit_indep": self.crit.to_json(),
                "crown": self.crown.to_json(),
                "psi": self.psi.to_json(),
            },
            "relations": {
                "crit_vs_crown": self.crit_vs_crown.to_json(),
                "crown_vs_psi": self.crown_vs_psi.to_json(),
                "crit_vs_psi": self.crit_vs_psi.to_json(),
            },
            "local": [x.to_json() for x in self.local],
            "greedoid": {k: v.to_json() for k, v in self.greedoid.items()},
            "augmentoid": {k: v.to_json() for k, v in self.augmentoid.items()},
        }


def family_relations_report(G: Graph, limits: Limits = DEFAULT_LIMITS,
                            axioms: bool = True) -> FamilyRelationReport:
    """All three families, their pairwise relations and per-LMIS diagnostics.

    ``axioms=False`` skips the greedoid/augmentoid checks, which dominate the
    cost on families with many members.
    """
    crit = enumerate_crit_indep(G, limits)
    crown = enumerate_crowns(G, limits)
    psi = enumerate_psi(G, limits)
    local = tuple(local_diagnostics(G, S, limits) for S in psi)
    greedoid: dict[str, AxiomVerdict] = {}
    augmentoid: dict[str, AxiomVerdict] = {}
    if axioms:
        for name, F in (("crit_indep", crit), ("crown", crown), ("psi", psi)):
            greedoid[name] = is_greedoid(F)
            augmentoid[name] = is_augmentoid(F)
    return FamilyRelationReport(
        crit, crown, psi,
        compare("crit_indep", crit, "crown", crown),
        compare("crown", crown, "psi", psi),
        compare("crit_indep", crit, "psi", psi),
        local, greedoid, augmentoid,
    )
