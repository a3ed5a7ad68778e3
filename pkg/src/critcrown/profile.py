"""Per-graph cache of derived quantities shared by the reports and the check suites."""

from __future__ import annotations

from functools import cached_property

from .critical import critical_difference, enumerate_crit_indep, max_critical_independent_set
from .crowns import enumerate_crowns
from .graph import Graph, VertexSet
from .independence import DEFAULT_LIMITS, Limits, _check, alpha, independent_sets, is_well_covered, omega_sets
from .lmis import LocalDiagnostics, enumerate_psi, local_diagnostics
from .matching import Matching, PerfectMatchingStatus, max_matching, perfect_matching_status
from .setsystems import AxiomVerdict, SetFamily, is_augmentoid, is_greedoid

FAMILY_NAMES = ("crit_indep", "crown", "psi")


class GraphProfile:
    """Lazily computed invariants of one graph; each value is computed at most once."""

    def __init__(self, G: Graph, limits: Limits = DEFAULT_LIMITS):
        self.G = G
        self.limits = limits
        self._local: dict[VertexSet, LocalDiagnostics] = {}
        self._greedoid: dict[str, AxiomVerdict] = {}
        self._augmentoid: dict[str, AxiomVerdict] = {}

    @property
    def n(self) -> int:
        return self.G.n

    @property
    def within_family_limit(self) -> bool:
        return self.G.n <= self.limits.family

    @property
    def within_alpha_limit(self) -> bool:
        return self.G.n <= self.limits.alpha

    @property
    def within_omega_limit(self) -> bool:
        return self.G.n <= self.limits.omega

    # -- polynomial quantities -------------------------------------------------

    @cached_property
    def d(self) -> int:
        return critical_difference(self.G)

    @cached_property
    def matching(self) -> Matching:
        return max_matching(self.G)

    @property
    def mu(self) -> int:
        return len(self.matching)

    @cached_property
    def max_crit(self) -> VertexSet:
        return max_critical_independent_set(self.G)

    @cached_property
    def bipartition(self) -> tuple[VertexSet, VertexSet] | None:
        return self.G.bipartition()

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None

    @cached_property
    def triangle_free(self) -> bool:
        return self.G.is_triangle_free()

    @cached_property
    def tree(self) -> bool:
        return self.G.is_tree()

    @cached_property
    def forest(self) -> bool:
        return self.G.is_forest()

    @cached_property
    def pm_status(self) -> PerfectMatchingStatus:
        return perfect_matching_status(self.G)

    # -- exact (exponential) quantities ---------------------------------------------

    @cached_property
    def alpha(self) -> int:
        return alpha(self.G, self.limits)

    @property
    def tau(self) -> int:
        return self.G.n - self.alpha

    @cached_property
    def ke(self) -> bool:
        return self.alpha + self.mu == self.G.n

    @cached_property
    def omega(self) -> SetFamily:
        return omega_sets(self.G, self.limits)

    @cached_property
    def core(self) -> VertexSet:
        out = self.G.vertices
        for S in self.omega:
            out &= S
        return out

    @cached_property
    def independent_sets(self) -> list[VertexSet]:
        _check("independent_sets", self.G.n, self.limits.family)
        return independent_sets(self.G)

    @cached_property
    def crit(self) -> SetFamily:
        return enumerate_crit_indep(self.G, self.limits)

    @cached_property
    def crown(self) -> SetFamily:
        return enumerate_crowns(self.G, self.limits)

    @cached_property
    def psi(self) -> SetFamily:
        return enumerate_psi(self.G, self.limits)

    @cached_property
    def ker(self) -> VertexSet:
        out = self.G.vertices
        for S in self.crit:
            out &= S
        return out

    @cached_property
    def well_covered(self) -> bool:
        return is_well_covered(self.G, self.limits)

    @cached_property
    def very_well_covered(self) -> bool:
        return (
            self.G.n > 0
            and not self.G.isolated()
            and self.G.n == 2 * self.alpha
            and self.well_covered
        )

    def family(self, name: str) -> SetFamily:
        if name not in FAMILY_NAMES:
            raise KeyError(name)
        return getattr(self, {"crit_indep": "crit"}.get(name, name))

    def greedoid(self, name: str) -> AxiomVerdict:
        if name not in self._greedoid:
            self._greedoid[name] = is_greedoid(self.family(name))
        return self._greedoid[name]

    def augmentoid(self, name: str) -> AxiomVerdict:
        if name not in self._augmentoid:
            self._augmentoid[name] = is_augmentoid(self.family(name))
        return self._augmentoid[name]

    def local(self, S: VertexSet) -> LocalDiagnostics:
        if S not in self._local:
            self._local[S] = local_diagnostics(self.G, S, self.limits)
        return self._local[S]

    @cached_property
    def all_local_ke(self) -> bool:
        return all(self.local(S).konig_egervary for S in self.psi)

    @cached_property
    def all_local_ke_pm(self) -> bool:
        return all(self.local(S).konig_egervary and self.local(S).perfect_matching for S in self.psi)

    @cached_property
    def all_local_ke_upm(self) -> bool:
        return all(self.local(S).konig_egervary and self.local(S).unique_perfect_matching for S in self.psi)
