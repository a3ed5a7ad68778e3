"""Per-graph property checks.

Each check inspects one :class:`GraphProfile` and returns an :class:`Outcome`:
``pass`` (optionally tagged, e.g. with which side of an equivalence held),
``n/a`` when its hypothesis does not apply, ``fail`` with the offending sets,
or ``finding`` for open questions where disagreement is data rather than a bug.
Checks that need exponential work beyond the configured limits report
``skipped(limit)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .critical import (
    brute_force_critical_difference,
    brute_force_critical_independence_difference,
    double_cover,
    is_inclusion_maximal_critical,
)
from .crowns import crown_augment, crown_reduce_vertex_cover, hall_crown_oracle, is_crown, max_crown
from .graph import Graph, VertexSet, difference, iter_bits, members
from .independence import SizeLimitError, alpha, alpha_within, naive_alpha
from .lmis import lmis_augment
from .matching import (
    brute_force_matching_number,
    count_perfect_matchings,
    max_bipartite_matching,
)
from .profile import FAMILY_NAMES, GraphProfile
from .setsystems import SetFamily, every_feasible_extends_to_maximum


@dataclass(frozen=True)
class Outcome:
    status: str  # pass | fail | n/a | finding | skipped(limit)
    tag: str | None = None
    details: dict = field(default_factory=dict)


PASS = Outcome("pass")
NA = Outcome("n/a")


def ok(tag: str | None = None) -> Outcome:
    return Outcome("pass", tag)


def fail(**details) -> Outcome:
    return Outcome("fail", None, _jsonable(details))


def _jsonable(details: dict) -> dict:
    return {k: (members(v) if isinstance(v, _SetArg) else v) for k, v in details.items()}


class _SetArg(int):
    """Marks an int in failure details as a vertex set to be rendered as a list."""


def vs(S: VertexSet) -> _SetArg:
    return _SetArg(S)


def iff_tag(left: bool, right: bool) -> str:
    return "both-true" if left else "both-false"


@dataclass(frozen=True)
class Check:
    name: str
    summary: str
    run: Callable[[GraphProfile], Outcome]
    max_n: int | None = None
    finding: bool = False


REGISTRY: dict[str, Check] = {}


def check(name: str, summary: str, max_n: int | None = None, finding: bool = False):
    def register(fn: Callable[[GraphProfile], Outcome]) -> Callable[[GraphProfile], Outcome]:
        if name in REGISTRY:
            raise ValueError(f"duplicate check {name}")
        REGISTRY[name] = Check(name, summary, fn, max_n, finding)
        return fn
    return register


def _pairs(F: SetFamily) -> Iterable[tuple[VertexSet, VertexSet]]:
    return combinations(F.members, 2)


# -- families ----------------------------------------------------------------------


@check("inclusion-chain", "CritIndep(G) within Crown(G) within Psi(G)")
def _inclusion_chain(P: GraphProfile) -> Outcome:
    for S in P.crit:
        if S not in P.crown:
            return fail(S=vs(S), member_of="crit_indep", missing_from="crown")
    for S in P.crown:
        if S not in P.psi:
            return fail(S=vs(S), member_of="crown", missing_from="psi")
    return PASS


@check("critical-difference", "polynomial d(G) = max d(I) over independent I = max d(X) over all X", max_n=20)
def _critical_difference(P: GraphProfile) -> Outcome:
    d_ind = brute_force_critical_independence_difference(P.G) if P.within_family_limit else None
    d_all = brute_force_critical_difference(P.G)
    if P.d != d_all or (d_ind is not None and d_ind != d_all) or P.d < 0:
        return fail(double_cover=P.d, over_independent_sets=d_ind, over_all_sets=d_all)
    return PASS


@check("max-critical-set", "extracted set is critical, inclusion-maximal and of maximum size")
def _max_critical_set(P: GraphProfile) -> Outcome:
    G, S = P.G, P.max_crit
    if not G.is_independent(S) or difference(G, S) != P.d:
        return fail(S=vs(S), reason="not critical independent")
    if not is_inclusion_maximal_critical(G, S):
        return fail(S=vs(S), reason="a critical independent proper superset exists")
    if S.bit_count() != P.crit.max_size:
        return fail(S=vs(S), reason="smaller than the largest enumerated critical set",
                    largest=P.crit.max_size)
    return PASS


@check("max-crit-equals-max-crown", "maximum critical sets and maximum crowns coincide and share d and N[.]")
def _max_crit_equals_max_crown(P: GraphProfile) -> Outcome:
    mc = P.crit.maximum_members()
    mw = P.crown.maximum_members()
    if mc != mw:
        only = sorted(set(mc) ^ set(mw))
        return fail(S=vs(only[0]), reason="families of maximum members differ")
    G = P.G
    first = mw[0]
    d0, closed0 = difference(G, first), G.closed_nbhd(first)
    for S in mw[1:]:
        if difference(G, S) != d0 or G.closed_nbhd(S) != closed0:
            return fail(A=vs(first), B=vs(S), reason="maximum crowns differ in d or N[.]")
    if P.max_crit not in P.crown or P.max_crit.bit_count() != first.bit_count():
        return fail(S=vs(P.max_crit), reason="extracted set is not a maximum crown")
    cert = is_crown(G, max_crown(G))
    if cert is None:
        return fail(S=vs(max_crown(G)), reason="maximum crown has no certificate")
    cert.check(G)
    return PASS


@check("ker", "ker within core, isolated vertices within ker, |ker| != 1 without isolated vertices, ker a crown")
def _ker(P: GraphProfile) -> Outcome:
    G, K = P.G, P.ker
    if K & ~P.core:
        return fail(ker=vs(K), core=vs(P.core), reason="ker not within core")
    if G.isolated() & ~K:
        return fail(ker=vs(K), reason="isolated vertex outside ker")
    if not G.isolated() and K.bit_count() == 1:
        return fail(ker=vs(K), reason="|ker| = 1 without isolated vertices")
    if P.bipartite and K != P.core:
        return fail(ker=vs(K), core=vs(P.core), reason="bipartite graph with ker != core")
    if K not in P.crown:
        return fail(ker=vs(K), reason="ker is not a crown")
    return PASS


@check("boundary-matching", "for crowns A, B a perfect matching joins A & N(B) and B & N(A)")
def _boundary_matching(P: GraphProfile) -> Outcome:
    G = P.G
    for A, B in _pairs(P.crown):
        left = A & G.nbhd(B)
        right = B & G.nbhd(A)
        if left.bit_count() != right.bit_count():
            return fail(A=vs(A), B=vs(B), reason="boundary sets differ in size")
        if left and len(max_bipartite_matching(G, left, right)) != left.bit_count():
            return fail(A=vs(A), B=vs(B), reason="no perfect matching between boundary sets")
    return PASS


# -- Koenig-Egervary graphs --------------------------------------------------------


@check("ke-identities", "KE graphs: d = |core| - |N(core)| = alpha - mu")
def _ke_identities(P: GraphProfile) -> Outcome:
    if not P.ke:
        return NA
    via_core = P.core.bit_count() - P.G.nbhd(P.core).bit_count()
    if not P.d == via_core == P.alpha - P.mu:
        return fail(d=P.d, core_difference=via_core, alpha_minus_mu=P.alpha - P.mu)
    return PASS


@check("ke-iff-maximum-sets-critical", "KE iff every maximum independent set is critical")
def _ke_iff_omega_critical(P: GraphProfile) -> Outcome:
    rhs = all(S in P.crit for S in P.omega)
    if P.ke != rhs:
        bad = next((S for S in P.omega if S not in P.crit), None)
        return fail(ke=P.ke, all_maximum_critical=rhs, S=None if bad is None else members(bad))
    return ok(iff_tag(P.ke, rhs))


@check("ke-crown-equivalences", "KE iff Crown meets Omega iff MaxCrown meets Omega iff MaxCrown = Omega")
def _ke_crown_equivalences(P: GraphProfile) -> Outcome:
    omega = P.omega.as_set()
    max_crowns = set(P.crown.maximum_members())
    flags = [
        P.ke,
        any(S in P.crown for S in omega),
        bool(max_crowns & omega),
        max_crowns == set(omega),
    ]
    if len(set(flags)) != 1:
        return fail(ke=flags[0], crown_meets_omega=flags[1], max_crown_meets_omega=flags[2],
                    max_crown_equals_omega=flags[3])
    if P.ke:
        if any(S not in P.crown for S in omega):
            return fail(reason="maximum independent set of a KE graph is not a crown")
        if P.core not in P.crown:
            return fail(core=vs(P.core), reason="core of a KE graph is not a crown")
    return ok(iff_tag(flags[0], flags[0]))


@check("crown-neighbourhood-ke", "G[N[S]] is KE for every crown S, with a perfect matching when S is straight")
def _crown_local_ke(P: GraphProfile) -> Outcome:
    G = P.G
    for S in P.crown:
        diag = P.local(S)
        if not diag.konig_egervary:
            return fail(S=vs(S), reason="G[N[S]] is not KE")
        if S.bit_count() == G.nbhd(S).bit_count() and not diag.perfect_matching:
            return fail(S=vs(S), reason="straight crown without a perfect matching on G[N[S]]")
    return PASS


# -- crowns ------------------------------------------------------------------------


@check("crown-union", "union of two crowns is a crown when it is independent")
def _crown_union(P: GraphProfile) -> Outcome:
    G = P.G
    for A, B in _pairs(P.crown):
        U = A | B
        if G.is_independent(U) and U not in P.crown:
            return fail(A=vs(A), B=vs(B))
    return PASS


@check("crown-subset-difference", "A within a crown B has d(A) <= d(B); non-crowns have a subset of larger d")
def _crown_subset_difference(P: GraphProfile) -> Outcome:
    G = P.G
    for S in P.independent_sets:
        dS = difference(G, S)
        worse = _subset_with_larger_difference(G, S, dS)
        if (S in P.crown) != (worse is None):
            return fail(S=vs(S), crown=S in P.crown, subset=None if worse is None else members(worse))
    return PASS


def _subset_with_larger_difference(G: Graph, S: VertexSet, dS: int) -> VertexSet | None:
    sub = S
    while sub:
        sub = (sub - 1) & S
        if difference(G, sub) > dS:
            return sub
    return None


@check("crown-augmentation", "A | (B - N[A]) and B | (A - N[B]) are crowns of equal size for crowns A, B")
def _crown_augmentation(P: GraphProfile) -> Outcome:
    G = P.G
    certified: set[VertexSet] = set()
    for A, B in _pairs(P.crown):
        A1, B1 = crown_augment(G, A, B, validate=False)
        if A1.bit_count() != B1.bit_count():
            return fail(A=vs(A), B=vs(B), A1=vs(A1), B1=vs(B1), reason="sizes differ")
        for out in (A1, B1):
            if out in certified:
                continue
            cert = is_crown(G, out)
            if cert is None:
                return fail(A=vs(A), B=vs(B), result=vs(out), reason="result is not a crown")
            cert.check(G)
            certified.add(out)
    return PASS


@check("augmentoid", "Crown(G) and CritIndep(G) are augmentoids and every member extends to a maximum one")
def _augmentoid(P: GraphProfile) -> Outcome:
    for name in ("crown", "crit_indep"):
        verdict = P.augmentoid(name)
        if not verdict:
            return fail(family=name, witness=[members(s) for s in verdict.witness])
        ext = every_feasible_extends_to_maximum(P.family(name))
        if not ext:
            return fail(family=name, reason="member not extendable", witness=[members(s) for s in ext.witness])
    return PASS


@check("greedoid-witnesses", "greedoid implies augmentoid; failure witnesses really violate their axiom")
def _greedoid_witnesses(P: GraphProfile) -> Outcome:
    for name in FAMILY_NAMES:
        F = P.family(name)
        verdict = P.greedoid(name)
        if verdict:
            if not P.augmentoid(name):
                return fail(family=name, reason="greedoid that is not an augmentoid")
            continue
        if verdict.axiom == "accessibility":
            (X,) = verdict.witness
            if any(X & ~(1 << x) in F for x in iter_bits(X)):
                return fail(family=name, X=vs(X), reason="bogus accessibility witness")
        else:
            X, Y = verdict.witness
            if X.bit_count() != Y.bit_count() + 1 or any(Y | (1 << x) in F for x in iter_bits(X & ~Y)):
                return fail(family=name, X=vs(X), Y=vs(Y), reason="bogus exchange witness")
    return PASS


@check("crown-enlargement", "every crown grows into a maximum crown and lies in N[M] for each maximum crown M")
def _crown_enlargement(P: GraphProfile) -> Outcome:
    G = P.G
    M = P.max_crit
    max_crowns = P.crown.maximum_members()
    closures = [G.closed_nbhd(T) for T in max_crowns]
    for A in P.crown:
        E, _ = crown_augment(G, A, M, validate=False)
        if E & A != A or E.bit_count() != M.bit_count() or E not in P.crown:
            return fail(A=vs(A), result=vs(E), reason="enlargement is not a maximum crown containing A")
        for T, closed in zip(max_crowns, closures):
            if A & ~closed:
                return fail(A=vs(A), maximum=vs(T), reason="crown not within N[maximum crown]")
    return PASS


@check("critical-split", "alpha(G) = alpha(G[N[A]]) + alpha(G - N[A]) for critical independent A")
def _critical_split(P: GraphProfile) -> Outcome:
    G = P.G
    for A in P.crit:
        closed = G.closed_nbhd(A)
        parts = alpha_within(G, closed) + alpha_within(G, G.vertices & ~closed)
        if parts != P.alpha:
            return fail(A=vs(A), alpha=P.alpha, split=parts)
    return PASS


# -- local maximum independent sets ----------------------------------------------------


@check("omega-within-psi", "maximum independent sets are LMIS; critical sets lie in maximum independent sets")
def _omega_in_psi(P: GraphProfile) -> Outcome:
    for S in P.omega:
        if S not in P.psi:
            return fail(S=vs(S), reason="maximum independent set missing from Psi")
    for A in P.crit:
        if not any(A & S == A for S in P.omega):
            return fail(A=vs(A), reason="critical set in no maximum independent set")
    return PASS


@check("lmis-union", "union of two disjoint LMIS is an LMIS when it is independent")
def _lmis_union(P: GraphProfile) -> Outcome:
    G = P.G
    for A, B in _pairs(P.psi):
        if A & B:
            continue
        U = A | B
        if G.is_independent(U) and U not in P.psi:
            return fail(A=vs(A), B=vs(B))
    return PASS


@check("lmis-augmentation", "S1 | (S2 - N[S1]) is an LMIS of size |S2| when N[S1] lies in N[S2]")
def _lmis_augmentation(P: GraphProfile) -> Outcome:
    G = P.G
    psi = P.psi.members
    closed = {S: G.closed_nbhd(S) for S in psi}
    for S1 in psi:
        for S2 in psi:
            if closed[S1] & ~closed[S2]:
                continue
            R = lmis_augment(G, S1, S2, P.limits, validate=False)
            if R not in P.psi or R.bit_count() != S2.bit_count():
                return fail(S1=vs(S1), S2=vs(S2), result=vs(R))
        for S2 in P.omega:
            R = S1 | (S2 & ~closed[S1])
            if R not in P.omega:
                return fail(S1=vs(S1), S2=vs(S2), result=vs(R), reason="extension is not maximum")
    return PASS


@check("crown-psi-iff-local-ke", "Crown = Psi iff G[N[S]] is KE for every S in Psi; then G is KE")
def _crown_psi_iff_local_ke(P: GraphProfile) -> Outcome:
    lhs = P.crown.as_set() == P.psi.as_set()
    rhs = P.all_local_ke
    if lhs != rhs or (lhs and not P.ke):
        return fail(crown_equals_psi=lhs, all_local_ke=rhs, ke=P.ke)
    return ok(iff_tag(lhs, rhs))


@check("bipartite-crown-psi", "bipartite graphs have Crown = Psi")
def _bipartite_crown_psi(P: GraphProfile) -> Outcome:
    if not P.bipartite:
        return NA
    if P.crown.as_set() != P.psi.as_set():
        S = next(iter(P.psi.as_set() ^ P.crown.as_set()))
        return fail(S=vs(S))
    return PASS


@check("ke-perfect-matching-crit-crown", "KE graphs with a perfect matching have CritIndep = Crown")
def _ke_pm_crit_crown(P: GraphProfile) -> Outcome:
    if not (P.ke and P.pm_status.exists):
        return NA
    if P.crit.as_set() != P.crown.as_set():
        S = next(iter(P.crit.as_set() ^ P.crown.as_set()))
        return fail(S=vs(S))
    return PASS


@check("crit-psi-forces-ke-pm", "CritIndep = Psi forces a KE graph with a perfect matching")
def _crit_psi_forces_ke_pm(P: GraphProfile) -> Outcome:
    if P.crit.as_set() != P.psi.as_set():
        return NA
    if not (P.ke and P.pm_status.exists):
        return fail(ke=P.ke, perfect_matching=P.pm_status.exists)
    return PASS


@check("bipartite-crit-psi-iff-pm", "bipartite: CritIndep = Psi iff a perfect matching exists")
def _bipartite_crit_psi_iff_pm(P: GraphProfile) -> Outcome:
    if not P.bipartite:
        return NA
    lhs = P.crit.as_set() == P.psi.as_set()
    rhs = P.pm_status.exists
    if lhs != rhs:
        return fail(crit_equals_psi=lhs, perfect_matching=rhs)
    return ok(iff_tag(lhs, rhs))


@check("bipartite-crit-greedoid-iff-upm", "bipartite: CritIndep is a greedoid iff the perfect matching is unique")
def _bipartite_crit_greedoid_iff_upm(P: GraphProfile) -> Outcome:
    if not P.bipartite:
        return NA
    lhs = bool(P.greedoid("crit_indep"))
    rhs = P.pm_status.unique
    if lhs != rhs:
        return fail(crit_greedoid=lhs, unique_perfect_matching=rhs, pm=P.pm_status.kind)
    if lhs and P.crit.as_set() != P.psi.as_set():
        return fail(reason="greedoid CritIndep differs from Psi")
    return ok(iff_tag(lhs, rhs))


@check("three-families-iff-local-ke-pm",
       "CritIndep = Crown = Psi iff every G[N[S]], S in Psi, is KE with a perfect matching")
def _three_families(P: GraphProfile) -> Outcome:
    lhs = P.crit.as_set() == P.crown.as_set() == P.psi.as_set()
    rhs = P.all_local_ke_pm
    if lhs != rhs:
        bad = next((S for S in P.psi if not (P.local(S).konig_egervary and P.local(S).perfect_matching)), None)
        return fail(families_equal=lhs, all_local_ke_pm=rhs, S=None if bad is None else members(bad))
    if lhs and not (P.ke and P.pm_status.exists):
        return fail(reason="equal families without a KE perfect-matching graph")
    return ok(iff_tag(lhs, rhs))


@check("triangle-free-greedoid-sufficient",
       "triangle-free, unique perfect matching and KE perfect-matching neighbourhoods imply CritIndep greedoid")
def _triangle_free_sufficient(P: GraphProfile) -> Outcome:
    if not P.triangle_free:
        return NA
    if not (P.pm_status.unique and P.all_local_ke_pm):
        return NA
    if not P.greedoid("crit_indep"):
        return fail(witness=P.greedoid("crit_indep").to_json())
    return PASS


@check("crit-crown-forces-zero", "CritIndep = Crown forces d(G) = 0")
def _crit_crown_zero(P: GraphProfile) -> Outcome:
    if P.crit.as_set() != P.crown.as_set():
        return NA
    if P.d != 0:
        return fail(d=P.d)
    return PASS


@check("tree-equivalences", "trees of order >= 2: CritIndep=Crown, CritIndep=Psi, d=0, perfect matching, "
                            "CritIndep greedoid all agree")
def _tree_equivalences(P: GraphProfile) -> Outcome:
    if not (P.tree and P.n >= 2):
        return NA
    flags = {
        "crit_equals_crown": P.crit.as_set() == P.crown.as_set(),
        "crit_equals_psi": P.crit.as_set() == P.psi.as_set(),
        "d_zero": P.d == 0,
        "perfect_matching": P.pm_status.exists,
        "crit_greedoid": bool(P.greedoid("crit_indep")),
    }
    if len(set(flags.values())) != 1:
        return fail(**flags)
    return ok(iff_tag(flags["d_zero"], flags["d_zero"]))


@check("forest-greedoids", "forests have Psi a greedoid; trees have Crown a greedoid")
def _forest_greedoids(P: GraphProfile) -> Outcome:
    if not P.forest:
        return NA
    if not P.greedoid("psi"):
        return fail(family="psi", witness=P.greedoid("psi").to_json())
    if P.tree and not P.greedoid("crown"):
        return fail(family="crown", witness=P.greedoid("crown").to_json())
    return PASS


@check("very-well-covered", "very well-covered: Crown = Psi, local KE, and S in Psi iff |S| = |N(S)|")
def _very_well_covered(P: GraphProfile) -> Outcome:
    if not P.very_well_covered:
        return NA
    if P.crown.as_set() != P.psi.as_set():
        return fail(reason="Crown != Psi")
    if not P.all_local_ke:
        return fail(reason="some G[N[S]] is not KE")
    G = P.G
    for S in P.independent_sets:
        if (S in P.psi) != (S.bit_count() == G.nbhd(S).bit_count()):
            return fail(S=vs(S), in_psi=S in P.psi)
    return PASS


# -- kernelization -------------------------------------------------------------------


@check("kernelizer", "tau(G) = tau(kernel) + sum |N(S_i)|; an exhausted budget means tau(G) > k")
def _kernelizer(P: GraphProfile) -> Outcome:
    G = P.G
    res = crown_reduce_vertex_cover(G, G.n)
    if not res.feasible:
        return fail(reason="budget n reported infeasible")
    tau_kernel = res.kernel.n - alpha(res.kernel, P.limits)
    if P.tau != tau_kernel + res.removed_cover:
        return fail(tau=P.tau, tau_kernel=tau_kernel, removed=res.removed_cover)
    if max_crown(res.kernel):
        return fail(reason="kernel still has a nonempty crown")
    sub, _ = G.induced(sum(1 << v for v in res.vertex_map))
    if sub.adj != res.kernel.adj:
        return fail(reason="kernel is not the subgraph induced by the kept vertices")
    if P.tau >= 1:
        k = P.tau - 1
        tight = crown_reduce_vertex_cover(G, k)
        if tight.feasible:
            tk = tight.kernel.n - alpha(tight.kernel, P.limits)
            if tk <= tight.k:
                return fail(k=k, reason="budget below tau but kernel admits a cover within k'")
    return PASS


# -- algorithm oracles -------------------------------------------------------------------


@check("matching-oracle", "blossom matching size equals brute force; perfect-matching status agrees with counting",
       max_n=14)
def _matching_oracle(P: GraphProfile) -> Outcome:
    G = P.G
    P.matching.check(G)
    brute = brute_force_matching_number(G)
    if P.mu != brute:
        return fail(blossom=P.mu, brute_force=brute)
    count = count_perfect_matchings(G)
    kind = "none" if count == 0 else "unique" if count == 1 else "multiple"
    st = P.pm_status
    if st.kind != kind:
        return fail(status=st.kind, perfect_matchings=count)
    for M in (st.matching, st.other):
        if M is not None:
            M.check(G)
            if 2 * len(M) != G.n:
                return fail(reason="witness is not perfect", matching=M.to_json())
    if st.other is not None and st.other == st.matching:
        return fail(reason="multiple-status witnesses coincide")
    return PASS


@check("bipartite-matching-oracle",
       "Hopcroft-Karp on the double cover and on crown instances equals brute force", max_n=16)
def _bipartite_matching_oracle(P: GraphProfile) -> Outcome:
    G = P.G
    B = double_cover(G)
    M = max_bipartite_matching(B.graph, B.left, B.right)
    M.check(B.graph)
    # deficiency form of Koenig's theorem on the cover: mu(B) = n - max_X (|X| - |N(X)|)
    deficiency = G.n - brute_force_critical_difference(G)
    if len(M) != deficiency:
        return fail(hopcroft_karp=len(M), deficiency=deficiency, instance="double cover")
    if G.n <= 7:
        brute = brute_force_matching_number(B.graph, B.left, B.right)
        if len(M) != brute:
            return fail(hopcroft_karp=len(M), brute_force=brute, instance="double cover")
    for S in P.independent_sets:
        nb = G.nbhd(S)
        M = max_bipartite_matching(G, nb, S)
        brute = brute_force_matching_number(G, nb, S)
        if len(M) != brute:
            return fail(S=vs(S), hopcroft_karp=len(M), brute_force=brute, instance="crown")
    return PASS


@check("alpha-oracle", "branch-and-bound alpha and Omega agree with exhaustive enumeration", max_n=16)
def _alpha_oracle(P: GraphProfile) -> Outcome:
    G = P.G
    naive = naive_alpha(G)
    if P.alpha != naive:
        return fail(branch_and_bound=P.alpha, naive=naive)
    brute_omega = {S for S in P.independent_sets if S.bit_count() == naive}
    if brute_omega != P.omega.as_set():
        return fail(reason="Omega differs from enumeration")
    if any(P.core & ~S for S in P.omega):
        return fail(reason="core not within a maximum independent set")
    if P.bipartite and not P.ke:
        return fail(reason="bipartite graph that is not KE")
    return PASS


@check("crown-oracle", "matching-based crown test agrees with Hall's condition; certificates re-validate",
       max_n=12)
def _crown_oracle(P: GraphProfile) -> Outcome:
    G = P.G
    for S in P.independent_sets:
        cert = is_crown(G, S)
        if (cert is not None) != hall_crown_oracle(G, S):
            return fail(S=vs(S), matching_test=cert is not None)
        if cert is not None:
            cert.check(G)
    return PASS


@check("psi-oracle", "LMIS test agrees with exhaustive alpha of G[N[S]]", max_n=12)
def _psi_oracle(P: GraphProfile) -> Outcome:
    G = P.G
    for S in P.independent_sets:
        H, _ = G.induced(G.closed_nbhd(S))
        if (S in P.psi) != (naive_alpha(H) == S.bit_count()):
            return fail(S=vs(S), in_psi=S in P.psi)
    return PASS


# -- open questions ----------------------------------------------------------------


@check("conjecture-triangle-free",
       "triangle-free: CritIndep greedoid vs every G[N[S]] KE with a unique perfect matching",
       finding=True)
def _conjecture(P: GraphProfile) -> Outcome:
    if not P.triangle_free:
        return NA
    lhs = bool(P.greedoid("crit_indep"))
    rhs = P.all_local_ke_upm
    if lhs != rhs:
        bad = next((S for S in P.psi
                    if not (P.local(S).konig_egervary and P.local(S).unique_perfect_matching)), None)
        return Outcome("finding", None, {"crit_greedoid": lhs, "all_local_ke_upm": rhs,
                                         "S": None if bad is None else members(bad)})
    return ok(iff_tag(lhs, rhs))


# -- runner ------------------------------------------------------------------------


def run_check(chk: Check, P: GraphProfile) -> Outcome:
    if chk.max_n is not None and P.n > chk.max_n:
        return Outcome("skipped(limit)")
    try:
        return chk.run(P)
    except SizeLimitError:
        return Outcome("skipped(limit)")


def run_checks(G: Graph, names: Iterable[str] | None = None, profile: GraphProfile | None = None,
               **profile_kwargs) -> dict[str, Outcome]:
    P = profile if profile is not None else GraphProfile(G, **profile_kwargs)
    chosen = REGISTRY if names is None else {n: REGISTRY[n] for n in names}
    return {name: run_check(chk, P) for name, chk in chosen.items()}
