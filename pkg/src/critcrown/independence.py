"""Exact independence computations for desk-scale graphs.

Two alpha engines live here: a bit-set branch-and-bound with a clique-cover
bound (:func:`alpha`) and a plain subset enumeration (:func:`naive_alpha`) that
serves as its oracle.  Enumerations refuse graphs above the configured limits
instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, iter_bits
from .matching import matching_number
from .setsystems import SetFamily


@dataclass(frozen=True)
class Limits:
    """Size limits for exact work.

    alpha:  largest n for branch-and-bound alpha
    omega:  largest n for enumerating maximum independent sets
    family: largest n for enumerating Ind-based families (CritIndep, Crown, Psi)
    """

    alpha: int = 40
    omega: int = 25
    family: int = 16

    def __post_init__(self):
        if min(self.alpha, self.omega, self.family) < 1:
            raise ValueError("limits must be >= 1")


DEFAULT_LIMITS = Limits()


class SizeLimitError(ValueError):
    def __init__(self, what: str, n: int, limit: int):
        self.what = what
        self.n = n
        self.limit = limit
        super().__init__(f"{what}: n={n} exceeds the exact-size limit {limit}")


def _check(what: str, n: int, limit: int) -> None:
    if n > limit:
        raise SizeLimitError(what, n, limit)


# -- branch and bound --------------------------------------------------------------


def _clique_cover(adj, P: VertexSet) -> tuple[list[int], list[int]]:
    """Order P into greedy cliques; ``bound[i]`` counts cliques among ``order[:i+1]``."""
    order: list[int] = []
    bound: list[int] = []
    k = 0
    rest = P
    while rest:
        k += 1
        Q = rest
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            rest ^= low
            Q &= adj[v]
            order.append(v)
            bound.append(k)
    return order, bound


def _greedy_mis(adj, P: VertexSet) -> VertexSet:
    chosen = 0
    while P:
        v = min(iter_bits(P), key=lambda u: ((adj[u] & P).bit_count(), u))
        chosen |= 1 << v
        P &= ~(adj[v] | 1 << v)
    return chosen


def max_independent_subset(G: Graph, P: VertexSet | None = None,
                           beat: int | None = None) -> VertexSet | None:
    """A maximum independent set of G[P] by branch and bound.

    With ``beat`` given, only sets larger than ``beat`` are sought and ``None``
    is returned when none exists.
    """
    adj = G.adj
    if P is None:
        P = G.vertices
    if beat is None:
        best_set = _greedy_mis(adj, P)
        best = best_set.bit_count()
    else:
        best_set = None
        best = beat

    def expand(size: int, chosen: VertexSet, P: VertexSet) -> None:
        nonlocal best, best_set
        order, bound = _clique_cover(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= best:
                return
            v = order[i]
            bit = 1 << v
            rest = P & ~adj[v] & ~bit
            if rest:
                expand(size + 1, chosen | bit, rest)
            elif size + 1 > best:
                best = size + 1
                best_set = chosen | bit
            P &= ~bit

    expand(0, 0, P)
    return best_set


def alpha(G: Graph, limits: Limits = DEFAULT_LIMITS) -> int:
    _check("alpha", G.n, limits.alpha)
    return max_independent_subset(G).bit_count()


def alpha_within(G: Graph, P: VertexSet) -> int:
    """alpha(G[P]) without building the induced graph; no size limit applied."""
    return max_independent_subset(G, P).bit_count()


def alpha_exceeds(G: Graph, P: VertexSet, k: int) -> bool:
    """Whether G[P] has an independent set of more than k vertices."""
    return max_independent_subset(G, P, beat=k) is not None


def naive_alpha(G: Graph) -> int:
    """Oracle: scan all 2^n subsets with an incrementally built neighbourhood table."""
    _check("naive_alpha", G.n, 20)
    nb = [0] * (1 << G.n)
    best = 0
    for mask in range(1, 1 << G.n):
        low = mask & -mask
        nb[mask] = nb[mask ^ low] | G.adj[low.bit_length() - 1]
        if not nb[mask] & mask:
            best = max(best, mask.bit_count())
    return best


# -- enumeration -------------------------------------------------------------------


def independent_sets(G: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Every independent set of G[within] (including the empty set), unsorted."""
    adj = G.adj
    out = [0]
    stack = [(0, G.vertices if within is None else within)]
    while stack:
        cur, P = stack.pop()
        while P:
            low = P & -P
            P ^= low
            nxt = cur | low
            out.append(nxt)
            rest = P & ~adj[low.bit_length() - 1]
            if rest:
                stack.append((nxt, rest))
    return out


def maximal_independent_sets(G: Graph, min_size: int = 0) -> list[VertexSet]:
    """Bron-Kerbosch with pivoting on the complement; sets smaller than ``min_size`` are pruned."""
    full = G.vertices
    non = [full & ~G.adj[v] & ~(1 << v) for v in range(G.n)]
    out: list[VertexSet] = []

    def bk(R: VertexSet, P: VertexSet, X: VertexSet) -> None:
        if not P and not X:
            if R.bit_count() >= min_size:
                out.append(R)
            return
        if R.bit_count() + P.bit_count() < min_size:
            return
        pivot = max(iter_bits(P | X), key=lambda u: (non[u] & P).bit_count())
        for v in iter_bits(P & ~non[pivot]):
            bit = 1 << v
            bk(R | bit, P & non[v], X & non[v])
            P &= ~bit
            X |= bit

    bk(0, full, 0)
    return out


def omega_sets(G: Graph, limits: Limits = DEFAULT_LIMITS) -> SetFamily:
    """All maximum independent sets."""
    _check("omega_sets", G.n, limits.omega)
    a = alpha(G, limits)
    return SetFamily.of(G.n, maximal_independent_sets(G, min_size=a))


def core(G: Graph, limits: Limits = DEFAULT_LIMITS) -> VertexSet:
    """Intersection of all maximum independent sets."""
    out = G.vertices
    for S in omega_sets(G, limits):
        out &= S
    return out


def is_konig_egervary(G: Graph, limits: Limits = DEFAULT_LIMITS) -> bool:
    return alpha(G, limits) + matching_number(G) == G.n


def is_well_covered(G: Graph, limits: Limits = DEFAULT_LIMITS) -> bool:
    _check("is_well_covered", G.n, limits.omega)
    sizes = {S.bit_count() for S in maximal_independent_sets(G)}
    return len(sizes) <= 1


def is_very_well_covered(G: Graph, limits: Limits = DEFAULT_LIMITS) -> bool:
    return (
        G.n > 0
        and not G.isolated()
        and G.n == 2 * alpha(G, limits)
        and is_well_covered(G, limits)
    )


def vertex_cover_number(G: Graph, limits: Limits = DEFAULT_LIMITS) -> int:
    """tau(G) = n - alpha(G)."""
    return G.n - alpha(G, limits)
