"""Critical difference and critical independent sets.

d(G) is read off the bipartite double cover B(G): two copies V_L, V_R of V
with u_L v_R and v_L u_R for every edge uv.  For any X, Y with no edges
X_L - Y_R, |X| + |Y| <= n + d(X), and X_L + (V - N(X))_R is independent, so
alpha(B) = n + d(G) = 2n - mu(B).

If J is a maximum independent set of B with sides X, Y, then X & Y is a
critical independent set (supermodularity of d squeezes both X & Y and X | Y
to the optimum).  To grow it to a maximum one we use, for independent T,

    max{ d(I) : I independent, I contains T } = d(T) + d(G - N[T])

and add vertices greedily while the right-hand side stays equal to d(G).
The result is inclusion-maximal critical, hence maximum critical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, difference, iter_bits
from .independence import DEFAULT_LIMITS, Limits, _check, independent_sets
from .matching import konig_cover, max_bipartite_matching
from .setsystems import SetFamily


@dataclass(frozen=True)
class DoubleCover:
    """Bipartite double cover; cover vertex ``v`` is ``v_L`` and ``n + v`` is ``v_R``."""

    graph: Graph
    n: int

    @property
    def left(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def right(self) -> VertexSet:
        return self.left << self.n

    def origin(self, x: int) -> tuple[int, str]:
        return (x, "L") if x < self.n else (x - self.n, "R")


def double_cover(G: Graph) -> DoubleCover:
    n = G.n
    adj = [0] * (2 * n)
    for v in range(n):
        adj[v] = G.adj[v] << n
        adj[n + v] = G.adj[v]
    return DoubleCover(Graph._trusted(2 * n, adj), n)


def _cover_independent_set(G: Graph) -> tuple[int, VertexSet]:
    """(alpha(B), maximum independent set of B) via Koenig's theorem."""
    B = double_cover(G)
    M = max_bipartite_matching(B.graph, B.left, B.right)
    cover = konig_cover(B.graph, B.left, B.right, M)
    indep = B.graph.vertices & ~cover
    return indep.bit_count(), indep


def critical_difference(G: Graph) -> int:
    """d(G) = max over all X of |X| - |N(X)|, in polynomial time."""
    a, _ = _cover_independent_set(G)
    return a - G.n


def brute_force_critical_difference(G: Graph) -> int:
    """Oracle: max d(X) over all 2^n subsets."""
    _check("brute_force_critical_difference", G.n, 20)
    nb = [0] * (1 << G.n)
    best = 0
    for mask in range(1, 1 << G.n):
        low = mask & -mask
        nb[mask] = nb[mask ^ low] | G.adj[low.bit_length() - 1]
        best = max(best, mask.bit_count() - nb[mask].bit_count())
    return best


def brute_force_critical_independence_difference(G: Graph) -> int:
    """Oracle: id(G) = max d(I) over independent I."""
    return max(difference(G, I) for I in independent_sets(G))


def best_extension_difference(G: Graph, T: VertexSet) -> int:
    """max d(I) over independent I containing the independent set T."""
    rest, _ = G.remove(G.closed_nbhd(T))
    return difference(G, T) + critical_difference(rest)


def critical_seed(G: Graph) -> VertexSet:
    """The critical independent set X_L & X_R read from a maximum independent set of B(G)."""
    _, indep = _cover_independent_set(G)
    return indep & (indep >> G.n) & G.vertices


def max_critical_independent_set(G: Graph) -> VertexSet:
    target = critical_difference(G)
    S = critical_seed(G)
    if not G.is_independent(S) or difference(G, S) != target:
        raise AssertionError("double-cover seed is not a critical independent set")
    for v in range(G.n):
        if G.closed_nbhd(S) >> v & 1:
            continue
        T = S | 1 << v
        if best_extension_difference(G, T) == target:
            S = T
    return S


def is_critical_independent(G: Graph, S: VertexSet, d_G: int | None = None) -> bool:
    if not G.is_independent(S):
        return False
    if d_G is None:
        d_G = critical_difference(G)
    return difference(G, S) == d_G


def enumerate_crit_indep(G: Graph, limits: Limits = DEFAULT_LIMITS) -> SetFamily:
    _check("enumerate_crit_indep", G.n, limits.family)
    target = critical_difference(G)
    return SetFamily.of(G.n, (I for I in independent_sets(G) if difference(G, I) == target))


def ker(G: Graph, limits: Limits = DEFAULT_LIMITS) -> VertexSet:
    """Intersection of all critical independent sets."""
    out = G.vertices
    for S in enumerate_crit_indep(G, limits):
        out &= S
    return out


def is_inclusion_maximal_critical(G: Graph, S: VertexSet) -> bool:
    """No critical independent set strictly contains the critical set S."""
    target = critical_difference(G)
    if not is_critical_independent(G, S, target):
        return False
    outside = G.vertices & ~G.closed_nbhd(S)
    return all(best_extension_difference(G, S | 1 << v) < target for v in iter_bits(outside))
