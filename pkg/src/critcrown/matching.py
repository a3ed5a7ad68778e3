"""Maximum matchings, saturating matchings and perfect-matching uniqueness.

General graphs use Edmonds' blossom algorithm; bipartite sub-instances use
Hopcroft-Karp.  Scan order is always increasing vertex index, so results are
reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .graph import Graph, VertexSet, iter_bits, members


class MatchingError(ValueError):
    pass


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges, stored as sorted ``(u, v)`` pairs with ``u < v``."""

    pairs: tuple[tuple[int, int], ...] = ()
    mate: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        mate = {}
        for u, v in self.pairs:
            if u in mate or v in mate or u == v:
                raise MatchingError(f"edges share a vertex at ({u}, {v})")
            mate[u] = v
            mate[v] = u
        object.__setattr__(self, "mate", mate)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> Matching:
        return cls(tuple(sorted((min(u, v), max(u, v)) for u, v in edges)))

    @classmethod
    def from_mate(cls, mate: list[int]) -> Matching:
        return cls(tuple((v, u) for v, u in enumerate(mate) if u > v))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    @property
    def saturated(self) -> VertexSet:
        out = 0
        for u, v in self.pairs:
            out |= 1 << u | 1 << v
        return out

    def mate_list(self, n: int) -> list[int]:
        out = [-1] * n
        for u, v in self.pairs:
            out[u] = v
            out[v] = u
        return out

    def check(self, G: Graph) -> None:
        for u, v in self.pairs:
            if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
                raise MatchingError(f"({u}, {v}) is not an edge of the graph")

    def to_json(self) -> list[list[int]]:
        return [[u, v] for u, v in self.pairs]


# -- Edmonds ---------------------------------------------------------------


def _augment_from(nbrs: list[list[int]], match: list[int], root: int) -> bool:
    """Search one augmenting path from exposed ``root``; flip it into ``match``."""
    n = len(nbrs)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _neighbour_lists(G: Graph, within: VertexSet | None = None) -> list[list[int]]:
    if within is None:
        return [members(row) for row in G.adj]
    return [members(G.adj[v] & within) if within >> v & 1 else [] for v in range(G.n)]


def max_matching(G: Graph) -> Matching:
    """Maximum-cardinality matching of a general graph (Edmonds' blossom algorithm)."""
    nbrs = _neighbour_lists(G)
    match = [-1] * G.n
    # greedy warm start keeps the number of blossom searches small
    for v in range(G.n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for v in range(G.n):
        if match[v] == -1 and nbrs[v]:
            _augment_from(nbrs, match, v)
    return Matching.from_mate(match)


def matching_number(G: Graph) -> int:
    return len(max_matching(G))


# -- Hopcroft-Karp -----------------------------------------------------------


def _hopcroft_karp(left: list[int], nbrs: dict[int, list[int]]) -> dict[int, int]:
    pair_left: dict[int, int] = {}
    pair_right: dict[int, int] = {}
    inf = float("inf")

    while True:
        dist: dict[int, float] = {}
        queue = deque()
        for u in left:
            if u not in pair_left:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in nbrs[u]:
                nxt = pair_right.get(w)
                if nxt is None:
                    found = min(found, dist[u] + 1)
                elif dist[nxt] == inf:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        if found == inf:
            return pair_left

        def dfs(u: int) -> bool:
            for w in nbrs[u]:
                nxt = pair_right.get(w)
                if (nxt is None and dist[u] + 1 == found) or (
                    nxt is not None and dist[nxt] == dist[u] + 1 and dfs(nxt)
                ):
                    pair_left[u] = w
                    pair_right[w] = u
                    return True
            dist[u] = inf
            return False

        for u in left:
            if u not in pair_left:
                dfs(u)


def max_bipartite_matching(G: Graph, L: VertexSet, R: VertexSet) -> Matching:
    """Maximum matching using only edges between disjoint sets ``L`` and ``R``."""
    if L & R:
        raise MatchingError("L and R must be disjoint")
    left = members(L)
    nbrs = {u: members(G.adj[u] & R) for u in left}
    return Matching.from_edges(_hopcroft_karp(left, nbrs).items())


def konig_cover(G: Graph, L: VertexSet, R: VertexSet, M: Matching) -> VertexSet:
    """Minimum vertex cover of the (L, R) edges from a maximum matching ``M``.

    Z is everything reachable from exposed L-vertices by alternating paths;
    the cover is (L - Z) | (R & Z).
    """
    mate = M.mate
    frontier = [u for u in iter_bits(L) if u not in mate]
    reached = 0
    for u in frontier:
        reached |= 1 << u
    while frontier:
        nxt = []
        for u in frontier:
            for w in iter_bits(G.adj[u] & R & ~reached):
                reached |= 1 << w
                x = mate.get(w)
                if x is not None and not reached >> x & 1:
                    reached |= 1 << x
                    nxt.append(x)
        frontier = nxt
    return (L & ~reached) | (R & reached)


def saturating_matching_into(G: Graph, S: VertexSet) -> Matching | None:
    """Matching from N(S) into S saturating N(S), or ``None`` when Hall's condition fails."""
    if not G.is_independent(S):
        raise MatchingError("S must be independent")
    nbhd = G.nbhd(S)
    M = max_bipartite_matching(G, nbhd, S)
    return M if len(M) == nbhd.bit_count() else None


def hall_violator(G: Graph, S: VertexSet) -> VertexSet:
    """A set Y within N(S) with |N(Y) & S| < |Y|, or 0 when N(S) can be matched into S."""
    nbhd = G.nbhd(S)
    M = max_bipartite_matching(G, nbhd, S)
    if len(M) == nbhd.bit_count():
        return 0
    # alternating closure from the exposed N(S) vertices
    cover = konig_cover(G, nbhd, S, M)
    return nbhd & ~cover


# -- uniqueness ----------------------------------------------------------------


def _has_alternating_cycle_through(G: Graph, M: Matching, within: VertexSet, u: int, v: int) -> Matching | None:
    """Look for a perfect matching of G[within] avoiding the M-edge uv.

    Such a matching exists exactly when an M-alternating cycle passes through uv;
    it is found as an augmenting path between u and v relative to M - uv.
    """
    nbrs = _neighbour_lists(G, within)
    nbrs[u] = [w for w in nbrs[u] if w != v]
    nbrs[v] = [w for w in nbrs[v] if w != u]
    match = M.mate_list(G.n)
    match[u] = match[v] = -1
    if _augment_from(nbrs, match, u):
        return Matching.from_mate(match)
    return None


def is_uniquely_restricted(G: Graph, M: Matching) -> bool:
    """True iff M is the only perfect matching of G[V(M)]."""
    M.check(G)
    within = M.saturated
    return all(_has_alternating_cycle_through(G, M, within, u, v) is None for u, v in M)


@dataclass(frozen=True)
class PerfectMatchingStatus:
    kind: str  # "none" | "unique" | "multiple"
    matching: Matching | None = None
    other: Matching | None = None

    @property
    def exists(self) -> bool:
        return self.kind != "none"

    @property
    def unique(self) -> bool:
        return self.kind == "unique"


def perfect_matching_status(G: Graph) -> PerfectMatchingStatus:
    M = max_matching(G)
    if 2 * len(M) < G.n:
        return PerfectMatchingStatus("none")
    for u, v in M:
        other = _has_alternating_cycle_through(G, M, G.vertices, u, v)
        if other is not None:
            return PerfectMatchingStatus("multiple", M, other)
    return PerfectMatchingStatus("unique", M)


# -- brute-force oracles ---------------------------------------------------------


def brute_force_matching_number(G: Graph, L: VertexSet | None = None, R: VertexSet | None = None) -> int:
    """mu by exhaustive recursion over the lowest remaining vertex.

    With ``L``/``R`` given, only edges between them count.
    """
    if L is None:
        adj = G.adj
        start = G.vertices
    else:
        adj = [(G.adj[v] & R) if L >> v & 1 else (G.adj[v] & L) if R >> v & 1 else 0 for v in range(G.n)]
        start = L | R

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        result = best(rest)
        for u in iter_bits(adj[v] & rest):
            result = max(result, 1 + best(rest & ~(1 << u)))
        return result

    return best(start)


def count_perfect_matchings(G: Graph) -> int:
    @lru_cache(maxsize=None)
    def count(mask: int) -> int:
        if not mask:
            return 1
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        return sum(count(rest & ~(1 << u)) for u in iter_bits(G.adj[v] & rest))

    return count(G.vertices)
