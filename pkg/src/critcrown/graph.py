"""Simple undirected graphs over dense vertex indices with bit-set adjacency.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  Every algorithm in the package speaks in these masks; use
:func:`mask_of` and :func:`members` at the boundaries.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

VertexSet = int

EMPTY: VertexSet = 0


def mask_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def set_key(mask: VertexSet) -> tuple[int, list[int]]:
    """Sort key giving the canonical family order: by size, then lexicographically."""
    return (mask.bit_count(), members(mask))


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood bit-set of ``v``.  Optional ``labels`` keep
    external vertex names for rendering only.
    """

    __slots__ = ("n", "adj", "labels", "_hash")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if labels is not None and len(labels) != n:
            raise ValueError("labels must name every vertex")
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        g.labels = None
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def nbhd(self, mask: VertexSet) -> VertexSet:
        """Open neighbourhood: vertices adjacent to at least one member."""
        out = 0
        adj = self.adj
        while mask:
            low = mask & -mask
            out |= adj[low.bit_length() - 1]
            mask ^= low
        return out

    def closed_nbhd(self, mask: VertexSet) -> VertexSet:
        return self.nbhd(mask) | mask

    def is_independent(self, mask: VertexSet) -> bool:
        return not (self.nbhd(mask) & mask)

    def isolated(self) -> VertexSet:
        return mask_of(v for v in range(self.n) if not self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    # -- structure -------------------------------------------------------

    def bipartition(self) -> tuple[VertexSet, VertexSet] | None:
        """Two colour classes if the graph is bipartite, else ``None``."""
        colour = [-1] * self.n
        sides = [0, 0]
        for s in range(self.n):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                sides[colour[v]] |= 1 << v
                for u in iter_bits(self.adj[v]):
                    if colour[u] < 0:
                        colour[u] = 1 - colour[v]
                        stack.append(u)
                    elif colour[u] == colour[v]:
                        return None
        return sides[0], sides[1]

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            frontier = self.nbhd(frontier) & ~seen
            seen |= frontier
        return seen == self.vertices

    def is_triangle_free(self) -> bool:
        adj = self.adj
        return all(not (adj[u] & adj[v]) for u, v in self.edges())

    def is_forest(self) -> bool:
        components = 0
        seen = 0
        for s in range(self.n):
            if seen >> s & 1:
                continue
            components += 1
            frontier = 1 << s
            seen |= frontier
            while frontier:
                frontier = self.nbhd(frontier) & ~seen
                seen |= frontier
        return self.m == self.n - components

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_connected() and self.m == self.n - 1

    # -- derived graphs --------------------------------------------------

    def induced(self, mask: VertexSet) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``mask`` and the new->old vertex map."""
        old = members(mask)
        pos = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            row = 0
            for u in iter_bits(self.adj[v] & mask):
                row |= 1 << pos[u]
            adj.append(row)
        labels = [self.label(v) for v in old] if self.labels is not None else None
        g = Graph._trusted(len(old), adj)
        g.labels = tuple(labels) if labels is not None else None
        return g, old

    def remove(self, mask: VertexSet) -> tuple[Graph, list[int]]:
        return self.induced(self.vertices & ~mask)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph._trusted(self.n, adj)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def neighborhood(G: Graph, S: VertexSet, closed: bool = False) -> VertexSet:
    """N(S), or N[S] when ``closed``.  N(S) may meet S if S is not independent."""
    return G.closed_nbhd(S) if closed else G.nbhd(S)


def difference(G: Graph, X: VertexSet) -> int:
    """d(X) = |X| - |N(X)|, defined for every vertex subset."""
    return X.bit_count() - G.nbhd(X).bit_count()


def induced(G: Graph, X: VertexSet) -> tuple[Graph, list[int]]:
    return G.induced(X)
