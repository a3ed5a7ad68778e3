"""Named graph families with a fixed vertex numbering.

=====================  =====================================================
kind                   numbering
=====================  =====================================================
``path(n)``            0 - 1 - ... - n-1
``cycle(n)``           path plus edge n-1 - 0 (n >= 3)
``complete(n)``        K_n on 0..n-1
``complete_bipartite`` K_{m,n}: part A = 0..m-1, part B = m..m+n-1
``star(n)``            K_{n,1}: leaves 0..n-1, centre n
``corona(G, H)``       base vertices 0..|G|-1, then one copy of H per base
                       vertex, in base-vertex order
=====================  =====================================================
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

from .graph import Graph


def _check_positive(name: str, *values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name}: parameters must be integers >= 1, got {values}")


def path(n: int) -> Graph:
    _check_positive("path", n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check_positive("cycle", n)
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check_positive("complete", n)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    _check_positive("complete_bipartite", m, n)
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    """K_{n,1}."""
    return complete_bipartite(n, 1)


def corona(G: Graph, H: Graph) -> Graph:
    if G.n < 1 or H.n < 1:
        raise ValueError("corona: both graphs need at least one vertex")
    base = G.n
    edges = list(G.edges())
    for i in range(base):
        offset = base + i * H.n
        edges += [(i, offset + j) for j in range(H.n)]
        edges += [(offset + u, offset + v) for u, v in H.edges()]
    return Graph.from_edges(base * (1 + H.n), edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p); edges drawn in lexicographic pair order."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def random_bipartite(a: int, b: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    return Graph.from_edges(a + b, edges)


@dataclass(frozen=True)
class GraphKind:
    """Generator tag, e.g. ``GraphKind("cycle", (5,))``."""

    name: str
    params: tuple[Any, ...] = ()


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "corona": corona,
}


def generate(kind: GraphKind) -> Graph:
    try:
        build = _BUILDERS[kind.name]
    except KeyError:
        raise ValueError(f"unknown graph kind {kind.name!r}") from None
    return build(*kind.params)
