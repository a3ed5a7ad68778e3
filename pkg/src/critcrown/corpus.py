"""Graph corpora: exhaustive small-order generation and seeded random samples.

Exhaustive lists are built by vertex augmentation.  Every graph of order n
arises from a graph of order n-1 by adding back a vertex of minimum degree,
so candidates whose new vertex is not of minimum degree are skipped.  The
classes generated this way (all graphs, triangle-free, bipartite, forests) are
closed under vertex deletion; connected variants are filtered afterwards.
Isomorphs are rejected with nauty canonical certificates, and each class is
returned sorted by certificate, relabelled into canonical form.
"""

from __future__ import annotations

import os
import random
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterator

import pynauty

from .graph import Graph, iter_bits, members
from . import generators as gen

# largest order each class is generated for; all graphs of order 10 number about 12 million
EXHAUSTIVE_LIMITS = {
    "all": 9,
    "connected": 9,
    "triangle-free": 10,
    "bipartite": 10,
    "connected-bipartite": 10,
    "forest": 12,
    "tree": 12,
}
CLASSES = tuple(EXHAUSTIVE_LIMITS)


class ExhaustiveLimitError(ValueError):
    def __init__(self, kind: str, n: int, limit: int):
        self.kind = kind
        self.n = n
        self.limit = limit
        super().__init__(f"exhaustive {kind} graphs are generated for orders 0..{limit}, not {n}")


def _nauty(G: Graph) -> pynauty.Graph:
    return pynauty.Graph(G.n, adjacency_dict={v: members(G.adj[v]) for v in range(G.n)})


def certificate(G: Graph) -> bytes:
    """Isomorphism-invariant key; equal exactly for isomorphic graphs of the same order."""
    if G.n == 0:
        return b""
    return pynauty.certificate(_nauty(G))


def canonical_form(G: Graph) -> Graph:
    if G.n == 0:
        return G
    order = pynauty.canon_label(_nauty(G))
    perm = [0] * G.n
    for new, old in enumerate(order):
        perm[old] = new
    return G.relabel(perm)


def canonical_key(G: Graph) -> tuple[int, bytes]:
    """Sort key used to order corpora and scan results deterministically."""
    return (G.n, certificate(G))


# -- exhaustive generation ---------------------------------------------------------


def _admissible_all(G: Graph, nb: int) -> bool:
    return True


def _admissible_triangle_free(G: Graph, nb: int) -> bool:
    return G.is_independent(nb)


def _admissible_forest(G: Graph, nb: int) -> bool:
    # at most one neighbour per component keeps the graph acyclic
    seen = 0
    for v in iter_bits(nb):
        if seen >> v & 1:
            return False
        seen |= _component(G, v)
    return True


def _admissible_bipartite(G: Graph, nb: int) -> bool:
    for v in iter_bits(nb):
        comp = _component(G, v)
        side = _side_of(G, comp, v)
        if nb & comp & ~side:
            return False
    return True


def _component(G: Graph, v: int) -> int:
    seen = frontier = 1 << v
    while frontier:
        frontier = G.nbhd(frontier) & ~seen
        seen |= frontier
    return seen


def _side_of(G: Graph, comp: int, v: int) -> int:
    # vertices of comp at even distance from v
    even = frontier = 1 << v
    seen = frontier
    parity = 0
    while frontier:
        frontier = G.nbhd(frontier) & ~seen
        seen |= frontier
        parity ^= 1
        if not parity:
            even |= frontier
    return even & comp


_HEREDITARY: dict[str, Callable[[Graph, int], bool]] = {
    "all": _admissible_all,
    "triangle-free": _admissible_triangle_free,
    "bipartite": _admissible_bipartite,
    "forest": _admissible_forest,
}


def _children(G: Graph, admissible: Callable[[Graph, int], bool]) -> Iterator[Graph]:
    n = G.n
    degrees = [G.degree(v) for v in range(n)]
    for k in range(0, n + 1):
        for nbrs in combinations(range(n), k):
            nb = sum(1 << v for v in nbrs)
            # the new vertex must have minimum degree in the child
            if any(degrees[v] + (nb >> v & 1) < k for v in range(n)):
                continue
            if not admissible(G, nb):
                continue
            adj = [row | ((nb >> v & 1) << n) for v, row in enumerate(G.adj)]
            adj.append(nb)
            yield Graph._trusted(n + 1, adj)


def _cache_dir() -> Path | None:
    root = os.environ.get("CRITCROWN_CACHE")
    if root == "":
        return None
    path = Path(root) if root else Path.home() / ".cache" / "critcrown"
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError:
        return None
    return path


def _encode(G: Graph) -> str:
    return " ".join([str(G.n)] + [format(row, "x") for row in G.adj])


def _decode(line: str) -> Graph:
    fields = line.split()
    n = int(fields[0])
    return Graph._trusted(n, [int(x, 16) for x in fields[1:]])


@lru_cache(maxsize=None)
def _hereditary_level(kind: str, n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    cache = _cache_dir()
    cache_file = cache / f"{kind}-{n}.txt" if cache is not None else None
    if cache_file is not None and cache_file.exists():
        return tuple(_decode(line) for line in cache_file.read_text().splitlines())
    admissible = _HEREDITARY[kind]
    found: dict[bytes, Graph] = {}
    for parent in _hereditary_level(kind, n - 1):
        for child in _children(parent, admissible):
            cert = certificate(child)
            if cert not in found:
                found[cert] = child
    level = tuple(canonical_form(found[c]) for c in sorted(found))
    if cache_file is not None and n >= 7:
        tmp = cache_file.with_suffix(".tmp")
        tmp.write_text("\n".join(_encode(G) for G in level) + "\n")
        tmp.replace(cache_file)
    return level


def graphs_of_order(n: int, kind: str = "all") -> tuple[Graph, ...]:
    """Every graph of order n in the class, one per isomorphism type."""
    if kind not in EXHAUSTIVE_LIMITS:
        raise ValueError(f"unknown graph class {kind!r}")
    limit = EXHAUSTIVE_LIMITS[kind]
    if not 0 <= n <= limit:
        raise ExhaustiveLimitError(kind, n, limit)
    if kind == "connected":
        return tuple(G for G in _hereditary_level("all", n) if G.is_connected())
    if kind == "connected-bipartite":
        return tuple(G for G in _hereditary_level("bipartite", n) if G.is_connected())
    if kind == "tree":
        return tuple(G for G in _hereditary_level("forest", n) if n >= 1 and G.is_connected())
    return _hereditary_level(kind, n)


def exhaustive(max_n: int, kind: str = "all", min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from graphs_of_order(n, kind)


# -- random corpora ----------------------------------------------------------------


def random_graphs(count: int, max_n: int, seed: int, min_n: int = 1) -> list[Graph]:
    """``count`` graphs with uniform order in [min_n, max_n] and a uniform edge density.

    Density is drawn per graph so that sparse, medium and dense graphs all occur.
    """
    if min_n < 1 or max_n < min_n:
        raise ValueError("need 1 <= min_n <= max_n")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.random()
        out.append(gen.gnp(n, p, rng))
    return out


def random_bipartite_graphs(count: int, max_n: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max(2, max_n))
        a = rng.randint(1, n - 1)
        out.append(gen.random_bipartite(a, n - a, rng.random(), rng))
    return out


def corona_corpus(max_base: int = 6) -> list[Graph]:
    """H o K1 for every graph H with 1 <= |V(H)| <= max_base."""
    k1 = Graph.empty(1)
    return [gen.corona(H, k1) for H in exhaustive(max_base)]
