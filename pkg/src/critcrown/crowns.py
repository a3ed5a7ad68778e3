"""Crowns: certificates, enumeration, augmentation and crown-based kernelization."""

from __future__ import annotations

from dataclasses import dataclass

from .critical import max_critical_independent_set
from .graph import Graph, VertexSet, members
from .independence import DEFAULT_LIMITS, Limits, _check, independent_sets
from .matching import Matching, max_bipartite_matching
from .setsystems import SetFamily


class NotACrownError(ValueError):
    def __init__(self, name: str, S: VertexSet):
        self.name = name
        self.S = S
        super().__init__(f"{name}={members(S)} is not a crown")


@dataclass(frozen=True)
class CrownCertificate:
    S: VertexSet
    nbhd: VertexSet
    matching: Matching

    @property
    def order(self) -> int:
        return self.S.bit_count() + self.nbhd.bit_count()

    @property
    def straight(self) -> bool:
        return self.S.bit_count() == self.nbhd.bit_count()

    def check(self, G: Graph) -> None:
        """Re-validate independently of how the certificate was produced."""
        if not G.is_independent(self.S) or G.nbhd(self.S) != self.nbhd:
            raise AssertionError("certificate does not describe an independent set and its neighbourhood")
        self.matching.check(G)
        covered = 0
        for u, v in self.matching:
            a, b = (u, v) if self.nbhd >> u & 1 else (v, u)
            if not (self.nbhd >> a & 1 and self.S >> b & 1):
                raise AssertionError(f"edge ({u}, {v}) does not run from N(S) into S")
            covered |= 1 << a
        if covered != self.nbhd:
            raise AssertionError("matching does not saturate N(S)")


def is_crown(G: Graph, S: VertexSet) -> CrownCertificate | None:
    """Certificate if S is independent and N(S) matches into S; ``None`` otherwise.

    Edges inside N(S) are irrelevant and never enter the matching instance.
    Both the empty set and singletons of isolated vertices qualify.
    """
    if not G.is_independent(S):
        return None
    nbhd = G.nbhd(S)
    if nbhd.bit_count() > S.bit_count():
        return None
    M = max_bipartite_matching(G, nbhd, S)
    if len(M) != nbhd.bit_count():
        return None
    return CrownCertificate(S, nbhd, M)


def hall_crown_oracle(G: Graph, S: VertexSet) -> bool:
    """Oracle: S independent and |N(Y) & S| >= |Y| for every Y within N(S)."""
    if not G.is_independent(S):
        return False
    for Y in _submasks(G.nbhd(S)):
        if (G.nbhd(Y) & S).bit_count() < Y.bit_count():
            return False
    return True


def _submasks(mask: VertexSet):
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


def enumerate_crowns(G: Graph, limits: Limits = DEFAULT_LIMITS) -> SetFamily:
    _check("enumerate_crowns", G.n, limits.family)
    return SetFamily.of(G.n, (S for S in independent_sets(G) if is_crown(G, S) is not None))


def _require_crown(G: Graph, name: str, S: VertexSet) -> CrownCertificate:
    cert = is_crown(G, S)
    if cert is None:
        raise NotACrownError(name, S)
    return cert


def crown_augment(G: Graph, A: VertexSet, B: VertexSet,
                  validate: bool = True) -> tuple[VertexSet, VertexSet]:
    """A1 = A | (B - N[A]) and B1 = B | (A - N[B]); both crowns of equal size.

    ``validate=False`` skips re-certifying inputs already known to be crowns.
    """
    if validate:
        _require_crown(G, "A", A)
        _require_crown(G, "B", B)
    A1 = A | (B & ~G.closed_nbhd(A))
    B1 = B | (A & ~G.closed_nbhd(B))
    return A1, B1


def boundary_matching(G: Graph, A: VertexSet, B: VertexSet) -> Matching:
    """Perfect matching between A & N(B) and B & N(A) for crowns A, B."""
    _require_crown(G, "A", A)
    _require_crown(G, "B", B)
    left = A & G.nbhd(B)
    right = B & G.nbhd(A)
    M = max_bipartite_matching(G, left, right)
    if not (len(M) == left.bit_count() == right.bit_count()):
        raise AssertionError("boundary sets of two crowns admit no perfect matching")
    return M


def max_crown(G: Graph) -> VertexSet:
    """A maximum crown; maximum crowns coincide with maximum critical independent sets."""
    return max_critical_independent_set(G)


def max_crown_certificate(G: Graph) -> CrownCertificate:
    S = max_crown(G)
    return _require_crown(G, "max_crown", S)


def extend_to_max_crown(G: Graph, A: VertexSet) -> VertexSet:
    """A maximum crown containing the crown A."""
    _require_crown(G, "A", A)
    return crown_augment(G, A, max_crown(G))[0]


# -- kernelization ----------------------------------------------------------------


@dataclass(frozen=True)
class KernelStep:
    crown: VertexSet      # in original vertex numbering
    nbhd: VertexSet       # in original vertex numbering
    remaining: tuple[int, ...]  # original indices of the vertices left after this step
    k_after: int

    @property
    def delta(self) -> int:
        return self.nbhd.bit_count()

    def to_json(self) -> dict:
        return {
            "crown": members(self.crown),
            "neighborhood": members(self.nbhd),
            "delta": self.delta,
            "remaining_n": len(self.remaining),
            "remaining_k": self.k_after,
        }


@dataclass(frozen=True)
class KernelResult:
    kernel: Graph
    k: int
    vertex_map: tuple[int, ...]  # kernel vertex -> original vertex
    trace: tuple[KernelStep, ...]
    feasible: bool

    @property
    def removed_cover(self) -> int:
        return sum(step.delta for step in self.trace)


def crown_reduce_vertex_cover(G: Graph, k: int) -> KernelResult:
    """Strip maximum crowns S together with N(S), charging |N(S)| to the budget k.

    Stops when only the empty crown is left or when the budget goes negative
    (then ``feasible`` is False: no vertex cover of size <= k exists).
    """
    if k < 0:
        raise ValueError("budget k must be non-negative")
    current = G
    alive = list(range(G.n))
    trace: list[KernelStep] = []
    feasible = True
    while current.n:
        S = max_crown(current)
        if not S:
            break
        nbhd = current.nbhd(S)
        k -= nbhd.bit_count()
        current, kept = current.remove(S | nbhd)
        orig_S = sum(1 << alive[v] for v in members(S))
        orig_N = sum(1 << alive[v] for v in members(nbhd))
        alive = [alive[v] for v in kept]
        trace.append(KernelStep(orig_S, orig_N, tuple(alive), k))
        if k < 0:
            feasible = False
            break
    return KernelResult(current, k, tuple(alive), tuple(trace), feasible)
