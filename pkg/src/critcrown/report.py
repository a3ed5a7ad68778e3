"""JSON-ready analysis reports, their text rendering, and a re-validation audit.

All vertex sets are written as sorted lists of 0-based vertex indices (DIMACS
vertex i appears as i-1).  Fields whose exact computation exceeds the
configured limits carry the string ``"skipped(limit)"``.
"""

from __future__ import annotations

from typing import Any, Callable

from .critical import is_critical_independent
from .crowns import is_crown, max_crown_certificate
from .graph import Graph, mask_of, members
from .independence import Limits, SizeLimitError, is_well_covered
from .lmis import compare, is_lmis
from .matching import Matching
from .profile import FAMILY_NAMES, GraphProfile

SCHEMA = 1
SKIPPED = "skipped(limit)"


def _guard(fn: Callable[[], Any]) -> Any:
    try:
        return fn()
    except SizeLimitError:
        return SKIPPED


def limits_json(limits: Limits) -> dict:
    return {"exact": limits.alpha, "enumeration": limits.omega, "family": limits.family}


def graph_json(G: Graph) -> dict:
    return {"n": G.n, "m": G.m, "edges": [[u, v] for u, v in G.edges()]}


def analysis_report(G: Graph, limits: Limits) -> dict:
    P = GraphProfile(G, limits)
    cert = max_crown_certificate(G)
    status = P.pm_status
    out: dict = {
        "schema": SCHEMA,
        "command": "analyze",
        "config": {"limits": limits_json(limits)},
        "graph": graph_json(G),
        "bipartite": P.bipartite,
        "triangle_free": P.triangle_free,
        "connected": G.is_connected(),
        "isolated": members(G.isolated()),
        "d": P.d,
        "mu": P.mu,
        "max_matching": P.matching.to_json(),
        "perfect_matching": {
            "status": status.kind,
            "witnesses": [M.to_json() for M in (status.matching, status.other) if M is not None],
        },
        "max_critical_set": members(P.max_crit),
        "max_crown": {
            "S": members(cert.S),
            "neighborhood": members(cert.nbhd),
            "matching": cert.matching.to_json(),
            "order": cert.order,
            "straight": cert.straight,
        },
        "alpha": _guard(lambda: P.alpha),
        "ke": _guard(lambda: P.ke),
        "tau": _guard(lambda: P.tau),
        "well_covered": _guard(lambda: is_well_covered(G, limits)),
        "very_well_covered": _guard(lambda: P.very_well_covered),
        "omega": _guard(lambda: P.omega.to_json()),
        "core": _guard(lambda: members(P.core)),
    }
    if P.within_family_limit:
        out["ker"] = members(P.ker)
        out["families"] = {name: P.family(name).to_json() for name in FAMILY_NAMES}
        out["relations"] = {
            "crit_vs_crown": compare("crit_indep", P.crit, "crown", P.crown).to_json(),
            "crown_vs_psi": compare("crown", P.crown, "psi", P.psi).to_json(),
            "crit_vs_psi": compare("crit_indep", P.crit, "psi", P.psi).to_json(),
        }
        out["greedoid"] = {name: P.greedoid(name).to_json() for name in FAMILY_NAMES}
        out["augmentoid"] = {name: P.augmentoid(name).to_json() for name in FAMILY_NAMES}
        out["local"] = [P.local(S).to_json() for S in P.psi]
    else:
        for key in ("ker", "families", "relations", "greedoid", "augmentoid", "local"):
            out[key] = SKIPPED
    return out


def audit_report(G: Graph, report: dict, limits: Limits) -> list[str]:
    """Re-check every set in a report against its defining predicate; returns problems found."""
    problems: list[str] = []

    def expect(cond: bool, what: str) -> None:
        if not cond:
            problems.append(what)

    d = report["d"]
    M = Matching.from_edges(map(tuple, report["max_matching"]))
    M.check(G)
    expect(len(M) == report["mu"], "max_matching size differs from mu")
    S = mask_of(report["max_critical_set"])
    expect(is_critical_independent(G, S, d), "max_critical_set is not critical independent")
    crown = report["max_crown"]
    expect(is_crown(G, mask_of(crown["S"])) is not None, "max_crown is not a crown")
    expect(mask_of(crown["neighborhood"]) == G.nbhd(mask_of(crown["S"])), "max_crown neighborhood is wrong")
    for witness in report["perfect_matching"]["witnesses"]:
        W = Matching.from_edges(map(tuple, witness))
        W.check(G)
        expect(2 * len(W) == G.n, "perfect matching witness is not perfect")
    if report["omega"] != SKIPPED:
        a = report["alpha"]
        for T in report["omega"]:
            T = mask_of(T)
            expect(G.is_independent(T) and T.bit_count() == a, f"{members(T)} is not maximum independent")
        core = G.vertices
        for T in report["omega"]:
            core &= mask_of(T)
        expect(members(core) == report["core"], "core is not the intersection of omega")
    if report["families"] != SKIPPED:
        fam = report["families"]
        for T in fam["crit_indep"]:
            expect(is_critical_independent(G, mask_of(T), d), f"{T} is not critical independent")
        for T in fam["crown"]:
            expect(is_crown(G, mask_of(T)) is not None, f"{T} is not a crown")
        for T in fam["psi"]:
            expect(is_lmis(G, mask_of(T), limits), f"{T} is not a local maximum independent set")
        ker = G.vertices
        for T in fam["crit_indep"]:
            ker &= mask_of(T)
        expect(members(ker) == report["ker"], "ker is not the intersection of crit_indep")
    return problems


# -- text rendering ------------------------------------------------------------------


def _fmt(value: Any) -> str:
    if isinstance(value, list) and value and isinstance(value[0], list):
        return "{" + ", ".join("{" + ",".join(map(str, s)) + "}" for s in value) + "}"
    if isinstance(value, list):
        return "{" + ",".join(map(str, value)) + "}"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_text(report: dict, indent: str = "") -> str:
    """Human rendering of a report; nested mappings become indented blocks."""
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(render_text(value, indent + "  "))
        elif key in ("edges", "max_matching", "matching") or key == "witnesses":
            lines.append(f"{indent}{key}: " + " ".join(f"{u}-{v}" for u, v in _flatten_pairs(value)))
        elif isinstance(value, list) and value and isinstance(value[0], dict) and key != "local":
            lines.append(f"{indent}{key}:")
            for i, row in enumerate(value):
                lines.append(f"{indent}  [{i}]")
                lines.append(render_text(row, indent + "    "))
        elif key == "local":
            lines.append(f"{indent}{key}:")
            for row in value if isinstance(value, list) else []:
                lines.append(f"{indent}  S={_fmt(row['S'])} ke={_fmt(row['ke'])} "
                             f"pm={_fmt(row['perfect_matching'])} unique_pm={_fmt(row['unique_perfect_matching'])}")
            if not isinstance(value, list):
                lines[-1] += f" {value}"
        else:
            lines.append(f"{indent}{key}: {_fmt(value)}")
    return "\n".join(line for line in lines if line)


def _flatten_pairs(value: Any):
    if isinstance(value, list) and value and isinstance(value[0], list) and value[0] and isinstance(value[0][0], list):
        for part in value:
            yield from part
    elif isinstance(value, list):
        yield from value
