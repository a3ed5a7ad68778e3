"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .corpus import ExhaustiveLimitError, exhaustive, random_graphs
from .crowns import crown_reduce_vertex_cover
from .graph import Graph
from .independence import Limits, SizeLimitError, alpha
from .matching import matching_number
from .io import FORMATS, GraphParseError, read_graph, render_edgelist
from .profile import GraphProfile
from .report import SCHEMA, SKIPPED, analysis_report, audit_report, graph_json, limits_json, render_text
from .runner import certificate, default_threads, verify_corpus
from .theorems import REGISTRY, run_check

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3

# checks of proven statements exercised by the scan command; any failure is a bug
SCAN_THEOREMS = (
    "crit-crown-forces-zero",
    "bipartite-crit-greedoid-iff-upm",
    "triangle-free-greedoid-sufficient",
    "three-families-iff-local-ke-pm",
)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(data: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(render_text(data) + "\n")


def _write_json(path: Path, data: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2) + "\n")


def _limits(args) -> Limits:
    try:
        return Limits(alpha=args.exact_limit, omega=args.enum_limit, family=args.family_limit)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None


def _load(path: str, fmt: str | None) -> Graph:
    try:
        return read_graph(path, fmt)
    except GraphParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from None
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from None
    except ValueError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from None


# -- analyze -------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    limits = _limits(args)
    G = _load(args.file, args.format)
    report = analysis_report(G, limits)
    report["input"] = args.file
    code = EXIT_OK
    if args.audit:
        problems = audit_report(G, report, limits)
        report["audit"] = problems or "pass"
        if problems:
            code = EXIT_FAILED
    _emit(report, args.json)
    return code


# -- verify --------------------------------------------------------------------------


def _verify_corpus(args):
    if args.random is not None:
        if args.max_n is None:
            raise CliError("--random needs --max-n", EXIT_INPUT)
        corpus_info = {"kind": "random", "count": args.random, "max_n": args.max_n, "seed": args.seed}
        return corpus_info, random_graphs(args.random, args.max_n, args.seed)
    if args.exhaustive is not None:
        kind, K = ("connected" if args.connected else "all"), args.exhaustive
    elif args.tree is not None:
        kind, K = "tree", args.tree
    else:
        kind, K = ("connected-bipartite" if args.connected else "bipartite"), args.bipartite
    corpus_info = {"kind": kind, "max_n": K}
    return corpus_info, list(exhaustive(K, kind))


def cmd_verify(args) -> int:
    limits = _limits(args)
    names = None
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in names if c not in REGISTRY]
        if unknown:
            raise CliError(f"unknown checks: {', '.join(unknown)}", EXIT_INPUT)
    corpus_info, graphs = _verify_corpus(args)
    result = verify_corpus(graphs, names, limits, threads=args.threads)
    summary = {
        "schema": SCHEMA,
        "command": "verify",
        "config": {"limits": limits_json(limits), "threads": args.threads, "seed": args.seed},
        "corpus": corpus_info,
        **result.to_json(),
    }
    if args.findings_dir:
        for i, finding in enumerate(result.findings):
            _write_json(Path(args.findings_dir) / f"finding-{i:04d}.json", finding)
    if result.failure is not None:
        summary["counterexample"] = result.failure
        if args.certificate:
            _write_json(Path(args.certificate), result.failure)
    _emit(summary, args.json)
    return EXIT_OK if result.passed else EXIT_FAILED


# -- kernelize -----------------------------------------------------------------------


def cmd_kernelize(args) -> int:
    limits = _limits(args)
    if args.k < 0:
        raise CliError("--k must be non-negative", EXIT_INPUT)
    G = _load(args.file, args.format)
    res = crown_reduce_vertex_cover(G, args.k)
    stem = Path(args.file).stem
    out_dir = Path(args.out_dir)
    kernel_path = out_dir / f"{stem}.kernel.edgelist"
    trace_path = out_dir / f"{stem}.trace.json"
    out_dir.mkdir(parents=True, exist_ok=True)
    kernel_path.write_text(render_edgelist(res.kernel))

    try:
        tau_g = G.n - alpha(G, limits)
        tau_k = res.kernel.n - alpha(res.kernel, limits)
        identity = {
            "tau_graph": tau_g,
            "tau_kernel": tau_k,
            "removed": res.removed_cover,
            "holds": tau_g == tau_k + res.removed_cover,
        }
    except SizeLimitError:
        identity = SKIPPED
    # tau >= mu, so a kernel matching larger than the budget rules out a cover of size k
    mu_kernel = matching_number(res.kernel)
    if not res.feasible:
        status, reason = "infeasible", "budget exhausted during reduction"
    elif mu_kernel > res.k:
        status, reason = "infeasible", f"kernel has a matching of size {mu_kernel} > {res.k}"
    else:
        status, reason = "reduced", None
    trace = {
        "schema": SCHEMA,
        "command": "kernelize",
        "input": args.file,
        "config": {"limits": limits_json(limits)},
        "k": args.k,
        "status": status,
        "reason": reason,
        "k_remaining": res.k,
        "kernel_matching": mu_kernel,
        "kernel": {**graph_json(res.kernel), "vertex_map": list(res.vertex_map), "path": str(kernel_path)},
        "steps": [step.to_json() for step in res.trace],
        "certificate": identity,
    }
    _write_json(trace_path, trace)
    _emit(trace, args.json)
    if status == "infeasible":
        print(f"infeasible within k={args.k}: {reason}", file=sys.stderr)
    if isinstance(identity, dict) and not identity["holds"]:
        return EXIT_FAILED
    return EXIT_OK


# -- scan ----------------------------------------------------------------------------


def cmd_scan(args) -> int:
    limits = _limits(args)
    kind = "triangle-free" if args.triangle_free else "bipartite" if args.bipartite else "all"
    graphs = list(exhaustive(args.max_n, kind))
    equal: list[dict] = []
    findings: list[dict] = []
    failures: list[dict] = []
    conjecture = {"checked": 0, "agree": 0, "disagree": 0}
    for G in graphs:
        P = GraphProfile(G, limits)
        if P.crit.as_set() == P.crown.as_set():
            equal.append({**graph_json(G), "d": P.d})
        for name in SCAN_THEOREMS:
            outcome = run_check(REGISTRY[name], P)
            if outcome.status == "fail":
                failures.append(certificate(G, name, outcome))
        if P.triangle_free:
            outcome = run_check(REGISTRY["conjecture-triangle-free"], P)
            conjecture["checked"] += 1
            if outcome.status == "finding":
                conjecture["disagree"] += 1
                findings.append(certificate(G, "conjecture-triangle-free", outcome))
            else:
                conjecture["agree"] += 1
    if args.findings_dir:
        for i, finding in enumerate(findings):
            _write_json(Path(args.findings_dir) / f"finding-{i:04d}.json", finding)
    summary = {
        "schema": SCHEMA,
        "command": "scan",
        "config": {"limits": limits_json(limits), "class": kind, "max_n": args.max_n},
        "graphs": len(graphs),
        "crit_equals_crown": {"count": len(equal), "graphs": equal},
        "conjecture": {**conjecture, "findings": findings},
        "theorem_failures": failures,
        "result": "fail" if failures else "pass",
    }
    _emit(summary, args.json)
    return EXIT_FAILED if failures else EXIT_OK


# -- parser --------------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--exact-limit", type=_positive, default=40, metavar="N",
                   help="largest order for exact alpha (default 40)")
    p.add_argument("--enum-limit", type=_positive, default=25, metavar="N",
                   help="largest order for enumerating maximum independent sets (default 25)")
    p.add_argument("--family-limit", type=_positive, default=16, metavar="N",
                   help="largest order for enumerating CritIndep, Crown and Psi (default 16)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critcrown",
        description="Critical independent sets, crowns and local maximum independent sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report every invariant of one graph")
    p.add_argument("file")
    p.add_argument("--format", choices=FORMATS, default=None,
                   help="input format (default: by suffix, .dimacs/.col/.clq are DIMACS)")
    p.add_argument("--audit", action="store_true", help="re-validate every reported set")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the property checks over a corpus")
    corpus = p.add_mutually_exclusive_group(required=True)
    corpus.add_argument("--random", type=_positive, metavar="N", help="N seeded random graphs")
    corpus.add_argument("--exhaustive", type=_positive, metavar="K", help="all graphs of order <= K")
    corpus.add_argument("--tree", type=_positive, metavar="K", help="all trees of order <= K")
    corpus.add_argument("--bipartite", type=_positive, metavar="K", help="all bipartite graphs of order <= K")
    p.add_argument("--max-n", type=_positive, metavar="K", help="largest order for --random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true", help="restrict exhaustive corpora to connected graphs")
    p.add_argument("--checks", metavar="NAMES", help="comma-separated subset of checks (default: all)")
    p.add_argument("--certificate", metavar="PATH", help="write the first counterexample here")
    p.add_argument("--findings-dir", metavar="DIR", help="write one JSON file per open-question finding")
    p.add_argument("--threads", type=_positive, default=default_threads(),
                   help="worker processes (default from CRITCROWN_THREADS, else 1)")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kernelize", help="crown reduction for Vertex Cover with budget k")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--out-dir", default=".", help="where the kernel and trace files go")
    _add_common(p)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("scan", help="exhaustive scan for the open CritIndep questions")
    p.add_argument("--max-n", type=_positive, required=True)
    cls = p.add_mutually_exclusive_group()
    cls.add_argument("--triangle-free", action="store_true")
    cls.add_argument("--bipartite", action="store_true")
    p.add_argument("--findings-dir", metavar="DIR")
    _add_common(p)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ExhaustiveLimitError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
