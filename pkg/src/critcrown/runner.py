"""Run the property checks across a corpus and aggregate the outcomes.

Graphs are independent tasks; with ``threads > 1`` they are spread over a
process pool and merged back in input order, so summaries do not depend on
scheduling.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .graph import Graph
from .independence import DEFAULT_LIMITS, Limits
from .io import render_edgelist
from .profile import GraphProfile
from .report import SCHEMA, graph_json
from .theorems import REGISTRY, Outcome, run_check

THREADS_ENV = "CRITCROWN_THREADS"


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class Tally:
    statuses: Counter = field(default_factory=Counter)
    tags: Counter = field(default_factory=Counter)

    def add(self, outcome: Outcome) -> None:
        self.statuses[outcome.status] += 1
        if outcome.tag is not None:
            self.tags[outcome.tag] += 1

    def to_json(self) -> dict:
        out = dict(sorted(self.statuses.items()))
        if self.tags:
            out["tags"] = dict(sorted(self.tags.items()))
        return out


@dataclass
class VerifyResult:
    graphs: int = 0
    per_order: Counter = field(default_factory=Counter)
    tallies: dict[str, Tally] = field(default_factory=dict)
    failure: dict | None = None
    findings: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def to_json(self) -> dict:
        return {
            "graphs": self.graphs,
            "per_order": {str(k): v for k, v in sorted(self.per_order.items())},
            "checks": {name: t.to_json() for name, t in self.tallies.items()},
            "findings": len(self.findings),
            "result": "pass" if self.passed else "fail",
        }


def certificate(G: Graph, check_name: str, outcome: Outcome) -> dict:
    """Self-contained record of one failing or noteworthy graph."""
    return {
        "schema": SCHEMA,
        "check": check_name,
        "summary": REGISTRY[check_name].summary,
        "status": outcome.status,
        "graph": graph_json(G),
        "edgelist": render_edgelist(G),
        "details": outcome.details,
    }


def evaluate(G: Graph, names: Sequence[str], limits: Limits = DEFAULT_LIMITS) -> dict[str, Outcome]:
    P = GraphProfile(G, limits)
    return {name: run_check(REGISTRY[name], P) for name in names}


def _evaluate_task(task: tuple[Graph, tuple[str, ...], Limits]) -> dict[str, Outcome]:
    return evaluate(*task)


def _outcomes(graphs: Iterable[Graph], names: tuple[str, ...], limits: Limits,
              threads: int) -> Iterator[tuple[Graph, dict[str, Outcome]]]:
    if threads <= 1:
        for G in graphs:
            yield G, evaluate(G, names, limits)
        return
    graphs = list(graphs)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        tasks = ((G, names, limits) for G in graphs)
        yield from zip(graphs, pool.map(_evaluate_task, tasks, chunksize=64))


def verify_corpus(graphs: Iterable[Graph], names: Iterable[str] | None = None,
                  limits: Limits = DEFAULT_LIMITS, threads: int = 1,
                  stop_on_failure: bool = True) -> VerifyResult:
    names = tuple(REGISTRY) if names is None else tuple(names)
    for name in names:
        if name not in REGISTRY:
            raise KeyError(f"unknown check {name!r}")
    result = VerifyResult(tallies={name: Tally() for name in names})
    for G, outcomes in _outcomes(graphs, names, limits, threads):
        result.graphs += 1
        result.per_order[G.n] += 1
        for name, outcome in outcomes.items():
            result.tallies[name].add(outcome)
            if outcome.status == "finding":
                result.findings.append(certificate(G, name, outcome))
            elif outcome.status == "fail" and result.failure is None:
                result.failure = certificate(G, name, outcome)
        if result.failure is not None and stop_on_failure:
            break
    return result
