"""Edge-list and DIMACS readers/writers.

Edge-list::

    # comment
    n m
    u v        (m lines, 0-based)

DIMACS::

    c comment
    p edge n m
    e u v      (1-based)
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph

FORMATS = ("edgelist", "dimacs")


class GraphParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _add_edge(edges: set, n: int, u: int, v: int, lineno: int, base: int) -> None:
    for x in (u, v):
        if not 0 <= x < n:
            raise GraphParseError(f"vertex {x + base} out of range for n={n}", lineno)
    if u == v:
        raise GraphParseError(f"loop at vertex {u + base}", lineno)
    edges.add((min(u, v), max(u, v)))


def parse_edgelist(text: str) -> Graph:
    header = None
    edges: set[tuple[int, int]] = set()
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected two fields, got {len(tokens)}", lineno)
        a, b = _ints(tokens, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("negative header value", lineno)
            header = (a, b)
            continue
        edge_lines += 1
        _add_edge(edges, header[0], a, b, lineno, 0)
    if header is None:
        raise GraphParseError("missing 'n m' header")
    if edge_lines != header[1]:
        raise GraphParseError(f"header announces {header[1]} edges, found {edge_lines}")
    return Graph.from_edges(header[0], sorted(edges))


def parse_dimacs(text: str) -> Graph:
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphParseError("expected 'p edge n m'", lineno)
            n, _ = _ints(tokens[2:], lineno)
            if n < 0:
                raise GraphParseError("negative vertex count", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphParseError("edge before problem line", lineno)
            if len(tokens) != 3:
                raise GraphParseError("expected 'e u v'", lineno)
            u, v = _ints(tokens[1:], lineno)
            _add_edge(edges, n, u - 1, v - 1, lineno, 1)
        else:
            raise GraphParseError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line")
    return Graph.from_edges(n, sorted(edges))


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def render_edgelist(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def render_dimacs(G: Graph) -> str:
    edges = G.edges()
    lines = [f"p edge {G.n} {len(edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def render_graph(G: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return render_edgelist(G)
    if fmt == "dimacs":
        return render_dimacs(G)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    path = Path(path)
    if fmt is None:
        fmt = "dimacs" if path.suffix in (".dimacs", ".col", ".clq") else "edgelist"
    return parse_graph(path.read_text(), fmt)
