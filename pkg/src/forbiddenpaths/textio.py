"""Plain-text graph and forbidden-path formats.

Graph file::

    # comment lines start with '#'
    n m
    u v w        (m lines; vertex names are arbitrary tokens, w > 0)

Forbidden-path file: one path per line, whitespace-separated vertex names.
"""

from __future__ import annotations

import math

from .graph import Graph, GraphError
from .oracle import ExceptionStore


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def parse_graph(text: str, undirected: bool = False) -> Graph:
    """Parse the graph format; with ``undirected`` each line adds two arcs.

    Vertices get ids in order of first appearance. When the header declares
    more vertices than the edges name, the rest are named by their id.
    """
    lines = _lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    if len(header) != 2:
        raise ParseError(f"expected 'n m', got {len(header)} tokens", no)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header counts must be integers", no) from None
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", no)

    names: dict[str, int] = {}
    arcs = []
    for no, tokens in lines:
        if len(arcs) == m:
            raise ParseError(f"more than the declared {m} edge lines", no)
        if len(tokens) != 3:
            raise ParseError(f"expected 'u v w', got {len(tokens)} tokens", no)
        a, b, wtext = tokens
        try:
            w = float(wtext)
        except ValueError:
            raise ParseError(f"bad weight {wtext!r}", no) from None
        if not (w > 0 and math.isfinite(w)):
            raise ParseError(f"weight must be positive, got {wtext}", no)
        if a == b:
            raise ParseError(f"self-loop at {a!r}", no)
        for name in (a, b):
            if name not in names:
                names[name] = len(names)
        arcs.append((no, a, b, w))
    if len(arcs) != m:
        raise ParseError(f"declared {m} edge lines, found {len(arcs)}")
    if len(names) > n:
        raise ParseError(f"declared {n} vertices, edges name {len(names)}")

    g = Graph()
    for name in names:
        g.add_vertex(name)
    taken = set(names)
    for i in range(len(names), n):
        name = str(i)
        while name in taken:
            name = f"_{name}"
        taken.add(name)
        g.add_vertex(name)
    for no, a, b, w in arcs:
        u, v = names[a], names[b]
        try:
            g.add_edge(u, v, w)
            if undirected:
                g.add_edge(v, u, w)
        except GraphError as e:
            raise ParseError(str(e), no) from None
    return g


def parse_exceptions(text: str, graph: Graph) -> ExceptionStore:
    paths = []
    lookup = {graph.names[v]: v for v in range(graph.n0)}
    for no, tokens in _lines(text):
        if len(tokens) < 2:
            raise ParseError("a forbidden path needs at least two vertices", no)
        path = []
        for name in tokens:
            if name not in lookup:
                raise ParseError(f"unknown vertex {name!r}", no)
            path.append(lookup[name])
        if len(set(path)) != len(path):
            raise ParseError("forbidden path repeats a vertex", no)
        for u, v in zip(path, path[1:]):
            if not graph.has_edge(u, v):
                raise ParseError(f"{graph.names[u]!r} -> {graph.names[v]!r} is not an edge", no)
        if path in paths:
            raise ParseError("duplicate forbidden path", no)
        paths.append(path)
    return ExceptionStore(paths, graph)


def _weight(w: float) -> str:
    return str(int(w)) if w == int(w) else repr(w)


def format_graph(g: Graph) -> str:
    """Canonical directed form of the input graph (replicas are not written)."""
    arcs = g.input_edges()
    lines = [f"{g.n0} {len(arcs)}"]
    lines += [f"{g.names[u]} {g.names[v]} {_weight(w)}" for u, v, w in arcs]
    return "\n".join(lines) + "\n"


def format_exceptions(store: ExceptionStore, g: Graph) -> str:
    return "".join(" ".join(g.names[v] for v in x.vertices) + "\n" for x in store)


def format_length(length: float) -> str:
    return _weight(length)
