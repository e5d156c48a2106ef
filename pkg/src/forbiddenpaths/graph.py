"""Directed weighted multigraph with replica-aware vertex identity.

Vertices are dense integers. Every vertex remembers the original vertex it
stands for (``origin``) and the vertex it was copied from (``source``), so a
walk in a modified graph can be mapped back to the graph it was derived from
or all the way back to the input graph.

A vertex can be *sealed*: its incoming edges stay in the graph, but they are
retired from the live view that Dijkstra scans. Sealing is how the router
drops in-edges of vertices whose distance label is final while keeping the
full neighbourhood available for later replication.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised on invalid graph construction or surgery."""


class Graph:
    """Mutable directed graph with positive edge weights.

    Parallel edges are allowed (they appear after replication), self-loops
    are not.
    """

    def __init__(self) -> None:
        self._out: list[dict[int, list[float]]] = []
        self._in: list[dict[int, list[float]]] = []
        self.origin: list[int] = []
        self.source: list[int] = []
        self.names: list[str] = []
        self._sealed: list[bool] = []
        self._n0 = 0
        self._m0 = 0
        self._edges = 0
        self._retired = 0
        self._input: list[tuple[int, int, float]] = []

    # -- construction -------------------------------------------------------

    def add_vertex(self, name: str | None = None) -> int:
        if self._n0 != len(self.origin):
            raise GraphError("original vertices must be added before any replica")
        v = len(self.origin)
        self._grow(v, v, str(v) if name is None else name)
        self._n0 += 1
        return v

    def add_edge(self, u: int, v: int, weight: float) -> None:
        """Add an edge of the input graph."""
        if self._n0 != len(self.origin):
            raise GraphError("input edges must be added before any replica")
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {self.names[u]!r}")
        weight = float(weight)
        if not (weight > 0 and math.isfinite(weight)):
            raise GraphError(f"edge weight must be positive and finite, got {weight}")
        if self.has_edge(u, v):
            raise GraphError(f"duplicate edge {self.names[u]!r} -> {self.names[v]!r}")
        self._link(u, v, weight)
        self._input.append((u, v, weight))
        self._m0 += 1

    def _grow(self, v: int, origin: int, name: str) -> None:
        self._out.append({})
        self._in.append({})
        self.origin.append(origin)
        self.source.append(v if origin == v else -1)
        self.names.append(name)
        self._sealed.append(False)

    def _link(self, u: int, v: int, weight: float) -> None:
        self._out[u].setdefault(v, []).append(weight)
        self._in[v].setdefault(u, []).append(weight)
        self._edges += 1
        if self._sealed[v]:
            self._retired += 1

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self.origin):
            raise GraphError(f"unknown vertex {v}")

    # -- surgery ------------------------------------------------------------

    def add_replica(self, v: int) -> int:
        """Create a copy of ``v`` carrying a copy of every edge incident to it."""
        self._check(v)
        r = len(self.origin)
        origin = self.origin[v]
        self._grow(r, origin, self.names[v] + "'")
        self.source[r] = v
        for u, weights in list(self._in[v].items()):
            for w in weights:
                self._link(u, r, w)
        for x, weights in list(self._out[v].items()):
            for w in weights:
                self._link(r, x, w)
        return r

    def delete_edge(self, u: int, v: int) -> None:
        """Remove one ``u -> v`` edge."""
        self._check(u)
        self._check(v)
        weights = self._out[u].get(v)
        if not weights:
            raise GraphError(f"no edge {self.names[u]!r} -> {self.names[v]!r}")
        weights.pop()
        if not weights:
            del self._out[u][v]
        back = self._in[v][u]
        back.pop()
        if not back:
            del self._in[v][u]
        self._edges -= 1
        if self._sealed[v]:
            self._retired -= 1

    def seal(self, v: int) -> None:
        """Retire every incoming edge of ``v`` (present and future) from the live view."""
        self._check(v)
        if not self._sealed[v]:
            self._sealed[v] = True
            self._retired += self.in_degree(v)

    def is_sealed(self, v: int) -> bool:
        return self._sealed[v]

    # -- queries ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.origin)

    @property
    def n0(self) -> int:
        """Number of original vertices."""
        return self._n0

    @property
    def m0(self) -> int:
        """Number of edges in the input graph."""
        return self._m0

    @property
    def d_max(self) -> int:
        """Maximum total degree over the original vertices, counting input edges only."""
        best = 0
        for v in range(self._n0):
            deg = sum(len(ws) for x, ws in self._out[v].items() if x < self._n0)
            deg += sum(len(ws) for u, ws in self._in[v].items() if u < self._n0)
            best = max(best, deg)
        return best

    def is_original(self, v: int) -> bool:
        return self.origin[v] == v

    def edge_count(self, live: bool = True) -> int:
        """Number of edges; ``live=False`` also counts retired in-edges of sealed vertices."""
        return self._edges - self._retired if live else self._edges

    def out_edges(self, u: int, live: bool = True) -> Iterator[tuple[int, float]]:
        for x, weights in self._out[u].items():
            if live and self._sealed[x]:
                continue
            for w in weights:
                yield x, w

    def in_edges(self, v: int, live: bool = True) -> Iterator[tuple[int, float]]:
        if live and self._sealed[v]:
            return
        for u, weights in self._in[v].items():
            for w in weights:
                yield u, w

    def in_degree(self, v: int) -> int:
        return sum(len(ws) for ws in self._in[v].values())

    def out_degree(self, u: int) -> int:
        return sum(len(ws) for ws in self._out[u].values())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._out[u].get(v))

    def multiplicity(self, u: int, v: int) -> int:
        return len(self._out[u].get(v, ()))

    def weight(self, u: int, v: int) -> float:
        weights = self._out[u].get(v)
        if not weights:
            raise GraphError(f"no edge {self.names[u]!r} -> {self.names[v]!r}")
        return weights[0]

    def edges(self, live: bool = True) -> Iterator[tuple[int, int, float]]:
        for u in range(len(self.origin)):
            for x, w in self.out_edges(u, live):
                yield u, x, w

    def input_edges(self) -> list[tuple[int, int, float]]:
        """Edges of the input graph in the order they were added."""
        return list(self._input)

    def vertex(self, name: str) -> int:
        """Look up an original vertex by name."""
        try:
            return self.names.index(name, 0, self._n0)
        except ValueError:
            raise GraphError(f"unknown vertex name {name!r}") from None

    def path(self, vertices: Iterable[int]) -> tuple[int, ...]:
        """Validate a walk and return it as a tuple."""
        p = tuple(vertices)
        if not p:
            raise GraphError("a path has at least one vertex")
        for v in p:
            self._check(v)
        for u, v in zip(p, p[1:]):
            if not self.has_edge(u, v):
                raise GraphError(f"no edge {self.names[u]!r} -> {self.names[v]!r}")
        return p

    def path_length(self, vertices: Sequence[int]) -> float:
        return sum(self.weight(u, v) for u, v in zip(vertices, vertices[1:]))

    def project(self, vertices: Iterable[int]) -> list[int]:
        """Map every vertex of a walk to the original vertex it stands for."""
        origin = self.origin
        return [origin[v] for v in vertices]

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g._out = [{x: list(ws) for x, ws in adj.items()} for adj in self._out]
        g._in = [{u: list(ws) for u, ws in adj.items()} for adj in self._in]
        g.origin = list(self.origin)
        g.source = list(self.source)
        g.names = list(self.names)
        g._sealed = list(self._sealed)
        g._n0 = self._n0
        g._m0 = self._m0
        g._edges = self._edges
        g._retired = self._retired
        g._input = list(self._input)
        return g

    def __repr__(self) -> str:
        return (
            f"Graph(vertices={len(self)}, edges={self.edge_count()}, "
            f"n0={self._n0}, m0={self._m0})"
        )


def from_edges(
    edges: Iterable[tuple[str, str, float]],
    vertices: Iterable[str] = (),
    undirected: bool = False,
) -> Graph:
    """Build a graph from named edges; ``undirected`` adds both arcs per edge."""
    g = Graph()
    ids: dict[str, int] = {}

    def vid(name: str) -> int:
        if name not in ids:
            ids[name] = g.add_vertex(name)
        return ids[name]

    for name in vertices:
        vid(name)
    for a, b, w in edges:
        u, v = vid(a), vid(b)
        g.add_edge(u, v, w)
        if undirected:
            g.add_edge(v, u, w)
    return g
