"""Forbidden-path store and the oracle that answers path-feasibility queries.

Queries are made on walks over original vertices; the router projects
replica vertices before asking.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .automaton import PatternAutomaton
from .graph import Graph


@dataclass(frozen=True)
class ForbiddenPath:
    """A simple path of the input graph that no route may contain."""

    id: int
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    @property
    def intermediate_count(self) -> int:
        return len(self.vertices) - 2


@dataclass(frozen=True)
class Hit:
    """An occurrence of ``exception`` in a queried walk, ending at index ``end``."""

    exception: ForbiddenPath
    end: int

    @property
    def start(self) -> int:
        return self.end - len(self.exception) + 1


class ExceptionStore:
    """The set of forbidden paths, hidden behind ``query_earliest``/``query_any``.

    A reply of ``None`` means the walk avoids every forbidden path. Each
    query call increments :attr:`queries`.
    """

    def __init__(self, paths: Iterable[Sequence[int]] = (), graph: Graph | None = None) -> None:
        items = []
        seen: set[tuple[int, ...]] = set()
        for pid, p in enumerate(paths):
            vertices = tuple(p)
            if len(vertices) < 2:
                raise ValueError(f"forbidden path {vertices} needs at least one edge")
            if len(set(vertices)) != len(vertices):
                raise ValueError(f"forbidden path {vertices} is not simple")
            if vertices in seen:
                raise ValueError(f"duplicate forbidden path {vertices}")
            if graph is not None:
                for u, v in zip(vertices, vertices[1:]):
                    if not (0 <= u < graph.n0 and 0 <= v < graph.n0 and graph.has_edge(u, v)):
                        raise ValueError(f"forbidden path {vertices} uses a non-edge ({u}, {v})")
            seen.add(vertices)
            items.append(ForbiddenPath(pid, vertices))
        self.items: tuple[ForbiddenPath, ...] = tuple(items)
        self.automaton = PatternAutomaton(x.vertices for x in self.items)
        self.queries = 0

    @property
    def k(self) -> int:
        return len(self.items)

    @property
    def total_size(self) -> int:
        """Total number of vertices over all forbidden paths."""
        return sum(len(x) for x in self.items)

    L = total_size

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def count_queries(self) -> int:
        return self.queries

    def query_earliest(self, path: Sequence[int]) -> Hit | None:
        """Return the occurrence whose last vertex is earliest in ``path``.

        Ties between forbidden paths ending at the same index go to the
        lowest id.
        """
        self.queries += 1
        ac = self.automaton
        state = ac.ROOT
        for i, v in enumerate(path):
            state = ac.step(state, v)
            pid = ac.lowest[state]
            if pid is not None:
                return Hit(self.items[pid], i)
        return None

    def query_any(self, path: Sequence[int], rng: random.Random | None = None) -> Hit | None:
        """Return some occurrence in ``path``.

        Without ``rng`` this is the first match the scan reaches; with one,
        an occurrence is drawn uniformly from all of them.
        """
        if rng is None:
            return self.query_earliest(path)
        self.queries += 1
        hits = self.occurrences(path)
        return rng.choice(hits) if hits else None

    def occurrences(self, path: Sequence[int]) -> list[Hit]:
        """Every occurrence in ``path``, ordered by end index then id. Not counted as a query."""
        ac = self.automaton
        state = ac.ROOT
        hits = []
        for i, v in enumerate(path):
            state = ac.step(state, v)
            for pid in sorted(ac.matches(state)):
                hits.append(Hit(self.items[pid], i))
        return hits


def scan_occurrences(store: ExceptionStore, path: Sequence[int]) -> list[Hit]:
    """Brute-force counterpart of :meth:`ExceptionStore.occurrences`."""
    path = list(path)
    hits = []
    for i in range(len(path)):
        for x in store.items:
            start = i - len(x) + 1
            if start >= 0 and tuple(path[start:i + 1]) == x.vertices:
                hits.append(Hit(x, i))
    return hits
