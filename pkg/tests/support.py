"""Independent checkers shared by the test modules.

Nothing here calls into the router; these are the oracles the router is
measured against.
"""

from __future__ import annotations

import heapq
import math

from forbiddenpaths import ExceptionStore, Graph, from_edges

DETOUR_EDGES = [("s", "a", 1), ("a", "b", 1), ("b", "t", 1), ("s", "c", 1), ("c", "a", 1)]


def detour() -> tuple[Graph, ExceptionStore]:
    """Five-vertex bidirectional instance with X = {(s, a, b, t)}."""
    g = from_edges(DETOUR_EDGES, vertices="s a b t c".split(), undirected=True)
    store = ExceptionStore([[g.vertex(v) for v in "s a b t".split()]], g)
    return g, store


def ids(g: Graph, names: str) -> list[int]:
    return [g.vertex(v) for v in names.split()]


def full_distances(g: Graph, s: int) -> list[float]:
    """Textbook Dijkstra over every edge of ``g``, retired ones included."""
    dist = [math.inf] * len(g)
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for x, w in g.out_edges(v, live=False):
            if d + w < dist[x]:
                dist[x] = d + w
                heapq.heappush(heap, (d + w, x))
    return dist


def walks(g: Graph, start: int, max_edges: int):
    """Every walk from ``start`` with at most ``max_edges`` edges (full graph)."""
    stack = [(start,)]
    while stack:
        w = stack.pop()
        yield w
        if len(w) - 1 < max_edges:
            for x in {x for x, _ in g.out_edges(w[-1], live=False)}:
                stack.append(w + (x,))


def brute_force_avoiding(g: Graph, s: int, t: int, store: ExceptionStore, max_edges: int) -> float:
    """Shortest avoiding walk found by enumerating walks up to ``max_edges`` edges."""
    best = math.inf
    for w in walks(g, s, max_edges):
        if w[-1] == t and not store.occurrences(g.project(w)):
            best = min(best, g.path_length(w))
    return best


def corresponding(before_size: int, after: Graph, v: int) -> int:
    """Vertex of the pre-modification graph that ``v`` copies (itself if old)."""
    return v if v < before_size else after.source[v]


def realizes_occurrence(before_size: int, after: Graph, occurrence: tuple[int, ...]) -> bool:
    """Whether some walk of ``after`` corresponds to the concrete ``occurrence``."""
    frontier = [v for v in range(len(after)) if corresponding(before_size, after, v) == occurrence[0]]
    for nxt in occurrence[1:]:
        frontier = {
            x
            for v in frontier
            for x, _ in after.out_edges(v, live=False)
            if corresponding(before_size, after, x) == nxt
        }
        if not frontier:
            return False
    return True


def preservation_violation(
    before: Graph, after: Graph, s: int, occurrence: tuple[int, ...], max_edges: int
) -> tuple[int, ...] | None:
    """Find a walk from ``s`` in ``before`` avoiding ``occurrence`` with no copy in ``after``.

    A copy must start at ``s``, end at the same old vertex, and map back
    vertex by vertex (so it has the same projection and length). Returns the
    offending walk or None.
    """
    size = len(before)
    head = occurrence[0]

    def advance(state: int, x: int) -> int:
        if occurrence[state] == x:
            return state + 1
        return 1 if x == head else 0

    seen: dict[tuple, int] = {}
    stack = [((s,), advance(0, s), frozenset([s]))]
    while stack:
        walk, state, copies = stack.pop()
        if walk[-1] not in copies:
            return walk
        budget = max_edges - (len(walk) - 1)
        key = (walk[-1], state, copies)
        if seen.get(key, -1) >= budget:
            continue
        seen[key] = budget
        if budget == 0:
            continue
        for x in {x for x, _ in before.out_edges(walk[-1], live=False)}:
            nstate = advance(state, x)
            if nstate == len(occurrence):
                continue
            ncopies = frozenset(
                y
                for c in copies
                for y, _ in after.out_edges(c, live=False)
                if corresponding(size, after, y) == x
            )
            stack.append((walk + (x,), nstate, ncopies))
    return None


def edge_multiset(g: Graph, live: bool = False) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for u, v, _ in g.edges(live=live):
        out[u, v] = out.get((u, v), 0) + 1
    return out


def build(n: int, edges, paths) -> tuple[Graph, ExceptionStore]:
    """Graph on ``v0..v{n-1}`` from integer edges, plus its forbidden paths."""
    g = Graph()
    for i in range(n):
        g.add_vertex(f"v{i}")
    for u, v, w in edges:
        g.add_edge(u, v, w)
    return g, ExceptionStore(paths, g)


# A: after the first modification seals v2, the occurrence (v0, v2, v3) has
# v2 as its intermediate again. The new replica of v2 inherits the retired
# in-edges of v2, so the live edge count rises instead of dropping by one.
REREPLICATION = dict(
    n=6,
    edges=[(0, 2, 2), (0, 3, 9), (1, 0, 5), (1, 3, 9), (2, 3, 6), (2, 5, 9), (3, 0, 1),
           (3, 2, 9), (4, 0, 7), (4, 2, 9), (4, 3, 4), (5, 0, 2), (5, 2, 7), (5, 4, 6)],
    paths=[(0, 2, 3), (0, 3, 2), (0, 2, 5), (5, 0, 3)],
    source=0,
    target=4,
)

# B: route_all from v2 eliminates (v2, v1, v3) and (v0, v1); replicating v0
# for (v2, v1, v0, v4) then copies an out-edge into a copy of v1, so (v0, v1)
# is reported a second time. Four modifications for three forbidden paths.
REDISCOVERY = dict(
    n=5,
    edges=[(1, 0, 7), (3, 2, 7), (0, 1, 9), (2, 1, 10), (1, 3, 8), (0, 4, 3)],
    paths=[(2, 1, 0, 4), (2, 1, 3), (0, 1)],
    source=2,
    target=4,
)
