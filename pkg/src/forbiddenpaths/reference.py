"""Ground-truth solver: Dijkstra on the product of the graph and a pattern automaton.

A product state is (vertex, automaton state). Moving along an edge feeds
the head vertex to the automaton and is disallowed when the automaton would
accept, i.e. when the walk would end with a forbidden path. This needs the
forbidden set up front, so it serves as a test oracle rather than as a
router.
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Iterable, Sequence

from .automaton import PatternAutomaton
from .graph import Graph
from .oracle import ExceptionStore


def build_automaton(store: ExceptionStore | Iterable[Sequence[int]]) -> PatternAutomaton:
    if isinstance(store, ExceptionStore):
        return store.automaton
    return PatternAutomaton(store)


def _search(g: Graph, s: int, store, target: int | None = None):
    ac = build_automaton(store)
    start = (s, ac.step(ac.ROOT, s))
    dist = {start: 0.0}
    parent: dict[tuple[int, int], tuple[int, int]] = {}
    heap = [(0.0, s, start[1])]
    done = set()
    best: dict[int, tuple[float, tuple[int, int]]] = {}
    while heap:
        d, v, q = heapq.heappop(heap)
        state = (v, q)
        if state in done:
            continue
        done.add(state)
        if v not in best:
            best[v] = (d, state)
            if v == target:
                break
        for x, w in g.out_edges(v, live=False):
            nq = ac.step(q, x)
            if ac.accepting(nq):
                continue
            nxt = (x, nq)
            nd = d + w
            if nd < dist.get(nxt, math.inf):
                dist[nxt] = nd
                parent[nxt] = state
                heapq.heappush(heap, (nd, x, nq))
    return best, parent


def _walk(parent, state) -> list[int]:
    out = [state[0]]
    while state in parent:
        state = parent[state]
        out.append(state[0])
    out.reverse()
    return out


def shortest_avoiding(g0: Graph, s: int, t: int, store) -> tuple[float, list[int]] | None:
    """Length and walk of a shortest ``s``-``t`` walk avoiding ``store``; None if none exists."""
    best, parent = _search(g0, s, store, t)
    if t not in best:
        return None
    d, state = best[t]
    return d, g0.project(_walk(parent, state))


def avoiding_distances(g0: Graph, s: int, store) -> dict[int, float]:
    """Avoiding distance from ``s`` to every original vertex (inf when unreachable)."""
    best, _ = _search(g0, s, store)
    return {v: best[v][0] if v in best else math.inf for v in range(g0.n0)}


def product_states(g0: Graph, s: int, store) -> int:
    """Number of product states reachable from ``s``."""
    ac = build_automaton(store)
    start = (s, ac.step(ac.ROOT, s))
    seen = {start}
    stack = [start]
    while stack:
        v, q = stack.pop()
        for x, _ in g0.out_edges(v, live=False):
            nq = ac.step(q, x)
            if not ac.accepting(nq) and (x, nq) not in seen:
                seen.add((x, nq))
                stack.append((x, nq))
    return len(seen)
