"""Shortest walks avoiding forbidden paths that are only revealed by an oracle.

The router keeps a modified graph and a shortest-path tree rooted at the
source. It tries the tree path to the target; when the oracle reports a
forbidden path, the intermediate vertices of that occurrence are replicated
so the forbidden path disappears while every walk avoiding it survives, and
the tree is repaired incrementally from the part that is still valid.
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .graph import Graph, GraphError
from .oracle import ExceptionStore, ForbiddenPath, Hit

INF = math.inf

Query = Callable[[Sequence[int]], "Hit | None"]


class RoutingError(RuntimeError):
    """An internal invariant of the routing algorithm was violated."""


@dataclass
class SptState:
    """Shortest-path tree rooted at ``root``.

    ``parent[v]`` is -1 for the root and for unreachable vertices. A parent
    link may outlive the live graph edge it was relaxed over.
    """

    root: int
    parent: list[int]
    dist: list[float]
    children: list[set[int]]

    @classmethod
    def empty(cls, root: int, n: int) -> SptState:
        return cls(root, [-1] * n, [INF] * n, [set() for _ in range(n)])

    def copy(self) -> SptState:
        return SptState(self.root, list(self.parent), list(self.dist), [set(c) for c in self.children])

    def grow(self, n: int) -> None:
        while len(self.parent) < n:
            self.parent.append(-1)
            self.dist.append(INF)
            self.children.append(set())

    def reached(self, v: int) -> bool:
        return self.dist[v] < INF

    def path_to(self, v: int) -> list[int] | None:
        if self.dist[v] == INF:
            return None
        path = [v]
        while v != self.root:
            v = self.parent[v]
            path.append(v)
        path.reverse()
        return path

    def subtree(self, v: int) -> list[int]:
        out = [v]
        i = 0
        while i < len(out):
            out.extend(self.children[out[i]])
            i += 1
        return out


@dataclass(frozen=True)
class Occurrence:
    """A forbidden path located on a concrete walk of the current graph."""

    exception: ForbiddenPath
    start: int
    vertices: tuple[int, ...]

    @property
    def end(self) -> int:
        return self.start + len(self.vertices) - 1

    @property
    def head(self) -> int:
        return self.vertices[0]

    @property
    def tail(self) -> int:
        return self.vertices[-1]

    @property
    def intermediates(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


@dataclass
class RouteOutcome:
    """Result of routing to one destination.

    ``path`` is over original vertices, or None if the destination cannot be
    reached without using a forbidden path.
    """

    path: list[int] | None
    length: float
    iterations: int = 0
    oracle_queries: int = 0
    replicas_created: int = 0

    @property
    def feasible(self) -> bool:
        return self.path is not None


@dataclass
class RouteTable(Mapping):
    """Outcomes for every original destination plus whole-run statistics."""

    outcomes: dict[int, RouteOutcome]
    iterations: int = 0
    oracle_queries: int = 0
    failed_queries: int = 0
    replicas_created: int = 0
    rediscoveries: int = 0
    graph: Graph | None = field(default=None, repr=False)

    def __getitem__(self, v: int) -> RouteOutcome:
        return self.outcomes[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.outcomes)

    def __len__(self) -> int:
        return len(self.outcomes)

    def distances(self) -> dict[int, float]:
        return {v: o.length for v, o in self.outcomes.items()}


def _as_query(oracle: ExceptionStore | Query, weak: bool) -> Query:
    if isinstance(oracle, ExceptionStore):
        return oracle.query_any if weak else oracle.query_earliest
    return oracle


# -- tree construction ------------------------------------------------------


def initial_tree(g: Graph, s: int) -> SptState:
    """Plain Dijkstra over the live graph; ties settle by (distance, vertex id)."""
    tree = SptState.empty(s, len(g))
    dist, parent = tree.dist, tree.parent
    done = [False] * len(g)
    dist[s] = 0.0
    heap = [(0.0, s)]
    while heap:
        d, v = heapq.heappop(heap)
        if done[v]:
            continue
        done[v] = True
        if v != s:
            tree.children[parent[v]].add(v)
        for x, w in g.out_edges(v):
            nd = d + w
            if nd < dist[x]:
                dist[x] = nd
                parent[x] = v
                heapq.heappush(heap, (nd, x))
    return tree


def locate_exception(g: Graph, tree_path: Sequence[int], reply: Hit) -> Occurrence:
    """Map an oracle hit on the projected walk back to concrete vertices."""
    start, end = reply.start, reply.end
    if start < 0 or end >= len(tree_path):
        raise RoutingError(f"oracle reported indices [{start}, {end}] outside a walk of {len(tree_path)} vertices")
    vertices = tuple(tree_path[start:end + 1])
    if tuple(g.project(vertices)) != reply.exception.vertices:
        raise RoutingError("oracle hit does not match the queried walk")
    return Occurrence(reply.exception, start, vertices)


def modify_graph(g: Graph, occ: Occurrence) -> list[int]:
    """Replicate the occurrence's intermediate vertices so the occurrence is gone.

    Afterwards each replica ``v'_j`` is entered from every in-neighbour of
    ``v_j`` except ``v_{j-1}`` (and from the previous replica), and leaves only
    along the chain ``v'_j -> v'_{j+1} -> ... -> v'_r -> v_{r+1}``. The old
    edge ``v_r -> v_{r+1}`` is deleted and the old intermediates are sealed:
    their in-edges leave the live graph, since their labels are final, but
    remain available to later replication. Returns the replicas in chain
    order.
    """
    chain = occ.vertices
    for u, v in zip(chain, chain[1:]):
        if not g.has_edge(u, v):
            raise GraphError(f"occurrence edge {g.names[u]!r} -> {g.names[v]!r} is missing")
    inner = chain[1:-1]
    if not inner:
        g.delete_edge(chain[0], chain[1])
        return []

    replicas = [g.add_replica(v) for v in inner]
    succ = replicas[1:] + [chain[-1]]
    for prev, rep, nxt in zip(chain, replicas, succ):
        g.delete_edge(prev, rep)
        for x in list({x for x, _ in g.out_edges(rep, live=False)}):
            extra = g.multiplicity(rep, x) - (1 if x == nxt else 0)
            for _ in range(extra):
                g.delete_edge(rep, x)
        if not g.has_edge(rep, nxt):
            raise RoutingError("replica chain edge was not created")
    g.delete_edge(chain[-2], chain[-1])
    for v in inner:
        g.seal(v)
    return replicas


def rebuild_tree(
    g: Graph,
    t_prev: SptState,
    occ: Occurrence,
    replicas: Sequence[int],
    in_place: bool = False,
) -> SptState:
    """Repair the tree after :func:`modify_graph`.

    Only the replicas and the previous subtree under the occurrence's end
    vertex are recomputed; everything else is kept verbatim. With
    ``in_place`` the previous tree is updated instead of copied, so the cost
    depends on the size of that frontier rather than on the whole graph.
    """
    tree = t_prev if in_place else t_prev.copy()
    tree.grow(len(g))
    frontier = set(tree.subtree(occ.tail)) if tree.reached(occ.tail) else {occ.tail}
    frontier.update(replicas)
    parent, dist, children = tree.parent, tree.dist, tree.children
    for v in frontier:
        if g.is_sealed(v):
            raise RoutingError(f"sealed vertex {g.names[v]!r} fell into the repair frontier")
        p = parent[v]
        if p >= 0 and p not in frontier:
            children[p].discard(v)
        parent[v] = -1
        dist[v] = INF
        children[v] = set()

    heap = []
    for v in frontier:
        best, best_u = INF, -1
        for u, w in g.in_edges(v):
            if u in frontier or dist[u] == INF:
                continue
            nd = dist[u] + w
            if nd < best or (nd == best and u < best_u):
                best, best_u = nd, u
        if best < INF:
            dist[v] = best
            parent[v] = best_u
            heap.append((best, v))
    heapq.heapify(heap)

    done = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v in done or d != dist[v]:
            continue
        done.add(v)
        children[parent[v]].add(v)
        for x, w in g.out_edges(v):
            nd = d + w
            if x not in frontier:
                if nd < dist[x]:
                    raise RoutingError(f"repair would shorten settled vertex {g.names[x]!r}")
                continue
            if x not in done and nd < dist[x]:
                dist[x] = nd
                parent[x] = v
                heapq.heappush(heap, (nd, x))
    return tree


# -- strong-oracle routing ---------------------------------------------------


def _iteration_cap(g: Graph) -> int:
    # Safety net only: a run needs about one modification per forbidden
    # path, and never comes close to this.
    return 64 * (g.n0 + g.m0 + 1) ** 2


class Router:
    """A routing session: working graph, tree and oracle for one source.

    ``observer(event, router, occurrence, replicas)`` is called with event
    ``"before"`` right before each graph modification and ``"after"`` once
    the tree has been rebuilt.
    """

    def __init__(
        self,
        graph: Graph,
        source: int,
        oracle: ExceptionStore | Query,
        observer: Callable[..., None] | None = None,
        copy: bool = True,
    ) -> None:
        if not (0 <= source < graph.n0):
            raise GraphError(f"source {source} is not an original vertex")
        self.graph = graph.copy() if copy else graph
        self.source = source
        self.query = _as_query(oracle, weak=False)
        self.observer = observer
        self.tree = initial_tree(self.graph, source)
        self.iterations = 0
        self.oracle_queries = 0
        self.failed_queries = 0
        self.replicas_created = 0
        self.discovered: set[tuple[int, ...]] = set()
        # occurrences of an already discovered forbidden path
        self.rediscoveries = 0
        self.max_iterations = _iteration_cap(self.graph)

    def route(self, target: int) -> RouteOutcome:
        g = self.graph
        if not (0 <= target < g.n0):
            raise GraphError(f"target {target} is not an original vertex")
        before = (self.iterations, self.oracle_queries, self.replicas_created)
        while True:
            walk = self.tree.path_to(target)
            if walk is None:
                return self._outcome(None, INF, before)
            projected = g.project(walk)
            reply = self.query(projected)
            self.oracle_queries += 1
            if reply is None:
                return self._outcome(projected, self.tree.dist[target], before)
            self.failed_queries += 1
            self.repair(locate_exception(g, walk, reply))

    def repair(self, occ: Occurrence) -> list[int]:
        key = occ.exception.vertices
        if key in self.discovered:
            self.rediscoveries += 1
        self.discovered.add(key)
        if self.iterations >= self.max_iterations:
            raise RoutingError(f"no convergence after {self.iterations} graph modifications")
        if self.observer:
            self.observer("before", self, occ, ())
        replicas = modify_graph(self.graph, occ)
        self.tree = rebuild_tree(self.graph, self.tree, occ, replicas, in_place=True)
        self.iterations += 1
        self.replicas_created += len(replicas)
        if self.observer:
            self.observer("after", self, occ, replicas)
        return replicas

    def _outcome(self, path, length, before) -> RouteOutcome:
        it, q, r = before
        return RouteOutcome(
            path,
            length,
            iterations=self.iterations - it,
            oracle_queries=self.oracle_queries - q,
            replicas_created=self.replicas_created - r,
        )


def route_single(
    g0: Graph,
    s: int,
    t: int,
    oracle: ExceptionStore | Query,
    observer: Callable[..., None] | None = None,
) -> RouteOutcome:
    """Shortest walk from ``s`` to ``t`` avoiding every forbidden path.

    ``oracle`` must report the occurrence ending earliest on the walk; an
    :class:`ExceptionStore` is queried through ``query_earliest``.
    """
    if not (0 <= t < g0.n0):
        raise GraphError(f"target {t} is not an original vertex")
    return Router(g0, s, oracle, observer).route(t)


def route_all(
    g0: Graph,
    s: int,
    oracle: ExceptionStore | Query,
    observer: Callable[..., None] | None = None,
) -> RouteTable:
    """Avoiding walks from ``s`` to every original vertex, sharing one session.

    Destinations are handled in ascending id order and each reuses the graph
    and tree left by the previous one.
    """
    router = Router(g0, s, oracle, observer)
    outcomes = {t: router.route(t) for t in range(g0.n0)}
    return RouteTable(
        outcomes,
        iterations=router.iterations,
        oracle_queries=router.oracle_queries,
        failed_queries=router.failed_queries,
        replicas_created=router.replicas_created,
        rediscoveries=router.rediscoveries,
        graph=router.graph,
    )


# -- weak-oracle routing -----------------------------------------------------


def route_weak(g0: Graph, s: int, oracle: ExceptionStore | Query) -> RouteTable:
    """Avoiding walks from ``s`` to all vertices with the oracle queried inside Dijkstra.

    Every dequeued vertex has its tree path tried. The oracle may return any
    forbidden path on the walk; since the walk up to the parent was already
    confirmed, whatever it returns ends at the dequeued vertex. On a failure
    the graph is modified as in :func:`modify_graph`, and the dequeued vertex
    and the new replicas are re-seeded from settled in-neighbours.
    """
    if not (0 <= s < g0.n0):
        raise GraphError(f"source {s} is not an original vertex")
    g = g0.copy()
    query = _as_query(oracle, weak=True)
    dist = [INF] * len(g)
    parent = [-1] * len(g)
    settled = [False] * len(g)
    dist[s] = 0.0
    heap = [(0.0, s)]
    queries = failures = replicas_total = rediscoveries = 0
    discovered: set[tuple[int, ...]] = set()
    cap = _iteration_cap(g)

    def walk_to(v: int) -> list[int]:
        out = [v]
        while v != s:
            v = parent[v]
            out.append(v)
        out.reverse()
        return out

    while heap:
        d, v = heapq.heappop(heap)
        if settled[v] or d != dist[v]:
            continue
        walk = walk_to(v)
        reply = query(g.project(walk))
        queries += 1
        if reply is None:
            settled[v] = True
            for x, w in g.out_edges(v):
                nd = d + w
                if not settled[x] and nd < dist[x]:
                    dist[x] = nd
                    parent[x] = v
                    heapq.heappush(heap, (nd, x))
            continue

        failures += 1
        if reply.end != len(walk) - 1:
            raise RoutingError("forbidden path does not end at the dequeued vertex")
        occ = locate_exception(g, walk, reply)
        key = occ.exception.vertices
        if key in discovered:
            rediscoveries += 1
        discovered.add(key)
        if failures > cap:
            raise RoutingError(f"no convergence after {failures} graph modifications")
        replicas = modify_graph(g, occ)
        replicas_total += len(replicas)
        grow = len(g) - len(dist)
        dist.extend([INF] * grow)
        parent.extend([-1] * grow)
        settled.extend([False] * grow)
        for x in (v, *replicas):
            best, best_u = INF, -1
            for u, w in g.in_edges(x):
                if settled[u]:
                    nd = dist[u] + w
                    if nd < best or (nd == best and u < best_u):
                        best, best_u = nd, u
            dist[x] = best
            parent[x] = best_u
            if best < INF:
                heapq.heappush(heap, (best, x))

    outcomes = {}
    for t in range(g.n0):
        if settled[t]:
            outcomes[t] = RouteOutcome(g.project(walk_to(t)), dist[t])
        else:
            outcomes[t] = RouteOutcome(None, INF)
    table = RouteTable(
        outcomes,
        iterations=failures,
        oracle_queries=queries,
        failed_queries=failures,
        replicas_created=replicas_total,
        rediscoveries=rediscoveries,
        graph=g,
    )
    for o in outcomes.values():
        o.iterations, o.oracle_queries, o.replicas_created = failures, queries, replicas_total
    return table
