"""Random routing instances for tests, verification and demos."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph
from .oracle import ExceptionStore
from .router import initial_tree


@dataclass
class Instance:
    graph: Graph
    store: ExceptionStore
    source: int
    target: int


def random_graph(rng: random.Random, n: int, m: int, max_weight: int = 10) -> Graph:
    """Directed graph on ``n`` vertices with ``m`` distinct arcs and integer weights."""
    m = min(m, n * (n - 1))
    g = Graph()
    for i in range(n):
        g.add_vertex(f"v{i}")
    if n * (n - 1) <= 4 * m:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        chosen = rng.sample(pairs, m)
    else:
        seen: set[tuple[int, int]] = set()
        chosen = []
        while len(chosen) < m:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v and (u, v) not in seen:
                seen.add((u, v))
                chosen.append((u, v))
    for u, v in chosen:
        g.add_edge(u, v, rng.randint(1, max_weight))
    return g


def _random_simple_path(rng: random.Random, g: Graph, edges: int) -> tuple[int, ...] | None:
    v = rng.randrange(g.n0)
    path = [v]
    for _ in range(edges):
        options = [x for x, _ in g.out_edges(path[-1]) if x not in path]
        if not options:
            return None
        path.append(rng.choice(options))
    return tuple(path)


def random_exceptions(
    rng: random.Random,
    g: Graph,
    k: int,
    max_edges: int = 3,
    source: int | None = None,
    bias: float = 0.6,
) -> ExceptionStore:
    """Up to ``k`` distinct simple forbidden paths of 1..``max_edges`` edges.

    With probability ``bias`` a path is cut from a shortest-path-tree branch
    out of ``source``, so that it actually gets in the router's way.
    """
    tree = initial_tree(g, source) if source is not None else None
    reached = [v for v in range(g.n0) if tree and tree.reached(v) and v != source]
    found: list[tuple[int, ...]] = []
    for _ in range(20 * k):
        if len(found) >= k:
            break
        edges = rng.randint(1, max_edges)
        path = None
        if reached and rng.random() < bias:
            branch = tree.path_to(rng.choice(reached))
            if len(branch) >= 2:
                edges = min(edges, len(branch) - 1)
                end = rng.randint(edges, len(branch) - 1)
                path = tuple(branch[end - edges:end + 1])
        else:
            path = _random_simple_path(rng, g, edges)
        if path and path not in found:
            found.append(path)
    return ExceptionStore(found, g)


def random_instance(
    rng: random.Random,
    n_max: int = 10,
    m_max: int = 30,
    k_max: int = 4,
    max_edges: int = 3,
    max_weight: int = 10,
) -> Instance:
    n = rng.randint(2, n_max)
    m = rng.randint(n - 1, min(m_max, n * (n - 1)))
    g = random_graph(rng, n, m, max_weight)
    s, t = rng.sample(range(n), 2)
    store = random_exceptions(rng, g, rng.randint(0, k_max), max_edges, source=s)
    return Instance(g, store, s, t)
