"""Acceptance criteria, one test per criterion.

The property suite is 1000 seeded random instances (n <= 10, m <= 30,
weights 1..10, k <= 4 forbidden paths of 1..3 edges) plus two pinned
instances of the same size class that exercise re-replication of a vertex
that was already replicated once. Each test prints one PASS/FAIL line; the
lines are repeated in the terminal summary.
"""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass, field

import pytest

from forbiddenpaths import (
    ExceptionStore,
    Router,
    avoiding_distances,
    route_all,
    route_single,
    route_weak,
    shortest_avoiding,
)
from forbiddenpaths.instances import Instance, random_graph, random_instance
from support import (
    REDISCOVERY,
    REREPLICATION,
    build,
    detour,
    full_distances,
    preservation_violation,
    realizes_occurrence,
)

SUITE_SIZE = 1000
SUITE_SEED = 0
WALK_BOUND = 12


@dataclass
class Checks:
    """Per-modification checks gathered through the router observer."""

    rebuilds: int = 0
    tree_mismatch: list = field(default_factory=list)
    vertex_overflow: list = field(default_factory=list)
    edge_mismatch: list = field(default_factory=list)
    eliminations: int = 0
    still_realized: list = field(default_factory=list)
    lost_walks: list = field(default_factory=list)

    def observer(self, label: str, L: int):
        before = {}

        def observe(event, router, occ, replicas):
            if event == "before":
                before["g"] = router.graph.copy()
                return
            g = router.graph
            self.rebuilds += 1
            if full_distances(g, router.source) != router.tree.dist[:len(g)]:
                self.tree_mismatch.append(label)
            if len(g) > g.n0 + L:
                self.vertex_overflow.append(label)
            if g.edge_count() != g.m0 - router.iterations:
                self.edge_mismatch.append((label, router.iterations, g.edge_count(), g.m0 - router.iterations))
            if g.n0 <= 7:
                old = before["g"]
                self.eliminations += 1
                if realizes_occurrence(len(old), g, occ.vertices):
                    self.still_realized.append(label)
                walk = preservation_violation(old, g, router.source, occ.vertices, WALK_BOUND)
                if walk is not None:
                    self.lost_walks.append((label, walk))

        return observe


@dataclass
class Run:
    label: str
    inst: Instance
    expected: tuple | None
    single: object
    expected_all: dict
    table: object
    weak: object


def _pinned(case) -> Instance:
    g, store = build(case["n"], case["edges"], case["paths"])
    return Instance(g, store, case["source"], case["target"])


@pytest.fixture(scope="module")
def suite():
    rng = random.Random(SUITE_SEED)
    instances = [(f"random#{i}", random_instance(rng)) for i in range(SUITE_SIZE)]
    instances += [("pinned:re-replication", _pinned(REREPLICATION)),
                  ("pinned:rediscovery", _pinned(REDISCOVERY))]
    checks = Checks()
    runs = []
    start = time.perf_counter()
    for label, inst in instances:
        g, store, s, t = inst.graph, inst.store, inst.source, inst.target
        L = store.total_size
        single = route_single(g, s, t, store, observer=checks.observer(label, L))
        table = route_all(g, s, store, observer=checks.observer(label, L))
        runs.append(Run(label, inst, shortest_avoiding(g, s, t, store), single,
                        avoiding_distances(g, s, store), table, route_weak(g, s, store)))
    return runs, checks, time.perf_counter() - start


def _names(runs) -> str:
    labels = sorted({r if isinstance(r, str) else r[0] for r in runs})
    return ", ".join(labels[:4]) + (" ..." if len(labels) > 4 else "")


def test_criterion_1_oracle_equivalence(suite, criterion):
    runs, _, elapsed = suite
    wrong = [r.label for r in runs
             if r.single.length != (r.expected[0] if r.expected else math.inf)]
    ok = not wrong and elapsed < 60
    criterion(1, "route_single distance equals the product-automaton reference", ok,
              f"{len(runs)} instances, {len(wrong)} mismatches, suite built in {elapsed:.1f}s")
    assert not wrong, wrong[:5]
    assert elapsed < 60


def test_criterion_2_termination_bound(suite, criterion):
    runs, _, _ = suite
    over_single = [r.label for r in runs if r.single.iterations > r.inst.store.k]
    over_all = [r.label for r in runs if r.table.iterations > r.inst.store.k]
    ok = not over_single and not over_all
    detail = f"runs over k: route_single {len(over_single)}, route_all {len(over_all)}"
    if over_all:
        detail += f" [{_names(over_all)}]"
    criterion(2, "modifications per run <= k", ok, detail)
    assert not over_single, over_single
    assert not over_all, over_all


def test_criterion_3_tree_optimality(suite, criterion):
    _, checks, _ = suite
    ok = not checks.tree_mismatch and checks.rebuilds > 0
    criterion(3, "rebuilt tree equals a fresh Dijkstra", ok,
              f"{checks.rebuilds} rebuilds, {len(checks.tree_mismatch)} mismatches")
    assert ok, checks.tree_mismatch[:5]


def test_criterion_4_growth_bounds(suite, criterion):
    _, checks, _ = suite
    ok = not checks.vertex_overflow and not checks.edge_mismatch
    random_only = [e for e in checks.edge_mismatch if e[0].startswith("random")]
    detail = (f"{checks.rebuilds} iterations; vertex bound broken {len(checks.vertex_overflow)}x; "
              f"edges != m0 - iterations {len(checks.edge_mismatch)}x "
              f"({len(random_only)} in the random part)")
    if checks.edge_mismatch:
        detail += f" [{_names(checks.edge_mismatch)}]"
    criterion(4, "vertices <= n0 + L and edges = m0 - iterations", ok, detail)
    assert not checks.vertex_overflow, checks.vertex_overflow[:5]
    assert not checks.edge_mismatch, checks.edge_mismatch[:5]


def test_criterion_5_elimination_and_preservation(suite, criterion):
    _, checks, _ = suite
    ok = checks.eliminations > 0 and not checks.still_realized and not checks.lost_walks
    criterion(5, "eliminated occurrence gone, avoiding walks preserved", ok,
              f"{checks.eliminations} modifications on n <= 7, walks up to {WALK_BOUND} edges; "
              f"still realized {len(checks.still_realized)}, lost walks {len(checks.lost_walks)}")
    assert ok, (checks.still_realized[:3], checks.lost_walks[:3])


def test_criterion_6_variant_agreement(suite, criterion):
    runs, _, _ = suite
    disagree = [r.label for r in runs
                if r.table.distances() != r.weak.distances() or r.table.distances() != r.expected_all]
    weak_over = [r.label for r in runs
                 if r.weak.oracle_queries > r.inst.graph.n0 + r.inst.store.total_size]
    fail_over = [r.label for r in runs if r.table.failed_queries > r.inst.store.k]
    ok = not disagree and not weak_over and not fail_over
    detail = (f"distance maps differ {len(disagree)}x; weak queries > n0 + L {len(weak_over)}x; "
              f"route_all failed queries > k {len(fail_over)}x")
    if fail_over:
        detail += f" [{_names(fail_over)}]"
    criterion(6, "route_all and route_weak agree within their query bounds", ok, detail)
    assert not disagree, disagree[:5]
    assert not weak_over, weak_over[:5]
    assert not fail_over, fail_over


def test_criterion_7_detour(criterion):
    g, store = detour()
    s, t = g.vertex("s"), g.vertex("t")
    out = route_single(g, s, t, store)
    names = [g.names[v] for v in out.path]
    ref = shortest_avoiding(g, s, t, store)
    ok = names == ["s", "c", "a", "b", "t"] and out.length == 4 and ref[0] == 4
    criterion(7, "five-vertex detour routes s c a b t with length 4", ok,
              f"path {' '.join(names)}, length {out.length:g}, reference {ref[0]:g}")
    assert ok


def test_criterion_8_non_simple_optimum(suite, criterion):
    runs, _, _ = suite
    repeats = [r for r in runs
               if r.expected and len(set(r.expected[1])) < len(r.expected[1])]
    agree = [r for r in repeats if r.single.length == r.expected[0]]
    ok = bool(repeats) and len(agree) == len(repeats)
    example = ""
    if repeats:
        r = repeats[0]
        example = f"; e.g. {r.label}: {' '.join(r.inst.graph.names[v] for v in r.expected[1])}"
    criterion(8, "suite contains a vertex-repeating optimum and route_single matches it", ok,
              f"{len(repeats)} instances with repeating optimal walks, {len(agree)} matched{example}")
    assert ok


# -- scaling ----------------------------------------------------------------

SCALE_SIZES = (1000, 2000, 4000)
SCALE_K = 16
SCALE_SEEDS = 2


def _scaling_instance(n: int, seed: int) -> Instance:
    """Grow forbidden paths one at a time along the route the router currently returns."""
    rng = random.Random(seed)
    g = random_graph(rng, n, 8 * n, max_weight=100)
    while True:
        s, t = rng.sample(range(n), 2)
        if route_single(g, s, t, ExceptionStore([], g)).feasible:
            break
    paths: list[tuple[int, ...]] = []
    for _ in range(8 * SCALE_K):
        if len(paths) == SCALE_K:
            break
        out = route_single(g, s, t, ExceptionStore(paths, g))
        if not out.feasible:
            break
        walk = out.path
        edges = min(rng.randint(1, 3), len(walk) - 1)
        i = rng.randrange(len(walk) - edges)
        cut = tuple(walk[i:i + edges + 1])
        if len(set(cut)) == len(cut) and cut not in paths:
            paths.append(cut)
    return Instance(g, ExceptionStore(paths, g), s, t)


def _per_iteration_seconds(inst: Instance) -> float:
    best = math.inf
    for _ in range(3):
        start = time.perf_counter()
        router = Router(inst.graph, inst.source, inst.store)
        router.route(inst.target)
        elapsed = time.perf_counter() - start
        best = min(best, elapsed / (router.iterations + 1))
    return best


def test_criterion_9_scaling(criterion):
    start = time.perf_counter()
    per_iter = {}
    iterations = {}
    for n in SCALE_SIZES:
        samples = []
        for seed in range(SCALE_SEEDS):
            inst = _scaling_instance(n, seed)
            samples.append(_per_iteration_seconds(inst))
            iterations.setdefault(n, []).append(inst.store.k)
        per_iter[n] = statistics.median(samples)
    total = time.perf_counter() - start

    def model(n: int) -> float:
        return n * math.log(n) + 8 * n

    ratios = []
    for a, b in zip(SCALE_SIZES, SCALE_SIZES[1:]):
        ratios.append(((per_iter[b] / per_iter[a]), model(b) / model(a)))
    within = all(measured <= 2 * expected for measured, expected in ratios)
    ok = within and total < 30
    shown = ", ".join(f"{m:.2f} vs model {e:.2f}" for m, e in ratios)
    timings = ", ".join(f"n={n}: {per_iter[n] * 1e3:.1f}ms" for n in SCALE_SIZES)
    criterion(9, "per-iteration time tracks n log n + m", ok,
              f"{timings}; growth {shown}; forbidden paths per instance {iterations[SCALE_SIZES[-1]]}; "
              f"total {total:.1f}s")
    assert within, ratios
    assert total < 30
