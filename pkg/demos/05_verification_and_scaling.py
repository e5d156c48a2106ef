# %% [markdown]
# # Checking the router and timing it
#
# The reference solver knows every forbidden path in advance and runs
# Dijkstra over (vertex, pattern-automaton state) pairs. `verify_instance`
# runs all three routing variants against it.

# %%
import math
import random
import time

from forbiddenpaths import ExceptionStore, Router, route_single
from forbiddenpaths.cli import verify_instance
from forbiddenpaths.instances import random_graph, random_instance

rng = random.Random(1)
problems = 0
for _ in range(500):
    inst = random_instance(rng)
    problems += len(verify_instance(inst.graph, inst.store, inst.source))
print("disagreements over 500 random instances:", problems)

# %% [markdown]
# ## Time per repair on larger graphs
#
# Forbidden paths are added one at a time, each cut from the route the
# router currently returns, so every one of them gets in the way. The time
# per iteration should grow roughly like `n log n + m`.

# %%


def grow_instance(n, seed, k=16):
    r = random.Random(seed)
    g = random_graph(r, n, 8 * n, max_weight=100)
    s, t = r.sample(range(n), 2)
    paths = []
    for _ in range(8 * k):
        if len(paths) == k:
            break
        out = route_single(g, s, t, ExceptionStore(paths, g))
        if not out.feasible:
            break
        edges = min(r.randint(1, 3), len(out.path) - 1)
        if edges < 1:
            break
        i = r.randrange(len(out.path) - edges)
        cut = tuple(out.path[i:i + edges + 1])
        if len(set(cut)) == len(cut) and cut not in paths:
            paths.append(cut)
    return g, ExceptionStore(paths, g), s, t


previous = None
for n in (1000, 2000, 4000):
    g, store, s, t = grow_instance(n, seed=0)
    per = math.inf
    for _ in range(3):
        start = time.perf_counter()
        router = Router(g, s, store)
        router.route(t)
        per = min(per, (time.perf_counter() - start) / (router.iterations + 1))
    model = n * math.log(n) + 8 * n
    note = "" if previous is None else f"  growth {per / previous[0]:.2f} (model {model / previous[1]:.2f})"
    print(f"n={n}: {router.iterations} iterations, {per * 1e3:.1f} ms each{note}")
    previous = (per, model)
