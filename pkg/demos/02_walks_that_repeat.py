# %% [markdown]
# # Best routes may loop
#
# A turn ban can make the best route visit a place twice. Here `s -> a -> t`
# is banned, so the route goes around the block `a -> c -> a` first. Asking
# for a simple path would miss it (and finding simple avoiding paths is a
# much harder problem in general).

# %%
import random

from forbiddenpaths import ExceptionStore, from_edges, route_single, shortest_avoiding
from forbiddenpaths.instances import random_instance

g = from_edges([("s", "a", 1), ("a", "t", 1), ("a", "c", 1), ("c", "a", 1)])
s, a, t, c = (g.vertex(v) for v in "s a t c".split())
store = ExceptionStore([[s, a, t]], g)

out = route_single(g, s, t, store)
print("router:   ", " ".join(g.names[v] for v in out.path), out.length)
length, path = shortest_avoiding(g, s, t, store)
print("reference:", " ".join(g.names[v] for v in path), length)

# %% [markdown]
# Inside the router the loop is not a loop at all: the second visit to `a`
# goes through a copy of `a` that cannot continue to `c`.

# %%
from forbiddenpaths import Router

router = Router(g, s, store)
router.route(t)
walk = router.tree.path_to(t)
print(" ".join(router.graph.names[v] for v in walk))

# %% [markdown]
# ## How common is this?
#
# Among small random instances a repeating optimum is rare but does occur.

# %%
rng = random.Random(0)
found = 0
for i in range(2000):
    inst = random_instance(rng)
    ref = shortest_avoiding(inst.graph, inst.source, inst.target, inst.store)
    if ref and len(set(ref[1])) < len(ref[1]):
        got = route_single(inst.graph, inst.source, inst.target, inst.store)
        found += 1
        if found <= 3:
            print(f"#{i}: {' '.join(inst.graph.names[v] for v in ref[1])} "
                  f"(length {ref[0]:g}, router {got.length:g})")
print(found, "of 2000 instances need a repeated vertex")
