# %% [markdown]
# # One detour, step by step
#
# Five places connected by two-way streets of length 1: `s-a`, `a-b`, `b-t`,
# `s-c`, `c-a`. Driving `s a b t` in one go is not allowed, but every
# piece of it is. The router does not know this up front; it only learns it
# by asking the oracle about a concrete route.

# %%
from forbiddenpaths import (
    ExceptionStore,
    from_edges,
    initial_tree,
    locate_exception,
    modify_graph,
    rebuild_tree,
    route_single,
)

g = from_edges(
    [("s", "a", 1), ("a", "b", 1), ("b", "t", 1), ("s", "c", 1), ("c", "a", 1)],
    vertices="s a b t c".split(),
    undirected=True,
)
s, a, b, t, c = (g.vertex(v) for v in "s a b t c".split())
store = ExceptionStore([[s, a, b, t]], g)


def show(path):
    return " ".join(g.names[v] for v in path)


# %% [markdown]
# ## The plain shortest-path tree
#
# Without restrictions the best route is `s a b t` of length 3. That is the
# first thing the router proposes.

# %%
tree = initial_tree(g, s)
walk = tree.path_to(t)
print("tree route:", show(walk), "length", tree.dist[t])
reply = store.query_earliest(g.project(walk))
print("oracle says:", show(reply.exception.vertices), "ends at position", reply.end)

# %% [markdown]
# ## Replicating the middle of the forbidden path
#
# `a` and `b` get copies `a'` and `b'`. A copy can be entered the way the
# original could, except from its predecessor on the forbidden path, and
# it can only continue along the copied chain `a' -> b' -> t`. The old edge
# `b -> t` is removed, so `s a b t` no longer exists while `s a b`, `a b t`
# (through `a'`) and everything else survive.

# %%
work = g.copy()
occ = locate_exception(work, walk, reply)
replicas = modify_graph(work, occ)
for r in replicas:
    ins = sorted(work.names[u] for u, _ in work.in_edges(r))
    outs = sorted(work.names[x] for x, _ in work.out_edges(r))
    print(f"{work.names[r]}: entered from {ins}, leaves to {outs}")
print("edge b -> t still there?", work.has_edge(b, t))

# %% [markdown]
# ## Repairing the tree
#
# Only `t` (the subtree below the end of the forbidden path) and the two
# copies need new labels. Everything else keeps its distance.

# %%
tree = rebuild_tree(work, tree, occ, replicas)
for v in range(len(work)):
    print(f"{work.names[v]:>3}: {tree.dist[v]:g}")
walk = tree.path_to(t)
print("new route:", " ".join(work.names[v] for v in walk), "-> projected", show(work.project(walk)))

# %% [markdown]
# ## The same in one call

# %%
out = route_single(g, s, t, store)
print(show(out.path), out.length)
print("iterations", out.iterations, "oracle queries", out.oracle_queries, "copies made", out.replicas_created)
