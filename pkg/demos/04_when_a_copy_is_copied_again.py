# %% [markdown]
# # When a copied vertex is copied again
#
# Each repair is meant to cost one edge and to handle one forbidden path
# for good. Both hold as long as no vertex is replicated twice. This demo
# shows the two small instances where that breaks, and shows that the
# routes stay exact regardless.

# %%
from forbiddenpaths import Graph, ExceptionStore, avoiding_distances, route_all, route_single


def build(n, edges, paths):
    g = Graph()
    for i in range(n):
        g.add_vertex(f"v{i}")
    for u, v, w in edges:
        g.add_edge(u, v, w)
    return g, ExceptionStore(paths, g)


def trace(event, router, occ, replicas):
    if event != "after":
        return
    g = router.graph
    print(f"  step {router.iterations}: {' '.join(g.names[v] for v in occ.vertices):<14}"
          f" live edges {g.edge_count():>2}, one-per-step would give {g.m0 - router.iterations}")


# %% [markdown]
# ## Edge count
#
# The second repair replicates `v2` again. The new copy is entered the way
# `v2` could be, including over edges that were retired when `v2` was
# first replicated, so the live edge count goes up by three.

# %%
g, store = build(
    6,
    [(0, 2, 2), (0, 3, 9), (1, 0, 5), (1, 3, 9), (2, 3, 6), (2, 5, 9), (3, 0, 1),
     (3, 2, 9), (4, 0, 7), (4, 2, 9), (4, 3, 4), (5, 0, 2), (5, 2, 7), (5, 4, 6)],
    [(0, 2, 3), (0, 3, 2), (0, 2, 5), (5, 0, 3)],
)
out = route_single(g, 0, 4, store, observer=trace)
print("v0 -> v4:", out.length, "reference:", avoiding_distances(g, 0, store)[4])

# %% [markdown]
# ## Rediscovery
#
# Three forbidden paths, four repairs: replicating `v0` for the long
# forbidden path copies an edge into a copy of `v1`, and `(v0, v1)` shows up
# once more.

# %%
g, store = build(
    5,
    [(1, 0, 7), (3, 2, 7), (0, 1, 9), (2, 1, 10), (1, 3, 8), (0, 4, 3)],
    [(2, 1, 0, 4), (2, 1, 3), (0, 1)],
)
table = route_all(g, 2, store, observer=trace)
print("repairs", table.iterations, "for", store.k, "forbidden paths; rediscoveries", table.rediscoveries)
print("exact:", table.distances() == avoiding_distances(g, 2, store))
