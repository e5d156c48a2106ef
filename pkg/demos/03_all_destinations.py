# %% [markdown]
# # Routing to every destination
#
# `route_all` serves destinations one after another from a single session,
# so a forbidden path discovered for one destination is already handled for
# the next. `route_weak` asks the oracle about every vertex as Dijkstra
# settles it; it copes with an oracle that reports *any* forbidden path
# instead of the one ending first.

# %%
import random

from forbiddenpaths import avoiding_distances, route_all, route_weak
from forbiddenpaths.instances import random_instance

rng = random.Random(4)
while True:
    inst = random_instance(rng)
    g, store, s = inst.graph, inst.store, inst.source
    if g.n0 >= 8 and route_all(g, s, store).replicas_created >= 3:
        break
print("forbidden:", [" ".join(g.names[v] for v in x.vertices) for x in store])

strong = route_all(g, s, store)
weak = route_weak(g, s, lambda walk: store.query_any(walk, rng))
reference = avoiding_distances(g, s, store)

print(f"{'to':>4} {'strong':>7} {'weak':>7} {'ref':>7}")
for v in range(g.n0):
    print(f"{g.names[v]:>4} {strong[v].length:>7g} {weak[v].length:>7g} {reference[v]:>7g}")

# %% [markdown]
# ## What each variant paid
#
# The strong session asks once per destination plus once per failure. The
# weak variant asks once per settled vertex and once per failure, which
# stays below the number of vertices plus the total size of the forbidden
# paths.

# %%
print("route_all: ", strong.oracle_queries, "queries,", strong.failed_queries, "failures,",
      strong.replicas_created, "copies")
print("route_weak:", weak.oracle_queries, "queries,", weak.failed_queries, "failures,",
      weak.replicas_created, "copies; bound", g.n0 + store.total_size)
