"""
Warping graphs and compactness
==============================

A warping path seen as a bipartite graph between the elements of two
series, its compact subgraph and its star components.
"""

# %%
from dtwmean import WarpingGraph, compactify, components, is_compact, redundant_nodes

g = WarpingGraph(3, 3, ((1, 1), (1, 2), (2, 2), (3, 2), (3, 3)))
print("compact:", is_compact(g))

# %%
# Dropping removable edges leaves the diagonal.
h = compactify(g)
print(h.edges)

# %%
# A tall graph splits into stars; nodes whose partners all have another
# partner are redundant and may be deleted.
tall = WarpingGraph(5, 2, ((1, 1), (2, 1), (3, 1), (4, 2), (5, 2)))
for c in components(tall):
    print(c.form, c.center, c.leaves)
print("redundant V nodes:", redundant_nodes(tall))
