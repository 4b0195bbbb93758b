"""
DTW distances and warping paths
===============================

Distances between univariate series under squared differences with a
square root applied to the optimal alignment cost.
"""

# %%
from dtwmean import alignment_cost, delannoy, dtw_distance, enumerate_warping_paths, euclidean_space

space = euclidean_space()
x, y = (0, 0), (0, 1)

# %%
# Every path of order 2 x 2 and its cost. The minimum is the raw DTW cost.
for p in enumerate_warping_paths(2, 2):
    print(p.points, alignment_cost(space, x, y, p))

res = dtw_distance(space, x, y)
print("distance", res.distance, "raw cost", res.raw_cost, "path", res.path.points)

# %%
# The number of paths grows like the Delannoy numbers.
print([delannoy(k, k) for k in range(1, 7)])

# %%
# Series of different lengths warp onto each other for free when they only
# differ by repetitions.
print(dtw_distance(space, (1, 2, 3), (1, 1, 2, 3, 3, 3)).distance)
