"""
Restricted means of a two-series sample
=======================================

The sample (0, 1, 0), (0, -1, 0) under Euclidean DTW with squared loss.
Its best mean is longer than either sample series.
"""

# %%
from dtwmean import FrechetProblem, euclidean_space, unrestricted_mean, variance_curve

problem = FrechetProblem.uniform([(0, 1, 0), (0, -1, 0)], euclidean_space())

# %%
# Exact restricted variances by minimizing over every combination of
# warping paths.
curve = variance_curve(problem, 6)
for m, value, best, z in curve.rows():
    print(m, round(value, 6), [round(v, 4) for v in z])
print("argmin:", curve.argmin())

# %%
# Sweeping lengths up to the reduction bound certifies the unrestricted mean.
res = unrestricted_mean(problem)
print(res.m, res.value, res.minimizer)
