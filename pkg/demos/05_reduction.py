"""
Shortening a candidate
======================

Elements that are redundant in every alignment are dropped one at a time
and the Frechet function never increases.
"""

# %%
from dtwmean import FrechetProblem, LossFunction, euclidean_space, frechet_value, reduce_once, reduce_to_bound

space = euclidean_space()
problem = FrechetProblem.uniform([(1, 2, 3), (1, 2, 3)], space, LossFunction(1, 1))

# %%
# A long mean: repeating the last element keeps F at zero.
x = (1, 2, 3, 3, 3, 3)
print(frechet_value(problem, x))
final, steps = reduce_to_bound(problem, x)
print(final, [(s.removed, s.f_after) for s in steps])

# %%
# Removing a non-redundant element can hurt, so the procedure refuses.
p2 = FrechetProblem.uniform([(0, 1), (0, 1)], space, LossFunction(1, 1))
print(frechet_value(p2, (0, 1)), frechet_value(p2, (1,)), reduce_once(p2, (0, 1)))
