"""
Searching for a missing minimum
===============================

The xor-zero distance charges 1 when exactly one of two elements is zero.
Sample (1, 1), (1, -1) with loss h(u) = u.
"""

# %%
from dtwmean import nonexistence_demo
from dtwmean.frechet import frechet_value, nonexistence_problem

rep = nonexistence_demo(grid_step=1e-3)
for t, z, f in rep.families[rep.best_family][:6]:
    print(t, z, f)
print("strictly decreasing:", rep.strictly_decreasing)

# %%
# Grid minima per length, and whether the grid reaches the infimum.
print({m: v for m, (v, _) in rep.grid_minima.items()})
print("grid argmin:", rep.grid_argmin, "attained:", rep.attained)

# %%
# The last element of any candidate faces both +1 and -1, so F >= 1.
print(frechet_value(nonexistence_problem(), (1, 0)))
