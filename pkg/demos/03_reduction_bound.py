"""
Reduction bound of a sample
===========================

The bound depends only on the lengths of the sample series.
"""

# %%
from dtwmean import reduction_bound_sample

for lengths in [(3, 3), (4, 4), (1, 1, 1), (1, 3), (2, 5, 4)]:
    rep = reduction_bound_sample(lengths)
    print(lengths, "rho =", rep.rho, "core =", rep.core, "length formula =", rep.simple_rho)
