"""
Means of symbol strings
=======================

Finite alphabets allow exhaustive search over all candidates.
"""

# %%
from dtwmean import FrechetProblem, LossFunction, symbolic_space, unrestricted_mean

space = symbolic_space("abc", [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
problem = FrechetProblem.uniform(["abc", "aac", "bc"], space, LossFunction(1, 1))
res = unrestricted_mean(problem)
print("".join(res.minimizer), res.value, res.per_length)
