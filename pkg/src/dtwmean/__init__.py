"""Sample means in dynamic time warping spaces.

DTW distances, warping graphs, the reduction bound, the reduction
procedure and exact small-scale mean solvers.
"""
from .core import (EPS, AttributeSpace, DtwSpace, LocalDistance, LossFunction, MonotoneTransform,
                   euclidean_space, local_distance, loss_apply, symbolic_space, xor_zero_space)
from .dtw import (DtwResult, WarpingPath, alignment_cost, delannoy, dtw_distance,
                  dtw_distance_bruteforce, enumerate_warping_paths)
from .exceptions import (CapExceededError, DtwMeanError, InvalidGraphError, InvalidPathError,
                         ReductionError, SpaceMismatchError, UnsupportedProblemError)
from .frechet import (FrechetProblem, VarianceCurve, frechet_value, nonexistence_demo,
                      restricted_variance, variance_curve)
from .glue import (GluedGraph, ReductionBoundReport, find_redundant_splice_node, glue,
                   reduction_bound_sample, remove_splice_node)
from .reduce import ReductionStep, reduce_once, reduce_to_bound
from .solver import (MeanResult, SolverCaps, restricted_mean, restricted_mean_alphabet,
                     restricted_mean_euclidean, restricted_mean_grid, unrestricted_mean)
from .wgraph import (StarComponent, WarpingGraph, compactify, components, delete_node, is_compact,
                     neighborhood, path_to_graph, graph_to_path, redundant_nodes)

__version__ = "0.1.0"
