"""Graph distances from mismatch norms.

The distance between two graphs is the minimum, over injective vertex
alignments, of a matrix norm applied to the signed difference of their
adjacency (or Laplacian) matrices. The package provides the signed-graph
data model, the norm evaluators, distance lower bounds, an exact
branch-and-bound solver with approximation algorithms, and generators for
the hardness-reduction instance families together with brute-force oracles
for their source problems.
"""

from .bounds import (BoundCertificate, MismatchProfile, b_monotone_check,
                     bound_b, degree_lower_bound, mismatch_profile,
                     partial_lower_bound, star_norm_value)
from .generators import (InstanceMeta, ReductionInstance,
                         ThreePartitionInstance, additive_gadget_alignment,
                         alon_naor_matrix, brute_force_hamcycle,
                         brute_force_maxcut, brute_force_threepartition,
                         choose_gadget_params, cutnorm_block_matrix,
                         cutnorm_block_signed, find_hamiltonian_cycle,
                         find_hamiltonian_path, find_threepartition,
                         gen_additive_gadget, gen_color_conversion,
                         gen_cutnorm_instance, gen_hamcycle, gen_path_variant,
                         gen_threepartition_trees, partition_alignment)
from .graphs import (Alignment, ColoredGraph, Graph, SignedGraph,
                     SignedMatrix, adjacency, apply_alignment,
                     complete_bipartite, complete_graph, components,
                     component_vertex_sets, cycle_graph, empty_graph,
                     is_star_forest, laplacian, mismatch, negate, pad,
                     path_graph, petersen_graph, signed_sum, star_graph)
from .norms import (CutNormInfeasible, NormSpec, NormValue, abs_operator_norm,
                    cut_norm_exact, entrywise_norm, iso_norm, mismatch_norm,
                    operator_norm, parse_spec)
from .solver import (SolveResult, Threshold, approx_additive,
                     approx_multiplicative, decide_distance, exact_distance,
                     is_isomorphic, local_search, optimum_norm_value)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
