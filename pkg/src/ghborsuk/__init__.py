"""Exact Gromov-Hausdorff distances and Borsuk numbers of finite metric spaces."""
from .borsuk import (BorsukResult, DiameterGraph, borsuk_number, can_partition_smaller,
                     diameter_graph, generalized_borsuk_via_gh, is_dLS_n)
from .correspondences import (BlockDecomposition, Correspondence, Relation, block_distortion,
                              decompose_blocks, distortion, enumerate_irreducible,
                              is_correspondence, is_irreducible, reduce_to_irreducible)
from .generators import GenSpec, generate, parse_spec
from .io import load_space
from .metric import (FiniteMetricSpace, Partition, ToleranceConfig, ValidationError,
                     block_distances, delta_simplex, diameter, hausdorff_distance,
                     one_point, partition_diameter, scale, validate_metric)
from .solver import GHResult, SolverOptions, TooLarge, gh_bounds, gh_exact, gh_scaled, gh_shortcut

__version__ = "0.1.0"
