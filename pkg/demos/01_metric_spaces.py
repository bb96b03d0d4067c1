"""
Finite metric spaces
====================

A finite metric space is a square distance matrix that passes the metric
axioms.  This walk-through builds a few, shows what the validator rejects,
and evaluates the set-level distances used elsewhere in the package.
"""

import numpy as np

from ghborsuk import (Partition, block_distances, delta_simplex, diameter, generate,
                      hausdorff_distance, parse_spec, partition_diameter, scale, validate_metric)
from ghborsuk.metric import TriangleViolation

# Three points on a line at positions 0, 1 and 3.
line = validate_metric([[0, 1, 3], [1, 0, 2], [3, 2, 0]], labels=["a", "b", "c"])
print(line)
print("diameter:", diameter(line))

# A matrix that breaks the triangle inequality names the offending triple.
try:
    validate_metric([[0, 1, 3], [1, 0, 1], [3, 1, 0]])
except TriangleViolation as exc:
    print("rejected:", exc, exc.indices)

# Single-distance spaces and scaling.
print("Delta_4 with side 2:\n", delta_simplex(4, 2.0).dist)
print("0 * X collapses to one point:", scale(line, 0).n)

# Distances between subsets: the closest and farthest pair, then Hausdorff.
A, B = [0, 1], [2]
print("block distances {a,b} to {c}:", block_distances(line, A, B))
print("Hausdorff distance {a,b} to {c}:", hausdorff_distance(line, A, B))

# Partitions: the diameter of a partition is its widest block.
print("diam of {a,b}|{c}:", partition_diameter(line, Partition(((0, 1), (2,)), 3)))

# Generators are seeded and reproducible.
square = generate(parse_spec("polygon:4"))
print("unit square corners, diameter", diameter(square))
noisy = generate(parse_spec("synthetic:6:1:7"))
print("synthetic:6 seed 7 row 0:", np.round(noisy.dist[0], 3))
