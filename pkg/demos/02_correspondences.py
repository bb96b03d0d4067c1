"""
Correspondences and their distortion
====================================

A correspondence between X and Y is a set of pairs covering both sides.
Only irreducible ones matter for minimising distortion: every pair has a
singleton on at least one side.  Such a correspondence splits into blocks
X_i x Y_i, and its distortion can be read off block-to-block distances.
"""

from ghborsuk import (block_distortion, decompose_blocks, delta_simplex, distortion,
                      enumerate_irreducible, is_irreducible, reduce_to_irreducible,
                      validate_metric)
from ghborsuk.correspondences import pairs_to_relation

X = validate_metric([[0, 1], [1, 0]])
Y = validate_metric([[0, 1, 2], [1, 0, 1], [2, 1, 0]])

R = pairs_to_relation([(0, 0), (0, 1), (1, 1), (1, 2)], 2, 3)
print("R =", R.sorted_pairs(), "irreducible?", is_irreducible(R), "dis R =", distortion(X, Y, R))

# Dropping pairs never raises the distortion.
R0 = reduce_to_irreducible(R)
print("irreducible inside R:", R0.sorted_pairs(), "dis =", distortion(X, Y, R0))

# Blocks of an irreducible correspondence, and the block formula.
B = decompose_blocks(R0)
print("blocks:", B.blocks)
print("block formula:", block_distortion(X, Y, B), "direct:", distortion(X, Y, B.correspondence()))

# The whole family, in sorted pair-list order.
family = list(enumerate_irreducible(2, 3))
print(len(family), "irreducible correspondences between 2 and 3 points")
for blocks in family:
    corr = blocks.correspondence()
    print("  ", corr.sorted_pairs(), "dis =", distortion(X, Y, corr))

# Against a one-point space the only correspondence has distortion diam Y.
star = next(enumerate_irreducible(1, 3))
print("Delta_1 vs Y:", block_distortion(delta_simplex(1), Y, star))
