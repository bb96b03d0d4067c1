"""
Borsuk numbers
==============

The Borsuk number of X is the least number of parts of strictly smaller
diameter that X can be cut into.  Two points share a part only if they are
not at the diameter, so this is the chromatic number of the diameter graph.
"""

from ghborsuk import (borsuk_number, can_partition_smaller, delta_simplex, diameter_graph,
                      generate, is_dLS_n, parse_spec)
from ghborsuk.generators import embedded_simplex
from ghborsuk.oracles import brute_force_borsuk

square = generate(parse_spec("polygon:4"))
print("square diameter graph:", diameter_graph(square).edges)
print("square:", borsuk_number(square).to_json())

pentagon = generate(parse_spec("polygon:5"))
print("pentagon (odd cycle of diagonals):", borsuk_number(pentagon).number)

for m in range(2, 7):
    print(f"Delta_{m}: beta = {borsuk_number(delta_simplex(m)).number}")

# A hidden simplex among noise fixes the number.
hidden = embedded_simplex(7, 4, seed=1)
print("7 points around a 4-simplex:", borsuk_number(hidden).number,
      "oracle:", brute_force_borsuk(hidden))

print("Delta_3 into 2 smaller parts?", can_partition_smaller(delta_simplex(3), 2))
print("square into 2 smaller parts?", can_partition_smaller(square, 2))
print("Delta_3 is dLS_2:", is_dLS_n(delta_simplex(3), 2))
