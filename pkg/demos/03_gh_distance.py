"""
Exact Gromov-Hausdorff distance
===============================

``gh_exact`` returns half the least distortion of an irreducible
correspondence together with a witness: the minimiser whose sorted pair
list comes first.  Closed forms are used when they apply; passing
``allow_shortcuts=False`` forces the search.
"""

import time

from ghborsuk import (SolverOptions, TooLarge, delta_simplex, diameter, generate, gh_bounds,
                      gh_exact, gh_scaled, one_point, parse_spec, scale)

X = generate(parse_spec("euclidean:6:2:1:3"))
Y = generate(parse_spec("sphere-sample:5:3:1:4"))

res = gh_exact(X, Y)
print(res.to_json())
print("bounds from diameters:", gh_bounds(X, Y))

# Closed forms: a one-point side, and two scalings of the same space.
print(gh_exact(one_point(), Y).method, "->", gh_exact(one_point(), Y).value, "=", diameter(Y) / 2)
print(gh_exact(scale(X, 2), scale(X, 3)).method, "->", gh_exact(scale(X, 2), scale(X, 3)).value)

# Scaling both spaces scales the distance.
doubled = gh_scaled(X, Y, 2.0, res)
print("lambda = 2:", doubled.value, "recomputed:", gh_exact(scale(X, 2), scale(Y, 2)).value)

# Ten points per side is within reach of the search; the worker count does
# not change the answer or the witness.
P, Q = generate(parse_spec("polygon:10")), generate(parse_spec("polygon:9"))
for workers in (1, 4):
    t = time.perf_counter()
    r = gh_exact(P, Q, SolverOptions(allow_shortcuts=False, worker_count=workers))
    print(f"workers={workers}: d = {r.value!r}, {time.perf_counter() - t:.2f}s")

try:
    gh_exact(generate(parse_spec("synthetic:12")), delta_simplex(3))
except TooLarge as exc:
    print("TooLarge:", exc)
