"""
Partitions seen through the GH distance
=======================================

Two facts are checked numerically here, with the search run without
closed-form shortcuts.

* X splits into m parts of smaller diameter exactly when
  2 d_GH(lambda Delta_m, X) < diam X for some 0 < lambda < diam X, and the
  distance is diam X / 2 otherwise.
* If #X < beta(Y) and diam X <= diam Y then 2 d_GH(X, Y) = diam Y.
"""

from ghborsuk import (SolverOptions, borsuk_number, delta_simplex, diameter,
                      generalized_borsuk_via_gh, generate, gh_exact, parse_spec, scale)
from ghborsuk.generators import embedded_simplex

search = SolverOptions(allow_shortcuts=False)

X = generate(parse_spec("polygon:5"))
for m in (2, 3, 4):
    rep = generalized_borsuk_via_gh(X, m, 0.5 * diameter(X))
    print(f"pentagon, m={m}: partition={rep.partition_exists}, "
          f"2d = {2 * rep.gh_value:.6f}, diam = {rep.diam:.6f}, consistent={rep.holds}")

Y = embedded_simplex(6, 4, seed=3)
beta = borsuk_number(Y).number
for n in range(1, beta):
    Z = generate(parse_spec(f"euclidean:{n}:2:1:{n}"))
    if diameter(Z) > diameter(Y):
        Z = scale(Z, diameter(Y) / diameter(Z))
    r = gh_exact(Z, Y, search)
    print(f"#X={n} < beta(Y)={beta}: 2d = {2 * r.value!r}, diam Y = {diameter(Y)!r}")

# A simplex with one more point than X sits at distance lambda / 2.
W = generate(parse_spec("synthetic:4:1:9"))
for lam in (diameter(W), 2 * diameter(W)):
    r = gh_exact(W, delta_simplex(W.n + 1, lam), search)
    print(f"lambda={lam:.4f}: d = {r.value:.4f} (lambda/2 = {lam / 2:.4f})")
