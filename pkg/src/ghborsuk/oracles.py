"""Brute-force reference computations for small instances.

Nothing here shares code with the search engine: correspondences are
enumerated as raw image tuples and partitions as restricted growth
strings.  Exponential; meant for ``n`` up to about 4 (GH) or 8 (Borsuk).
"""
from __future__ import annotations

from itertools import combinations, product

from .metric import FiniteMetricSpace

__all__ = [
    "all_correspondences",
    "brute_force_gh",
    "set_partitions",
    "brute_force_borsuk",
]


def _nonempty_subsets(n):
    items = range(n)
    return [c for r in range(1, n + 1) for c in combinations(items, r)]


def all_correspondences(nx, ny):
    """Every correspondence as a sorted list of pairs (no irreducibility filter)."""
    subsets = _nonempty_subsets(ny)
    for images in product(subsets, repeat=nx):
        if len({j for img in images for j in img}) == ny:
            yield [(i, j) for i, img in enumerate(images) for j in img]


def _dis(dx, dy, pairs):
    return max(abs(dx[i][k] - dy[j][l]) for i, j in pairs for k, l in pairs)


def brute_force_gh(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> float:
    """Half the least distortion over *all* correspondences."""
    dx, dy = X.dist.tolist(), Y.dist.tolist()
    return min(_dis(dx, dy, R) for R in all_correspondences(X.n, Y.n)) / 2


def set_partitions(n):
    """All partitions of ``range(n)`` as lists of blocks (restricted growth strings)."""
    def grow(prefix, top):
        if len(prefix) == n:
            blocks = [[] for _ in range(top + 1)]
            for i, c in enumerate(prefix):
                blocks[c].append(i)
            yield blocks
            return
        for c in range(top + 2):
            yield from grow(prefix + [c], max(top, c))

    if n == 0:
        yield []
        return
    yield from grow([0], 0)


def brute_force_borsuk(X: FiniteMetricSpace) -> int:
    """Least number of blocks whose diameters are all strictly below ``diam X``."""
    d = X.dist.tolist()
    diam = max(max(row) for row in d)
    best = X.n
    for blocks in set_partitions(X.n):
        if len(blocks) < best and all(
                d[a][b] < diam for blk in blocks for a in blk for b in blk):
            best = len(blocks)
    return best
