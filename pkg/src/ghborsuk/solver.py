"""Exact Gromov-Hausdorff distance between finite metric spaces.

The distance is half the smallest distortion of an irreducible
correspondence.  :func:`gh_exact` finds that minimum in two passes:

1. bisection over the candidate values ``|dX(a, b) - dY(c, d)|``, each
   probe a depth-first search for any irreducible correspondence within
   the candidate, branching on the smaller space;
2. a lexicographic search at the optimal distortion, which returns the
   witness with the smallest sorted pair list.

Both passes compare distortion terms computed by the same float
expression, so the optimum is exact rather than tolerance-dependent and
does not depend on the number of workers.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from ._search import (IrreducibleSearch, Limit, automorphisms, pair_lower_bounds,
                      relation_distortion, twin_classes)
from .correspondences import BlockDecomposition, Correspondence, identity
from .metric import DEFAULT_TOL, FiniteMetricSpace, NegativeScale, ToleranceConfig, diameter

__all__ = [
    "GHResult",
    "SolverOptions",
    "TooLarge",
    "gh_bounds",
    "gh_exact",
    "gh_shortcut",
    "gh_scaled",
    "chain_correspondence",
]

METHODS = ("search", "shortcut-Δ1", "shortcut-scaling", "shortcut-borsuk", "shortcut-equal")


class TooLarge(ValueError):
    """Instance exceeds ``SolverOptions.max_points``; fall back to :func:`gh_bounds`."""


@dataclass(frozen=True)
class SolverOptions:
    max_points: int = 10
    allow_shortcuts: bool = True
    worker_count: int = 1
    tol: ToleranceConfig = field(default=DEFAULT_TOL)

    def __post_init__(self):
        if self.max_points < 1:
            raise ValueError("max_points must be >= 1")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")


@dataclass(frozen=True)
class GHResult:
    value: float
    witness: Optional[Correspondence]
    method: str
    lower: float
    upper: float
    nodes: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "lower": self.lower,
            "upper": self.upper,
            "witness": None if self.witness is None
            else [list(p) for p in self.witness.sorted_pairs()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def gh_bounds(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """``(|diam X - diam Y| / 2, max(diam X, diam Y) / 2)``."""
    dX, dY = diameter(X), diameter(Y)
    return abs(dX - dY) / 2, max(dX, dY) / 2


def chain_correspondence(nx: int, ny: int) -> Correspondence:
    """Point 0 of X onto Y minus point 0, the rest of X onto point 0 of Y.

    Irreducible, and its distortion never exceeds ``max(diam X, diam Y)``.
    """
    if nx == 1 or ny == 1:
        return Correspondence(frozenset((i, j) for i in range(nx) for j in range(ny)), nx, ny)
    blocks = (((0,), tuple(range(1, ny))), (tuple(range(1, nx)), (0,)))
    return BlockDecomposition(blocks, nx, ny).correspondence()


def _images(R: Correspondence):
    images = [0] * R.nx
    for i, j in R.pairs:
        images[i] |= 1 << j
    return images


def _feasible(dx, dy, limit, workers, twins, symmetry):
    """Distortion of some irreducible correspondence within ``limit``, else ``None``."""
    inc = Limit(limit)
    found = []
    nx, ny = len(dx), len(dy)

    def search():
        return IrreducibleSearch(nx, ny, dx, dy, bound=inc, lex=False, twins=twins,
                                 symmetry=symmetry)

    def drain(it):
        for images in it:
            found.append(relation_distortion(dx, dy, images))
            inc.stop = True
            break

    def run(chunk):
        s = search()
        for branch in chunk:
            drain(s.solutions_from(*branch))
        return s.nodes

    if workers == 1:
        s = search()
        drain(s.solutions())
        nodes = s.nodes
    else:
        branches = search().root_branches()
        # one chunk per worker: a task per branch costs a GIL hand-off each
        chunks = [branches[k::workers] for k in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            nodes = sum(pool.map(run, chunks))
    # several workers may finish; any one of them proves feasibility
    return (min(found) if found else None), nodes


def _minimum_distortion(dx, dy, start, lower, workers):
    """Least distortion, by bisection over the finitely many candidate values.

    Every distortion is some ``|dx[a][b] - dy[c][d]|``; ``start`` is attained
    and ``lower`` is a valid lower bound.
    """
    gaps = np.abs(np.asarray(dx, float)[:, :, None, None] - np.asarray(dy, float)[None, None, :, :])
    values = np.unique(gaps)
    values = values[(values >= lower) & (values <= start)].tolist()
    twins = twin_classes(dx)
    symmetry = None
    if not any(twins):
        # variable twins and value automorphisms are not broken together
        twins, symmetry = None, automorphisms(dy)
    lo, hi = 0, values.index(start)
    nodes = 0
    while lo < hi:
        mid = (lo + hi) // 2
        got, used = _feasible(dx, dy, values[mid], workers, twins, symmetry)
        nodes += used
        if got is None:
            lo = mid + 1
        else:
            hi = values.index(got)
    return values[lo], nodes


def _lex_witness(dx, dy, value):
    """First irreducible correspondence in pair-list order with distortion <= ``value``."""
    search = IrreducibleSearch(len(dx), len(dy), dx, dy, bound=Limit(value))
    for images in search.solutions():
        return list(images), search.nodes
    raise AssertionError("optimal distortion must be attained")


def gh_exact(X: FiniteMetricSpace, Y: FiniteMetricSpace,
             opts: SolverOptions = SolverOptions()) -> GHResult:
    """Exact ``d_GH(X, Y)`` with a minimising irreducible correspondence.

    Raises :class:`TooLarge` when either side has more than
    ``opts.max_points`` points.
    """
    if max(X.n, Y.n) > opts.max_points:
        raise TooLarge(f"spaces of sizes {X.n} and {Y.n} exceed max_points={opts.max_points}")
    lower, upper = gh_bounds(X, Y)
    if opts.allow_shortcuts:
        hit = _shortcut_with_borsuk(X, Y, opts.tol)
        if hit is not None:
            return hit

    dx, dy = X.rows(), Y.rows()
    start_R = chain_correspondence(X.n, Y.n)
    start = relation_distortion(dx, dy, _images(start_R))
    pb = np.asarray(pair_lower_bounds(dx, dy))
    lower2 = max(abs(diameter(X) - diameter(Y)), pb.min(axis=1).max(), pb.min(axis=0).max())
    # branch on the smaller space
    if X.n <= Y.n:
        best, nodes = _minimum_distortion(dx, dy, start, lower2, opts.worker_count)
    else:
        best, nodes = _minimum_distortion(dy, dx, start, lower2, opts.worker_count)
    images, more = _lex_witness(dx, dy, best)
    witness = BlockDecomposition.from_images(images, Y.n).correspondence()
    return GHResult(best / 2, witness, "search", lower, upper, nodes + more)


def _is_delta1(X):
    return X.n == 1


def gh_shortcut(X: FiniteMetricSpace, Y: FiniteMetricSpace,
                beta_y: Optional[int] = None, beta_x: Optional[int] = None,
                tol: ToleranceConfig = DEFAULT_TOL) -> Optional[GHResult]:
    """Closed-form distance when a known formula applies, else ``None``.

    Checked in order: identical matrices, a one-point side, proportional
    matrices (``Y = c X`` entrywise), and the Borsuk-number criterion
    ``#X < beta(Y)``, ``diam X <= diam Y`` (or with the roles swapped),
    under which the distance is ``diam Y / 2``.
    """
    lower, upper = gh_bounds(X, Y)
    dX, dY = diameter(X), diameter(Y)
    if X.n == Y.n and np.array_equal(X.dist, Y.dist):
        return GHResult(0.0, identity(X.n), "shortcut-equal", lower, upper)
    if _is_delta1(X) or _is_delta1(Y):
        full = frozenset((i, j) for i in range(X.n) for j in range(Y.n))
        return GHResult(max(dX, dY) / 2, Correspondence(full, X.n, Y.n), "shortcut-Δ1", lower, upper)
    slack = tol.eps_eq * max(dX, dY)
    if X.n == Y.n and np.allclose(Y.dist, X.dist * (dY / dX), rtol=0, atol=slack):
        return GHResult(abs(dX - dY) / 2, identity(X.n), "shortcut-scaling", lower, upper)
    if beta_y is not None and X.n < beta_y and dX <= dY + slack:
        return GHResult(dY / 2, chain_correspondence(X.n, Y.n), "shortcut-borsuk", lower, upper)
    if beta_x is not None and Y.n < beta_x and dY <= dX + slack:
        return GHResult(dX / 2, chain_correspondence(X.n, Y.n), "shortcut-borsuk", lower, upper)
    return None


def _shortcut_with_borsuk(X, Y, tol):
    from .borsuk import borsuk_number

    hit = gh_shortcut(X, Y, tol=tol)
    if hit is not None:
        return hit
    beta_x = borsuk_number(X, tol).number
    beta_y = borsuk_number(Y, tol).number
    return gh_shortcut(X, Y, beta_y=beta_y, beta_x=beta_x, tol=tol)


def gh_scaled(X: FiniteMetricSpace, Y: FiniteMetricSpace, lam: float, base: GHResult) -> GHResult:
    """Result for ``(lam X, lam Y)`` from the result for ``(X, Y)``."""
    if lam < 0:
        raise NegativeScale(f"scale factor must be >= 0, got {lam}")
    if lam == 1:
        return base
    if lam == 0:
        witness = Correspondence(frozenset({(0, 0)}), 1, 1)
        return GHResult(0.0, witness, base.method, 0.0, 0.0)
    return replace(base, value=lam * base.value, lower=lam * base.lower, upper=lam * base.upper)
