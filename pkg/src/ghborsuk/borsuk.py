"""Borsuk numbers of finite metric spaces.

In a finite space a part has strictly smaller diameter exactly when it
contains no diametrical pair, and the slack is then the gap between the
diameter and the largest distance realised inside some part.  So the
Borsuk number is the chromatic number of the diameter graph, which is
computed here by exact backtracking colouring.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from ._search import bits
from .metric import FiniteMetricSpace, Partition, ToleranceConfig, diameter, partition_diameter

__all__ = [
    "DiameterGraph",
    "BorsukResult",
    "ConsistencyReport",
    "SinglePoint",
    "CardinalOutOfRange",
    "LambdaOutOfRange",
    "diameter_graph",
    "chromatic_number",
    "borsuk_number",
    "can_partition_smaller",
    "generalized_borsuk_via_gh",
    "is_dLS_n",
]


class SinglePoint(ValueError):
    pass


class CardinalOutOfRange(ValueError):
    pass


class LambdaOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class DiameterGraph:
    n: int
    edges: frozenset
    diam: float

    def adjacency(self) -> list:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj


@dataclass(frozen=True)
class BorsukResult:
    number: int
    witness: Partition
    epsilon: float
    diam: float

    def to_dict(self) -> dict:
        return {
            "beta": self.number,
            "witness": [list(b) for b in self.witness.blocks],
            "epsilon": self.epsilon,
            "diam": self.diam,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _tol(X, tol):
    return X.tol if tol is None else tol


def diameter_graph(X: FiniteMetricSpace, tol: Optional[ToleranceConfig] = None) -> DiameterGraph:
    """Pairs whose distance is within ``eps_eq * diam`` of the diameter."""
    if X.n < 2:
        raise SinglePoint("the diameter graph needs at least two points")
    d = X.dist
    diam = diameter(X)
    cut = diam - _tol(X, tol).eps_eq * diam
    edges = frozenset((i, j) for i in range(X.n) for j in range(i + 1, X.n) if d[i, j] >= cut)
    return DiameterGraph(X.n, edges, diam)


def _greedy_clique(adj):
    cand = (1 << len(adj)) - 1
    size = 0
    while cand:
        v = max(bits(cand), key=lambda u: ((cand & adj[u]).bit_count(), -u))
        size += 1
        cand &= adj[v]
    return size


def _k_coloring(adj, k):
    """Backtracking colouring with at most ``k`` colours, or ``None``.

    Vertices are taken by saturation (distinct neighbour colours), then
    degree, then index; a new colour is only ever the next unused one.
    """
    n = len(adj)
    color = [-1] * n
    # neighbour_colors[v]: bitmask of colours on v's neighbours
    neighbour_colors = [0] * n
    degree = [a.bit_count() for a in adj]

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                kv = (neighbour_colors[v].bit_count(), degree[v], -v)
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def place(depth, opened):
        if depth == n:
            return True
        v = pick()
        blocked = neighbour_colors[v]
        for c in range(min(opened + 1, k)):
            if blocked >> c & 1:
                continue
            saved = [(u, neighbour_colors[u]) for u in bits(adj[v])]
            color[v] = c
            for u in bits(adj[v]):
                neighbour_colors[u] |= 1 << c
            if place(depth + 1, max(opened, c + 1)):
                return True
            color[v] = -1
            for u, m in saved:
                neighbour_colors[u] = m
        return False

    return list(color) if place(0, 0) else None


def chromatic_number(adj):
    """Exact ``(chi, colouring)`` of a graph given as adjacency bitmasks."""
    n = len(adj)
    if n == 0:
        return 0, []
    for k in range(max(1, _greedy_clique(adj)), n + 1):
        coloring = _k_coloring(adj, k)
        if coloring is not None:
            return k, coloring
    raise AssertionError("n colours always suffice")


def _result(X, partition):
    diam = diameter(X)
    return BorsukResult(len(partition), partition, diam - partition_diameter(X, partition), diam)


def borsuk_number(X: FiniteMetricSpace, tol: Optional[ToleranceConfig] = None) -> BorsukResult:
    """Least number of parts of strictly smaller diameter, with a witness."""
    g = diameter_graph(X, tol)
    _, coloring = chromatic_number(g.adjacency())
    return _result(X, Partition.from_labels(coloring))


def _split_to(partition, m):
    blocks = [list(b) for b in partition.blocks]
    while len(blocks) < m:
        big = next(b for b in blocks if len(b) > 1)
        blocks.append([big.pop()])
    return Partition(tuple(blocks), partition.n)


def can_partition_smaller(X: FiniteMetricSpace, m: int, tol: Optional[ToleranceConfig] = None):
    """Whether ``X`` splits into exactly ``m`` parts of strictly smaller diameter.

    Returns ``(True, partition)`` or ``(False, None)``.
    """
    if not 2 <= m <= X.n:
        raise CardinalOutOfRange(f"need 2 <= m <= {X.n}, got {m}")
    g = diameter_graph(X, tol)
    adj = g.adjacency()
    coloring = _k_coloring(adj, m)
    if coloring is None:
        return False, None
    return True, _split_to(Partition.from_labels(coloring), m)


def is_dLS_n(X: FiniteMetricSpace, n: int, tol: Optional[ToleranceConfig] = None) -> bool:
    """Every cover by at most ``n`` sets has a member with a diametrical pair."""
    if n < 1:
        raise ValueError("n must be positive")
    return borsuk_number(X, tol).number > n


@dataclass(frozen=True)
class ConsistencyReport:
    """Both sides of the partition / GH-distance dichotomy for one instance."""

    m: int
    lam: float
    diam: float
    partition_exists: bool
    partition: Optional[Partition]
    gh_value: float
    strictly_below: bool
    equality: Optional[bool]

    @property
    def biconditional_holds(self) -> bool:
        return self.partition_exists == self.strictly_below

    @property
    def holds(self) -> bool:
        return self.biconditional_holds and self.equality is not False


def generalized_borsuk_via_gh(X: FiniteMetricSpace, m: int, lam: float, opts=None,
                              tol: Optional[ToleranceConfig] = None,
                              margin: Optional[float] = None) -> ConsistencyReport:
    """Compare ``can_partition_smaller(X, m)`` with ``2 d_GH(lam Delta_m, X) < diam X``.

    ``margin`` is the slack for both comparisons; it defaults to
    ``eps_eq * diam X``.  The GH side is computed by exhaustive search with
    shortcuts disabled, so it is independent of the colouring.
    """
    from .metric import delta_simplex
    from .solver import SolverOptions, gh_exact

    tol = _tol(X, tol)
    diam = diameter(X)
    if not 0 < lam < diam:
        raise LambdaOutOfRange(f"need 0 < lambda < diam X = {diam}, got {lam}")
    exists, partition = can_partition_smaller(X, m, tol)
    if opts is None:
        opts = SolverOptions(allow_shortcuts=False, tol=tol)
    else:
        opts = SolverOptions(opts.max_points, False, opts.worker_count, opts.tol)
    res = gh_exact(delta_simplex(m, lam), X, opts)
    margin = tol.eps_eq * diam if margin is None else margin
    two_d = 2 * res.value
    below = two_d < diam - margin
    equality = None if exists else abs(two_d - diam) <= margin
    return ConsistencyReport(m, lam, diam, exists, partition, res.value, below, equality)
