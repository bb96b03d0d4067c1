"""Finite metric spaces and the elementary quantities built on them.

A :class:`FiniteMetricSpace` is an immutable, validated distance matrix
plus labels.  Everything else in the package works on point *indices*;
labels are carried along for display only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "ToleranceConfig",
    "FiniteMetricSpace",
    "Partition",
    "ValidationError",
    "NotSquare",
    "NonFinite",
    "NonzeroDiagonal",
    "NegativeDistance",
    "Asymmetric",
    "DegeneratePair",
    "TriangleViolation",
    "NegativeScale",
    "NonpositiveLambda",
    "EmptySet",
    "validate_metric",
    "diameter",
    "scale",
    "delta_simplex",
    "one_point",
    "block_distances",
    "hausdorff_distance",
    "hausdorff_distance_balls",
    "partition_diameter",
    "subspace",
]


class ValidationError(ValueError):
    """Raised when a matrix is not a metric on a finite set."""


class NotSquare(ValidationError):
    pass


class NonFinite(ValidationError):
    pass


class NonzeroDiagonal(ValidationError):
    def __init__(self, i, value):
        super().__init__(f"dist[{i}][{i}] = {value!r} is not zero")
        self.indices = (i,)


class NegativeDistance(ValidationError):
    def __init__(self, i, j, value):
        super().__init__(f"dist[{i}][{j}] = {value!r} is negative")
        self.indices = (i, j)


class Asymmetric(ValidationError):
    def __init__(self, i, j, a, b):
        super().__init__(f"dist[{i}][{j}] = {a!r} but dist[{j}][{i}] = {b!r}")
        self.indices = (i, j)


class DegeneratePair(ValidationError):
    def __init__(self, i, j):
        super().__init__(f"distinct points {i} and {j} are at distance 0")
        self.indices = (i, j)


class TriangleViolation(ValidationError):
    """``dist[a][b] > dist[a][via] + dist[via][b] + eps_tri``."""

    def __init__(self, a, b, via, excess):
        super().__init__(
            f"dist[{a}][{b}] exceeds dist[{a}][{via}] + dist[{via}][{b}] by {excess!r}"
        )
        self.indices = (a, b, via)


class NegativeScale(ValueError):
    pass


class NonpositiveLambda(ValueError):
    pass


class EmptySet(ValueError):
    pass


@dataclass(frozen=True)
class ToleranceConfig:
    """Comparison slack, both *relative*.

    ``eps_tri`` is multiplied by the largest matrix entry when checking the
    triangle inequality; ``eps_eq`` is multiplied by the space diameter when
    deciding whether two distances are equal (diametrical pairs, equality
    checks in the verification suites).
    """

    eps_tri: float = 1e-9
    eps_eq: float = 1e-9

    def __post_init__(self):
        if not (self.eps_tri >= 0 and self.eps_eq >= 0):
            raise ValueError("tolerances must be non-negative")


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True, eq=False)
class FiniteMetricSpace:
    """A finite metric space given by its distance matrix.

    Build instances through :func:`validate_metric` (or the helpers in this
    module); the constructor itself does not check the axioms.
    """

    dist: np.ndarray
    labels: tuple = ()
    tol: ToleranceConfig = field(default=DEFAULT_TOL)

    def __post_init__(self):
        d = np.array(self.dist, dtype=float)
        d.setflags(write=False)
        object.__setattr__(self, "dist", d)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(len(d))))
        else:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        if len(self.labels) != len(d):
            raise ValueError("labels and matrix sizes differ")

    @property
    def n(self) -> int:
        return len(self.dist)

    def __len__(self):
        return self.n

    @property
    def diameter(self) -> float:
        return diameter(self)

    def rows(self) -> list:
        """Plain nested lists of Python floats (fast scalar access)."""
        return self.dist.tolist()

    def __eq__(self, other):
        if not isinstance(other, FiniteMetricSpace):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.dist, other.dist)

    def __hash__(self):
        return hash((self.labels, self.dist.tobytes()))

    def __repr__(self):
        return f"FiniteMetricSpace(n={self.n}, diam={self.diameter:g})"


def validate_metric(matrix, labels: Sequence | None = None,
                    tol: ToleranceConfig = DEFAULT_TOL) -> FiniteMetricSpace:
    """Check the metric axioms and return a :class:`FiniteMetricSpace`.

    Axioms are checked in the order diagonal, sign, symmetry,
    non-degeneracy, triangle inequality; the first failure is raised with
    the witnessing indices attached as ``exc.indices``.
    """
    try:
        d = np.array(matrix, dtype=float)
    except (TypeError, ValueError) as exc:
        raise NotSquare(f"not a numeric matrix: {exc}") from None
    if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] < 1:
        raise NotSquare(f"expected a non-empty square matrix, got shape {d.shape}")
    if not np.all(np.isfinite(d)):
        i, j = map(int, np.argwhere(~np.isfinite(d))[0])
        raise NonFinite(f"dist[{i}][{j}] is not finite")
    n = len(d)
    for i in range(n):
        if d[i, i] != 0:
            raise NonzeroDiagonal(i, float(d[i, i]))
    neg = np.argwhere(d < 0)
    if len(neg):
        i, j = map(int, neg[0])
        raise NegativeDistance(i, j, float(d[i, j]))
    asym = np.argwhere(d != d.T)
    if len(asym):
        i, j = map(int, asym[0])
        raise Asymmetric(i, j, float(d[i, j]), float(d[j, i]))
    off = d + np.eye(n)
    zero = np.argwhere(off == 0)
    if len(zero):
        i, j = map(int, zero[0])
        raise DegeneratePair(i, j)
    slack = tol.eps_tri * float(d.max())
    # excess[a, b, via] = d[a, b] - d[a, via] - d[via, b]
    excess = d[:, :, None] - d[:, None, :] - d.T[None, :, :]
    bad = np.argwhere(excess > slack)
    if len(bad):
        a, b, via = map(int, bad[0])
        raise TriangleViolation(a, b, via, float(excess[a, b, via]))
    return FiniteMetricSpace(d, tuple(labels) if labels is not None else (), tol)


def diameter(X: FiniteMetricSpace) -> float:
    return float(X.dist.max())


def one_point(label="0") -> FiniteMetricSpace:
    return FiniteMetricSpace(np.zeros((1, 1)), (label,))


def scale(X: FiniteMetricSpace, lam: float) -> FiniteMetricSpace:
    """Multiply every distance by ``lam``; ``lam == 0`` collapses to one point."""
    if lam < 0:
        raise NegativeScale(f"scale factor must be >= 0, got {lam}")
    if lam == 0:
        return one_point()
    return FiniteMetricSpace(X.dist * lam, X.labels, X.tol)


def delta_simplex(m: int, lam: float = 1.0) -> FiniteMetricSpace:
    """The single-distance space on ``m`` points, all distances ``lam``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m == 1:
        return one_point()
    if not lam > 0:
        raise NonpositiveLambda(f"lambda must be > 0, got {lam}")
    d = np.full((m, m), float(lam))
    np.fill_diagonal(d, 0.0)
    return FiniteMetricSpace(d)


def _indices(X, A):
    idx = sorted(set(int(a) for a in A))
    if not idx:
        raise EmptySet("index set is empty")
    if idx[0] < 0 or idx[-1] >= X.n:
        raise IndexError(f"indices {idx} out of range for a {X.n}-point space")
    return idx


def block_distances(X: FiniteMetricSpace, A: Iterable[int], B: Iterable[int]):
    """Return ``(min, max)`` of ``dist[a][b]`` over ``A x B``."""
    a, b = _indices(X, A), _indices(X, B)
    sub = X.dist[np.ix_(a, b)]
    return float(sub.min()), float(sub.max())


def hausdorff_distance(X: FiniteMetricSpace, A: Iterable[int], B: Iterable[int]) -> float:
    """Hausdorff distance between two nonempty index sets of ``X``.

    Computed as ``max(max_a min_b d(a, b), max_b min_a d(a, b))``.
    """
    a, b = _indices(X, A), _indices(X, B)
    sub = X.dist[np.ix_(a, b)]
    return float(max(sub.min(axis=1).max(), sub.min(axis=0).max()))


def hausdorff_distance_balls(X: FiniteMetricSpace, A: Iterable[int], B: Iterable[int]) -> float:
    """Smallest ``r`` with ``A`` inside the closed ``r``-neighbourhood of ``B``
    and vice versa.

    Only distances between the two sets can be the answer, so the
    candidates are scanned in increasing order.  Kept as an independent
    cross-check of :func:`hausdorff_distance`.
    """
    a, b = _indices(X, A), _indices(X, B)
    d = X.dist
    for r in sorted({0.0, *(float(d[i, j]) for i in a for j in b)}):
        if all(any(d[i, j] <= r for j in b) for i in a) and \
                all(any(d[i, j] <= r for i in a) for j in b):
            return r
    raise AssertionError("unreachable: the largest candidate always works")


@dataclass(frozen=True)
class Partition:
    """A partition of ``{0, ..., n-1}`` into nonempty blocks.

    Blocks are stored as sorted tuples, ordered by their smallest element,
    so equal partitions compare equal.
    """

    blocks: tuple
    n: int

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(int(i) for i in blk)) for blk in self.blocks),
                              key=lambda blk: blk[:1]))
        if any(not blk for blk in blocks):
            raise ValueError("partition blocks must be nonempty")
        flat = [i for blk in blocks for i in blk]
        if sorted(flat) != list(range(self.n)):
            raise ValueError(f"blocks {blocks} do not partition range({self.n})")
        object.__setattr__(self, "blocks", blocks)

    def __len__(self):
        return len(self.blocks)

    @classmethod
    def from_labels(cls, colors: Sequence[int]) -> "Partition":
        """Group indices by an integer label per point."""
        groups: dict = {}
        for i, c in enumerate(colors):
            groups.setdefault(c, []).append(i)
        return cls(tuple(groups.values()), len(colors))


def partition_diameter(X: FiniteMetricSpace, D: Partition) -> float:
    if D.n != X.n:
        raise ValueError("partition and space sizes differ")
    return max(float(X.dist[np.ix_(blk, blk)].max()) for blk in D.blocks)


def subspace(X: FiniteMetricSpace, idx: Sequence[int]) -> FiniteMetricSpace:
    idx = list(idx)
    return FiniteMetricSpace(X.dist[np.ix_(idx, idx)], tuple(X.labels[i] for i in idx), X.tol)
