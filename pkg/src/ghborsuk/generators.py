"""Seeded test spaces.

Randomness comes from numpy's PCG64 seeded through a ``SeedSequence`` whose
spawn key encodes the spec fields, so each ``(kind, n, dim, seed)`` gets
its own reproducible stream.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .metric import FiniteMetricSpace, delta_simplex, validate_metric

__all__ = [
    "GenSpec",
    "InvalidSpec",
    "KINDS",
    "generate",
    "parse_spec",
    "shortest_path_closure",
    "embedded_simplex",
]

KINDS = ("euclidean", "synthetic", "polygon", "sphere-sample", "simplex")
_DEFAULT_DIM = {"euclidean": 2, "sphere-sample": 3}


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    dim: Optional[int] = None
    seed: int = 0
    scale: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.n < 1:
            raise InvalidSpec("n must be >= 1")
        if self.dim is not None and self.dim < 1:
            raise InvalidSpec("dim must be >= 1")
        if not self.scale > 0:
            raise InvalidSpec("scale must be > 0")
        if not 0 <= self.seed < 2**64:
            raise InvalidSpec("seed must fit in an unsigned 64-bit integer")

    @property
    def ambient(self) -> int:
        return self.dim if self.dim is not None else _DEFAULT_DIM.get(self.kind, 0)

    def rng(self) -> np.random.Generator:
        key = (KINDS.index(self.kind), self.n, self.ambient)
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=key)))


def parse_spec(text: str, seed: Optional[int] = None) -> GenSpec:
    """Parse ``kind:n[:dim][:scale][:seed]``.

    ``dim`` is only read for the kinds that have one (euclidean,
    sphere-sample); for the others the third field is the scale.  An
    explicit ``seed`` argument overrides the one in the string.
    """
    parts = text.split(":")
    kind = parts[0]
    if kind not in KINDS:
        raise InvalidSpec(f"unknown kind {kind!r}; expected one of {KINDS}")
    try:
        n = int(parts[1])
        rest = parts[2:]
        dim = None
        if kind in _DEFAULT_DIM and rest:
            dim = int(rest.pop(0))
        scale = float(rest.pop(0)) if rest else 1.0
        spec_seed = int(rest.pop(0)) if rest else 0
    except (IndexError, ValueError) as exc:
        raise InvalidSpec(f"cannot parse generator spec {text!r}: {exc}") from None
    if rest:
        raise InvalidSpec(f"too many fields in {text!r}")
    return GenSpec(kind, n, dim, spec_seed if seed is None else seed, scale)


def shortest_path_closure(w: np.ndarray) -> np.ndarray:
    """All-pairs shortest paths (Floyd-Warshall) of a symmetric weight matrix."""
    d = np.array(w, dtype=float)
    for k in range(len(d)):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def _pairwise(points):
    diff = points[:, None, :] - points[None, :, :]
    return np.sqrt((diff ** 2).sum(axis=-1))


def generate(spec: GenSpec) -> FiniteMetricSpace:
    n, s = spec.n, spec.scale
    rng = spec.rng()
    if spec.kind == "simplex":
        return delta_simplex(n, s)
    if spec.kind == "euclidean":
        d = _pairwise(rng.random((n, spec.ambient))) * s
    elif spec.kind == "synthetic":
        w = rng.uniform(0.5, 1.5, size=(n, n)) * s
        w = (w + w.T) / 2
        np.fill_diagonal(w, 0.0)
        d = shortest_path_closure(w)
    elif spec.kind == "polygon":
        # side length = scale; chord for index gap k is scale * sin(pi k/n) / sin(pi/n)
        if n == 1:
            return delta_simplex(1)
        gap = np.abs(np.subtract.outer(np.arange(n), np.arange(n)))
        gap = np.minimum(gap, n - gap)
        d = s * np.sin(np.pi * gap / n) / np.sin(np.pi / n)
    else:  # sphere-sample
        if spec.ambient < 2:
            raise InvalidSpec("sphere-sample needs dim >= 2")
        u = rng.standard_normal((n, spec.ambient))
        u /= np.linalg.norm(u, axis=1, keepdims=True)
        # angle between unit vectors, stable near 0 and pi
        chord = _pairwise(u)
        plus = np.sqrt(((u[:, None, :] + u[None, :, :]) ** 2).sum(axis=-1))
        d = 2 * np.arctan2(chord, plus) * s
    np.fill_diagonal(d, 0.0)
    d = (d + d.T) / 2
    return validate_metric(d)


def embedded_simplex(n: int, k: int, seed: int = 0, scale: float = 1.0) -> FiniteMetricSpace:
    """``n`` points whose first ``k`` form a single-distance block at the diameter.

    All other distances are drawn from ``[0.5, 1) * scale``; any symmetric
    matrix with off-diagonal entries in ``[scale / 2, scale]`` is a metric.
    The diameter graph is the complete graph on the first ``k`` points, so
    the Borsuk number is ``k``.
    """
    if not 2 <= k <= n:
        raise InvalidSpec("need 2 <= k <= n")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(99, n, k))))
    w = rng.uniform(0.5, 1.0, size=(n, n))
    w = (w + w.T) / 2
    w[:k, :k] = 1.0
    np.fill_diagonal(w, 0.0)
    return validate_metric(w * scale)
