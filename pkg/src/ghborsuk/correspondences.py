"""Relations, correspondences and their distortion.

Pairs are ``(i, j)`` with ``i`` indexing the first space and ``j`` the
second.  Irreducible correspondences are enumerated in increasing
lexicographic order of their sorted pair lists; the same order decides
ties everywhere a single witness has to be chosen.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from ._search import IrreducibleSearch, bits
from .metric import FiniteMetricSpace

__all__ = [
    "Relation",
    "Correspondence",
    "BlockDecomposition",
    "EmptyRelation",
    "NotACorrespondence",
    "NotIrreducible",
    "SizeMismatch",
    "distortion",
    "is_correspondence",
    "is_irreducible",
    "decompose_blocks",
    "reduce_to_irreducible",
    "enumerate_irreducible",
    "block_distortion",
    "identity",
]


class EmptyRelation(ValueError):
    pass


class NotACorrespondence(ValueError):
    pass


class NotIrreducible(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    pairs: frozenset
    nx: int
    ny: int

    def __post_init__(self):
        pairs = frozenset((int(i), int(j)) for i, j in self.pairs)
        for i, j in pairs:
            if not (0 <= i < self.nx and 0 <= j < self.ny):
                raise IndexError(f"pair {(i, j)} out of range for sizes {self.nx}x{self.ny}")
        object.__setattr__(self, "pairs", pairs)

    def sorted_pairs(self) -> list:
        return sorted(self.pairs)

    def image(self, i) -> frozenset:
        return frozenset(j for a, j in self.pairs if a == i)

    def preimage(self, j) -> frozenset:
        return frozenset(i for i, b in self.pairs if b == j)

    def transpose(self):
        return type(self)(frozenset((j, i) for i, j in self.pairs), self.ny, self.nx)

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self.sorted_pairs()])

    @classmethod
    def from_json(cls, text, nx, ny):
        return cls(frozenset(tuple(p) for p in json.loads(text)), nx, ny)

    def __len__(self):
        return len(self.pairs)


class Correspondence(Relation):
    """A relation whose projections cover both sides."""

    def __post_init__(self):
        super().__post_init__()
        if not is_correspondence(self):
            raise NotACorrespondence(f"{self.sorted_pairs()} does not cover both sides")


def identity(n: int) -> Correspondence:
    return Correspondence(frozenset((i, i) for i in range(n)), n, n)


def _as_correspondence(R) -> Correspondence:
    if isinstance(R, Correspondence):
        return R
    if not is_correspondence(R):
        raise NotACorrespondence(f"{R.sorted_pairs()} does not cover both sides")
    return Correspondence(R.pairs, R.nx, R.ny)


def is_correspondence(sigma: Relation) -> bool:
    return ({i for i, _ in sigma.pairs} == set(range(sigma.nx))
            and {j for _, j in sigma.pairs} == set(range(sigma.ny)))


def distortion(X: FiniteMetricSpace, Y: FiniteMetricSpace, sigma: Relation) -> float:
    """``max |d_X(x, x') - d_Y(y, y')|`` over all pairs of pairs in ``sigma``."""
    if not sigma.pairs:
        raise EmptyRelation("distortion of an empty relation is undefined")
    if (sigma.nx, sigma.ny) != (X.n, Y.n):
        raise SizeMismatch(f"relation is {sigma.nx}x{sigma.ny}, spaces are {X.n}x{Y.n}")
    i, j = np.array(sigma.sorted_pairs()).T
    return float(np.abs(X.dist[np.ix_(i, i)] - Y.dist[np.ix_(j, j)]).max())


def is_irreducible(R: Relation) -> bool:
    R = _as_correspondence(R)
    img = {i: 0 for i in range(R.nx)}
    pre = {j: 0 for j in range(R.ny)}
    for i, j in R.pairs:
        img[i] += 1
        pre[j] += 1
    return all(min(img[i], pre[j]) == 1 for i, j in R.pairs)


@dataclass(frozen=True)
class BlockDecomposition:
    """Matched partitions ``{X_k}`` and ``{Y_k}`` with ``min(#X_k, #Y_k) == 1``.

    ``blocks`` is a tuple of ``(xs, ys)`` pairs of sorted index tuples, kept
    in canonical (sorted) order so equal decompositions compare equal.
    """

    blocks: tuple
    nx: int
    ny: int

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(xs)), tuple(sorted(ys))) for xs, ys in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        xs = sorted(i for b, _ in blocks for i in b)
        ys = sorted(j for _, b in blocks for j in b)
        if xs != list(range(self.nx)) or ys != list(range(self.ny)):
            raise ValueError(f"blocks {blocks} do not partition both index sets")
        if any(min(len(a), len(b)) != 1 for a, b in blocks):
            raise NotIrreducible(f"every block needs a singleton side: {blocks}")

    def __len__(self):
        return len(self.blocks)

    def correspondence(self) -> Correspondence:
        pairs = frozenset((i, j) for xs, ys in self.blocks for i in xs for j in ys)
        return Correspondence(pairs, self.nx, self.ny)

    @classmethod
    def from_images(cls, images, ny):
        """Build from one image bitmask per point of the first space."""
        blocks = []
        shared: dict = {}
        for x, m in enumerate(images):
            if m & (m - 1):
                blocks.append(((x,), tuple(bits(m))))
            else:
                shared.setdefault(m.bit_length() - 1, []).append(x)
        blocks.extend((tuple(xs), (y,)) for y, xs in shared.items())
        return cls(tuple(blocks), len(images), ny)


def decompose_blocks(R: Relation) -> BlockDecomposition:
    """Split an irreducible correspondence into its matched partition blocks."""
    R = _as_correspondence(R)
    if not is_irreducible(R):
        raise NotIrreducible(f"{R.sorted_pairs()} is not irreducible")
    blocks = {(tuple(sorted(R.preimage(j))), tuple(sorted(R.image(i)))) for i, j in R.pairs}
    return BlockDecomposition(tuple(blocks), R.nx, R.ny)


def _images_of(R: Relation):
    images = [0] * R.nx
    for i, j in R.pairs:
        images[i] |= 1 << j
    return images


def reduce_to_irreducible(R: Relation) -> Correspondence:
    """Return the lexicographically first irreducible correspondence inside ``R``."""
    R = _as_correspondence(R)
    search = IrreducibleSearch(R.nx, R.ny, allowed=_images_of(R))
    for images in search.solutions():
        return BlockDecomposition.from_images(images, R.ny).correspondence()
    raise AssertionError("every correspondence contains an irreducible one")


def enumerate_irreducible(nx: int, ny: int) -> Iterator[BlockDecomposition]:
    """Every irreducible correspondence between ``nx`` and ``ny`` points, once.

    Lazy; ordered by sorted pair list.
    """
    if nx < 1 or ny < 1:
        raise ValueError("both sizes must be positive")
    for images in IrreducibleSearch(nx, ny).solutions():
        yield BlockDecomposition.from_images(images, ny)


def block_distortion(X: FiniteMetricSpace, Y: FiniteMetricSpace, B: BlockDecomposition) -> float:
    """Distortion from block-to-block distance ranges.

    For blocks ``k, l`` the worst pair is either the largest ``X`` distance
    against the smallest ``Y`` distance or the other way round.
    """
    if (B.nx, B.ny) != (X.n, Y.n):
        raise SizeMismatch(f"decomposition is {B.nx}x{B.ny}, spaces are {X.n}x{Y.n}")
    dx, dy = X.dist, Y.dist
    worst = 0.0
    for xs_k, ys_k in B.blocks:
        for xs_l, ys_l in B.blocks:
            sx = dx[np.ix_(xs_k, xs_l)]
            sy = dy[np.ix_(ys_k, ys_l)]
            worst = max(worst, sx.max() - sy.min(), sy.max() - sx.min())
    return float(worst)


def pairs_to_relation(pairs: Iterable, nx: int, ny: int) -> Relation:
    return Relation(frozenset(tuple(p) for p in pairs), nx, ny)
