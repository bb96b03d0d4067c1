"""Depth-first search over irreducible correspondences.

An irreducible correspondence between index sets ``{0..nx-1}`` ("variables")
and ``{0..ny-1}`` ("values") is stored as one bitmask ``images[x]`` per
variable.  It is irreducible exactly when every value that appears in a
multi-element image belongs to that image alone; such values are called
*owned*.  The search assigns variables one at a time, so a value can be

* free (no pre-image yet),
* used by one or more single-element images, or
* owned by one multi-element image.

In ``lex`` mode variables are taken in index order and candidate images in
the order that makes the emitted sorted pair lists strictly increasing
lexicographically.  Otherwise the variable with the fewest remaining
values is taken first, which is what the feasibility probes use.

When distance matrices are supplied every pair of pairs is required to
satisfy ``|dx[x][x'] - dy[y][y']| <= bound.limit``; values are
filtered out of the remaining variables' domains as soon as a choice
rules them out (forward checking), pairs whose distance rows are further
apart than the limit never enter a domain, and the free values must still
admit a cover by the remaining variables (greedy clique bound in the
conflict graph ``dy > limit``).
"""
from __future__ import annotations

import math

import numpy as np

INF = math.inf


def bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class Limit:
    """Largest pair cost a search may accept, plus a flag that ends the search.

    One instance is shared by the workers of a parallel search, so setting
    ``stop`` from any of them halts all.
    """

    def __init__(self, limit=INF):
        self.limit = limit
        self.stop = False


def twin_classes(d):
    """For each point, the other points at the same distance from everything else."""
    n = len(d)
    twins = [[] for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if all(d[a][c] == d[b][c] for c in range(n) if c != a and c != b):
                twins[a].append(b)
                twins[b].append(a)
    return twins


def automorphisms(d, cap=64):
    """Non-identity distance-preserving permutations of ``d``, or ``None`` past ``cap``."""
    n = len(d)
    rows = [sorted(r) for r in d]
    perm = [-1] * n
    taken = [False] * n
    found = []

    def extend(i):
        if i == n:
            found.append(tuple(perm))
            return len(found) <= cap
        for j in range(n):
            if taken[j] or rows[j] != rows[i]:
                continue
            if all(d[i][k] == d[j][perm[k]] for k in range(i)):
                perm[i], taken[j] = j, True
                going = extend(i + 1)
                perm[i], taken[j] = -1, False
                if not going:
                    return False
        return True

    if not extend(0):
        return None
    return [g for g in found if any(g[i] != i for i in range(n))]


def pair_lower_bounds(dx, dy):
    """``b[x][y]``: least distortion of any correspondence containing ``(x, y)``.

    Every other point must be matched somewhere, so the bound is the
    Hausdorff distance between the distance rows of ``x`` and ``y``.
    """
    # same float expression as the search, so comparisons stay exact
    gap = np.abs(np.asarray(dx, float)[:, None, :, None] - np.asarray(dy, float)[None, :, None, :])
    return np.maximum(gap.min(axis=3).max(axis=2), gap.min(axis=2).max(axis=2)).tolist()


def relation_distortion(dx, dy, images):
    """Exact distortion of the relation given by ``images`` (max |dx - dy|)."""
    pairs = [(x, y) for x, m in enumerate(images) for y in bits(m)]
    worst = 0.0
    for a, (x, y) in enumerate(pairs):
        rx, ry = dx[x], dy[y]
        for x2, y2 in pairs[a + 1:]:
            c = abs(rx[x2] - ry[y2])
            if c > worst:
                worst = c
    return worst


class IrreducibleSearch:
    def __init__(self, nx, ny, dx=None, dy=None, bound=None, allowed=None, lex=True,
                 twins=None, symmetry=None):
        self.nx, self.ny = nx, ny
        # twins[x]: the other variables interchangeable with x (only used to
        # order their images; never combine with ``lex``)
        self.twins = twins
        # symmetry: automorphisms of the value side; an image must be least in
        # its orbit under the stabiliser of the images chosen above it
        self.symmetry = [tuple(1 << g[y] for y in range(ny)) for g in symmetry or ()]
        self.dx, self.dy = dx, dy
        self.full = (1 << ny) - 1
        self.bound = bound if bound is not None else Limit()
        self.allowed = list(allowed) if allowed is not None else [self.full] * nx
        self.lex = lex
        self.nodes = 0
        self.pair_bound = None if dx is None else pair_lower_bounds(dx, dy)
        self._tables()

    # -- compatibility tables -------------------------------------------------

    def _tables(self):
        limit = self.bound.limit
        nx, ny, full = self.nx, self.ny, self.full
        if self.dx is None or limit == INF:
            row = [full] * ny
            self.ok = [[row] * nx for _ in range(nx)]
            self.conflict = [0] * ny
            self.static = [full] * nx
            return
        dx, dy = self.dx, self.dy
        pb = self.pair_bound
        self.static = [mask_of(y for y in range(ny) if pb[x][y] <= limit) for x in range(nx)]
        # ok[x][x2][y2]: values y for x compatible with the pair (x2, y2)
        ok = []
        for x in range(nx):
            rx = dx[x]
            per_x2 = []
            for x2 in range(nx):
                a = rx[x2]
                per_x2.append([mask_of(y for y in range(ny) if abs(a - dy[y][y2]) <= limit)
                               for y2 in range(ny)])
            ok.append(per_x2)
        self.ok = ok
        self.conflict = [mask_of(y for y in range(ny) if dy[y2][y] > limit) for y2 in range(ny)]

    # -- candidates -----------------------------------------------------------

    def _candidates(self, x, dom, used, last):
        """Images for ``x`` in emission order (see module docstring)."""
        full = self.full
        same = self.ok[x][x]
        free = full & ~used
        if last:
            if free == 0:
                for y in bits(dom):
                    yield 1 << y
            elif free & ~dom == 0:
                if free & (free - 1) == 0 or self._clique_free(x, free):
                    yield free
            return
        for y in bits(dom):
            if used >> y & 1:
                yield 1 << y
            else:
                higher = full & ~((2 << y) - 1)
                yield from self._extensions(1 << y, dom & free & same[y] & higher, same)

    def _extensions(self, prefix, ext, same):
        full = self.full
        for b in bits(ext):
            higher = full & ~((2 << b) - 1)
            yield from self._extensions(prefix | 1 << b, ext & same[b] & higher, same)
        yield prefix

    def _clique_free(self, x, members):
        same = self.ok[x][x]
        return all(members & ~same[y] == 0 for y in bits(members))

    def _cover_bound(self, free):
        """Greedy clique size among ``free`` values in the conflict graph."""
        conflict = self.conflict
        size = 0
        cand = free
        while cand:
            best, best_deg = -1, -1
            for y in bits(cand):
                deg = (cand & conflict[y]).bit_count()
                if deg > best_deg:
                    best, best_deg = y, deg
            size += 1
            cand &= conflict[best]
        return size

    def _ordered(self, images, x, S):
        key = (S & -S, S)
        for u in self.twins[x]:
            m = images[u]
            if m and ((m & -m, m) > key if u < x else (m & -m, m) < key):
                return False
        return True

    def _stabiliser(self, stab, S):
        """``None`` if some element maps ``S`` below itself, else the elements fixing ``S``."""
        keep = []
        for g in stab:
            t = 0
            for y in bits(S):
                t |= g[y]
            if t < S:
                return None
            if t == S:
                keep.append(g)
        return keep

    # -- search ---------------------------------------------------------------

    def _initial_state(self):
        domains = [a & s for a, s in zip(self.allowed, self.static)]
        if any(d == 0 for d in domains):
            return None
        return domains, 0, 0, list(range(self.nx))

    def _pick(self, domains, remaining):
        if self.lex:
            return remaining[0]
        return min(remaining, key=lambda v: (domains[v].bit_count(), v))

    def _apply(self, x, S, domains, used, owned, remaining):
        """State after giving ``x`` the image ``S``; ``None`` when it dead-ends."""
        used2 = used | S
        owned2 = owned | S if S & (S - 1) else owned
        rest = [v for v in remaining if v != x]
        ok, static = self.ok, self.static
        doms = list(domains)
        union = 0
        members = list(bits(S))
        for v in rest:
            m = doms[v] & ~owned2 & static[v]
            okv = ok[v][x]
            for s in members:
                m &= okv[s]
            if not m:
                return None
            doms[v] = m
            union |= m
        free = self.full & ~used2
        if free:
            if not rest or free & ~union:
                return None
            if len(rest) < free.bit_count() and self._cover_bound(free) > len(rest):
                return None
        return doms, used2, owned2, rest

    def _dfs(self, images, domains, used, owned, remaining, stab=()):
        inc = self.bound
        if inc.stop:
            return
        self.nodes += 1
        if not remaining:
            if used == self.full:
                yield images
            return
        x = self._pick(domains, remaining)
        last = len(remaining) == 1
        for S in self._candidates(x, domains[x] & self.static[x], used, last):
            if inc.stop:
                return
            if self.twins is not None and not self._ordered(images, x, S):
                continue
            sub = stab
            if stab:
                sub = self._stabiliser(stab, S)
                if sub is None:
                    continue
            state = self._apply(x, S, domains, used, owned, remaining)
            if state is None:
                continue
            images[x] = S
            yield from self._dfs(images, *state, sub)
            images[x] = 0

    def solutions(self):
        """Yield image lists (shared buffer: copy before keeping)."""
        state = self._initial_state()
        if state is None:
            return
        yield from self._dfs([0] * self.nx, *state, self.symmetry)

    def root_branches(self):
        """``(x, S)`` choices at the root, for splitting work between workers."""
        state = self._initial_state()
        if state is None:
            return []
        domains, used, owned, remaining = state
        x = self._pick(domains, remaining)
        cands = self._candidates(x, domains[x] & self.static[x], used, len(remaining) == 1)
        return [(x, S) for S in cands if self._stabiliser(self.symmetry, S) is not None]

    def solutions_from(self, x, S):
        state = self._initial_state()
        if state is None:
            return
        state = self._apply(x, S, *state)
        if state is None:
            return
        images = [0] * self.nx
        images[x] = S
        yield from self._dfs(images, *state, self._stabiliser(self.symmetry, S))
