"""Vectorised statistics for every element of G_{r,n}.

A :class:`GroupTable` holds one row per colored permutation, in the same
lexicographic order as :func:`signed_mahonian.sets.enumerate`. Restrictions
become boolean masks and generating sums become a single ``bincount``.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

import numpy as np

from .cycring import QPolynomial
from .perm import CharacterSpec, ColoredPermutation, ColoredWord
from .sets import RestrictionSpec

MAX_ROWS = 4_000_000


class GroupTable:
    def __init__(self, r: int, n: int):
        size = r**n * factorial(n)
        if size > MAX_ROWS:
            raise ValueError(f"G_{{{r},{n}}} has {size} elements; too large to tabulate")
        self.r, self.n, self.size = r, n, size
        perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int16).reshape(-1, n)
        cols = np.array(list(itertools.product(range(r), repeat=n)), dtype=np.int16).reshape(-1, n)
        nc = cols.shape[0]
        self.sigma = np.repeat(perms, nc, axis=0)
        self.colors = np.tile(cols, (perms.shape[0], 1))

        pinv = np.zeros(perms.shape[0], dtype=np.int64)
        for i in range(n):
            for j in range(i + 1, n):
                pinv += perms[:, i] > perms[:, j]
        self.inv = np.repeat(pinv, nc)

        rows = np.arange(size)[:, None]
        self.pos = np.zeros((size, n + 1), dtype=np.int16)
        self.pos[rows, self.sigma] = np.arange(1, n + 1, dtype=np.int16)
        self.colval = np.zeros((size, n + 1), dtype=np.int16)
        self.colval[rows, self.sigma] = self.colors

        self.col = self.colors.sum(axis=1).astype(np.int64)
        self.maj_F = self._maj_f(self.colors)
        self.fmaj = r * self.maj_F + self.col
        stripped = self.colors.copy()
        if n:
            stripped[:, -1] = 0
        self.star = (self.col % r) == 0
        self.dmaj = r * self._maj_f(stripped) + stripped.sum(axis=1)

    def _maj_f(self, colors: np.ndarray) -> np.ndarray:
        # F-order key: higher color first, then value
        key = (self.r - 1 - colors.astype(np.int64)) * (self.n + 1) + self.sigma
        out = np.zeros(self.size, dtype=np.int64)
        for i in range(self.n - 1):
            out += (i + 1) * (key[:, i] > key[:, i + 1])
        return out

    # -- masks ------------------------------------------------------------------
    def mask_word(self, W: ColoredWord) -> np.ndarray:
        m = np.ones(self.size, dtype=bool)
        for v, c in zip(W.values, W.colors):
            m &= self.colval[:, v] == c
        for a, b in zip(W.values, W.values[1:]):
            m &= self.pos[:, a] < self.pos[:, b]
        return m

    def mask_abs_word(self, alpha) -> np.ndarray:
        m = np.ones(self.size, dtype=bool)
        for a, b in zip(alpha, alpha[1:]):
            m &= self.pos[:, a] < self.pos[:, b]
        return m

    def mask_fiber(self, w) -> np.ndarray:
        return np.all(self.sigma == np.asarray(w, dtype=np.int16), axis=1)

    def mask(self, spec: RestrictionSpec | str) -> np.ndarray:
        if isinstance(spec, str):
            spec = RestrictionSpec.parse(spec, self.r)
        spec.validate(self.r, self.n)
        k = spec.kind
        if k == "full":
            return np.ones(self.size, dtype=bool)
        if k in ("sub", "word"):
            return self.mask_word(spec.restricting_word(self.r))
        if k == "abs-sub":
            return self.mask_abs_word(spec.param)
        if k == "fiber":
            return self.mask_fiber(spec.param)
        if k == "star":
            return self.star.copy()
        if k == "star-fiber":
            return self.star & self.mask_fiber(spec.param)
        if k == "coset":
            kk = spec.param
            m = np.ones(self.size, dtype=bool)
            if kk:
                m &= ~np.any(self.colors[:, self.n - kk:], axis=1)
                for i in range(self.n - kk, self.n - 1):
                    m &= self.sigma[:, i] < self.sigma[:, i + 1]
            return m
        raise AssertionError(k)

    # -- sums ---------------------------------------------------------------------
    def signed_sum(self, mask: np.ndarray, spec: CharacterSpec, stat: str = "fmaj") -> QPolynomial:
        """Sum of ``chi(pi) q^{stat(pi)}`` over the rows selected by ``mask``."""
        spec.check(self.r)
        r = self.r
        exps = getattr(self, stat)[mask]
        if stat == "dmaj":
            zeta = np.zeros_like(exps)
        else:
            zeta = (spec.h * self.col[mask]) % r
        if spec.epsilon == -1:
            weights = 1 - 2 * (self.inv[mask] & 1)
        else:
            weights = np.ones(exps.shape, dtype=np.int64)
        idx = exps * r + zeta
        counts = np.zeros(int(idx.max()) + 1 if idx.size else 0, dtype=np.int64)
        np.add.at(counts, idx, weights)
        nz = np.nonzero(counts)[0]
        hist = {(int(i) // r, int(i) % r): int(counts[i]) for i in nz}
        return QPolynomial.from_histogram(r, hist)

    def members(self, mask: np.ndarray):
        for i in np.nonzero(mask)[0]:
            yield self.row(int(i))

    def row(self, i: int) -> ColoredPermutation:
        return ColoredPermutation(self.r, tuple(int(v) for v in self.sigma[i]),
                                  tuple(int(c) for c in self.colors[i]))


@lru_cache(maxsize=16)
def group_table(r: int, n: int) -> GroupTable:
    return GroupTable(r, n)
