"""
Array-level view of a whole symmetric group.

Everything that iterates over all of S_n (Kazhdan-Lusztig tables, cell
graphs, brute-force classifier sweeps) works on integer element indices
into a fixed enumeration rather than on Permutation objects.  The
enumeration is lexicographic on windows, so indices are deterministic
across runs and processes.

Ranks up to n = 8 are supported; the full pairwise Bruhat matrix is
only materialized for n <= 7 (it is quadratic in n!).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from . import _kernels
from .permutations import Permutation, _raw

MAX_N = 8


class GroupIndex:
    """Indexed enumeration of S_n with multiplication and order tables."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_N:
            raise ValueError(f'rank out of supported range 1..{MAX_N}: {n}')
        self.n = n
        windows = list(itertools.permutations(range(1, n + 1)))
        self.N = len(windows)
        self.windows = np.array(windows, dtype=np.int8)
        self.index = {w: i for i, w in enumerate(windows)}

        inv = self.windows.argsort(axis=1).astype(np.int64)  # 0-based
        self.inverse = np.array(
            [self.index[tuple(int(v) + 1 for v in row)] for row in inv],
            dtype=np.int64,
        )
        iu = np.triu_indices(n, 1)
        self.lengths = (
            (self.windows[:, :, None] > self.windows[:, None, :])
            [:, iu[0], iu[1]].sum(axis=1).astype(np.int64)
        )

        # lmul[s-1, i]: swap values s, s+1; rmul[s-1, i]: swap positions
        gens = max(1, n - 1)
        self.lmul = np.empty((gens, self.N), dtype=np.int64)
        self.rmul = np.empty((gens, self.N), dtype=np.int64)
        for i, w in enumerate(windows):
            for s in range(1, n):
                swapped = tuple(
                    s + 1 if v == s else s if v == s + 1 else v for v in w
                )
                self.lmul[s - 1, i] = self.index[swapped]
                t = list(w)
                t[s - 1], t[s] = t[s], t[s - 1]
                self.rmul[s - 1, i] = self.index[tuple(t)]
        if n == 1:
            self.lmul[0, :] = 0
            self.rmul[0, :] = 0

        self.identity_idx = self.index[tuple(range(1, n + 1))]
        self.w0_idx = self.index[tuple(range(n, 0, -1))]
        self.order_by_length = np.argsort(self.lengths, kind='stable')
        # first left descent per element, -1 for the identity
        self.first_left_descent = np.full(self.N, -1, dtype=np.int64)
        for s in range(n - 1, 0, -1):
            drop = self.lengths[self.lmul[s - 1]] < self.lengths
            self.first_left_descent[drop] = s - 1
        self._dominance = None
        self._leq = None

    # -- conversions

    def perm(self, i: int) -> Permutation:
        return _raw(tuple(int(v) for v in self.windows[i]))

    def idx(self, w: Permutation) -> int:
        return self.index[w.window]

    # -- order tables

    @property
    def dominance(self) -> np.ndarray:
        """Flattened dominance tables, shape (N, n*n), uint8."""
        if self._dominance is None:
            n = self.n
            ge = self.windows[:, :, None] >= np.arange(1, n + 1, dtype=np.int8)
            self._dominance = (
                np.cumsum(ge, axis=1, dtype=np.uint8).reshape(self.N, n * n)
            )
        return self._dominance

    @property
    def leq(self) -> np.ndarray:
        """Full Bruhat matrix leq[x, y] = (x <= y); n <= 7 only."""
        if self._leq is None:
            if self.n > 7:
                raise MemoryError(
                    f'pairwise Bruhat matrix for S_{self.n} not materialized'
                )
            self._leq = _kernels.leq_matrix(self.dominance)
        return self._leq

    def leq_pair(self, x: int, y: int) -> bool:
        if self._leq is not None:
            return bool(self._leq[x, y])
        return bool((self.dominance[x] <= self.dominance[y]).all())

    def below(self, y: int) -> np.ndarray:
        """Indices of all x <= y, without needing the full matrix."""
        mask = (self.dominance <= self.dominance[y]).all(axis=1)
        return np.nonzero(mask)[0]


@lru_cache(maxsize=None)
def group_index(n: int) -> GroupIndex:
    return GroupIndex(n)
