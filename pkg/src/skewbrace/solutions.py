"""Finite set-theoretic solutions of the Yang-Baxter equation.

A solution on ``X = {0..n-1}`` is stored as two ``n x n`` arrays ``left`` and
``right`` with ``r(i, j) = (left[i, j], right[i, j])``.  Reading off the
components gives ``sigma[x][y] = left[x, y]`` and ``tau[y][x] = right[x, y]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FormatError


@dataclass(frozen=True, eq=False)
class SolutionTable:
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        left = np.array(self.left, dtype=np.int64)
        right = np.array(self.right, dtype=np.int64)
        if left.ndim != 2 or left.shape != right.shape or left.shape[0] != left.shape[1] \
                or left.shape[0] == 0:
            raise FormatError('solution tables must be non-empty n x n arrays of equal shape')
        n = left.shape[0]
        for t in (left, right):
            if t.min() < 0 or t.max() >= n:
                raise FormatError(f'solution entries must lie in 0..{n - 1}')
        codes = (left * n + right).ravel()
        if len(np.unique(codes)) != n * n:
            raise FormatError('r is not a bijection of X x X')
        left.setflags(write=False)
        right.setflags(write=False)
        object.__setattr__(self, 'left', left)
        object.__setattr__(self, 'right', right)

    @classmethod
    def from_function(cls, n, r):
        """Build from a Python callable ``r(i, j) -> (k, l)``."""
        left = np.empty((n, n), dtype=np.int64)
        right = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                left[i, j], right[i, j] = r(i, j)
        return cls(left, right)

    @classmethod
    def from_diagonal(cls, sigma, tau):
        sigma = np.asarray(sigma, dtype=np.int64)
        tau = np.asarray(tau, dtype=np.int64)
        return cls(sigma, tau.T)

    @property
    def n(self):
        return self.left.shape[0]

    def __call__(self, i, j):
        return int(self.left[i, j]), int(self.right[i, j])

    def items(self):
        """``((i, j), (k, l))`` in lexicographic ``(i, j)`` order."""
        for i in range(self.n):
            for j in range(self.n):
                yield (i, j), self(i, j)

    def __eq__(self, other):
        if not isinstance(other, SolutionTable):
            return NotImplemented
        return np.array_equal(self.left, other.left) and np.array_equal(self.right, other.right)

    def __hash__(self):
        return hash((self.left.tobytes(), self.right.tobytes()))

    def __repr__(self):
        return f'SolutionTable(n={self.n})'

    def key(self):
        """Sort key: the flattened table."""
        return tuple(np.stack([self.left, self.right], axis=-1).ravel().tolist())

    def relabeled(self, p):
        """Conjugate by the relabeling ``x -> p[x]``."""
        p = np.asarray(p)
        q = np.argsort(p)
        left = p[self.left[q[:, None], q[None, :]]]
        right = p[self.right[q[:, None], q[None, :]]]
        return SolutionTable(left, right)


@dataclass(frozen=True)
class DiagonalMaps:
    sigma: np.ndarray  # sigma[x, y] = sigma_x(y)
    tau: np.ndarray  # tau[y, x] = tau_y(x)

    def reassemble(self):
        return SolutionTable(self.sigma, self.tau.T)


def extract_diagonal(sol):
    return DiagonalMaps(sol.left.copy(), sol.right.T.copy())


def _apply12(sol, a, b, c):
    return sol.left[a, b], sol.right[a, b], c


def _apply23(sol, a, b, c):
    return a, sol.left[b, c], sol.right[b, c]


def braid_sides(sol):
    """Both sides of ``r12 r23 r12 = r23 r12 r23`` on every triple.

    Returns two arrays of shape ``(n, n, n, 3)`` indexed by the input triple.
    The rightmost factor is applied first.
    """
    n = sol.n
    a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing='ij')
    lhs = _apply12(sol, *_apply23(sol, *_apply12(sol, a, b, c)))
    rhs = _apply23(sol, *_apply12(sol, *_apply23(sol, a, b, c)))
    return np.stack(lhs, axis=-1), np.stack(rhs, axis=-1)


def ybe_witness(sol):
    """First triple where the braid relation fails, with both sides, or None."""
    lhs, rhs = braid_sides(sol)
    bad = np.argwhere((lhs != rhs).any(axis=-1))
    if not len(bad):
        return None
    t = tuple(int(x) for x in bad[0])
    return t, tuple(int(x) for x in lhs[t]), tuple(int(x) for x in rhs[t])


def is_ybe(sol):
    return ybe_witness(sol) is None


def _rows_are_perms(m):
    n = m.shape[1]
    return all(len(np.unique(row)) == n for row in m)


def is_nondegenerate(sol):
    d = extract_diagonal(sol)
    return _rows_are_perms(d.sigma) and _rows_are_perms(d.tau)


def is_involutive(sol):
    l2 = sol.left[sol.left, sol.right]
    r2 = sol.right[sol.left, sol.right]
    n = sol.n
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing='ij')
    return bool(np.array_equal(l2, i) and np.array_equal(r2, j))


def make_flip(n):
    if n < 1:
        raise ValueError('n must be positive')
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing='ij')
    return SolutionTable(j, i)
