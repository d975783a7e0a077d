"""Finite groups given by Cayley tables.

Elements are the integers ``0..n-1``.  Permutations are tuples in one-line
image notation and compose as ``(f*g)(x) = f(g(x))``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import FormatError


def _as_table(op, name='op'):
    try:
        t = np.array(op, dtype=np.int64)
    except (ValueError, TypeError):
        raise FormatError(f'{name} table is ragged or not integer') from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise FormatError(f'{name} table must be a non-empty square table, got shape {t.shape}')
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise FormatError(f'{name} table has entries outside 0..{n - 1}')
    t.setflags(write=False)
    return t


# permutations ---------------------------------------------------------------

def compose(f, g):
    """``f*g``, i.e. apply ``g`` first."""
    return tuple(f[x] for x in g)


def perm_inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(p, n=None):
    n = len(p) if n is None else n
    return len(p) == n and sorted(int(x) for x in p) == list(range(n))


@functools.lru_cache(maxsize=None)
def perms_fixing_zero(n):
    """All permutations of ``range(n)`` with ``p[0] == 0`` as a read-only
    array of shape ``((n-1)!, n)``, in lexicographic order."""
    rows = [(0,) + p for p in itertools.permutations(range(1, n))]
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    arr.setflags(write=False)
    return arr


def relabel_table(table, p):
    """Transport an operation table along the bijection ``x -> p[x]``."""
    p = np.asarray(p)
    q = np.argsort(p)
    return p[table[q[:, None], q[None, :]]]


def canonical_tables(tables, max_order=8):
    """Lexicographically least relabeling of a tuple of operation tables over
    all bijections fixing 0.

    Returns ``(canonical_tables, perm)`` where ``perm`` maps old labels to new.
    """
    n = tables[0].shape[0]
    if n > max_order:
        raise ValueError(f'canonical form is only supported up to order {max_order}, got {n}')
    P = perms_fixing_zero(n)
    Q = np.argsort(P, axis=1)
    rows = Q[:, :, None]
    cols = Q[:, None, :]
    blocks = []
    for t in tables:
        old = t[rows, cols].reshape(len(P), -1)
        blocks.append(np.take_along_axis(P, old, axis=1))
    keys = np.concatenate(blocks, axis=1)
    cand = np.arange(len(P))
    for col in range(keys.shape[1]):
        vals = keys[cand, col]
        cand = cand[vals == vals.min()]
        if len(cand) == 1:
            break
    best = int(cand[0])
    out = []
    for t in tables:
        c = relabel_table(t, P[best])
        c.setflags(write=False)
        out.append(c)
    return tuple(out), tuple(int(x) for x in P[best])


# group tables ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group as a Cayley table ``op[a, b] = a*b``."""

    op: np.ndarray
    identity: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'op', _as_table(self.op))
        if not 0 <= self.identity < self.n:
            raise FormatError(f'identity {self.identity} out of range')

    @property
    def n(self):
        return self.op.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, GroupTable):
            return NotImplemented
        return self.identity == other.identity and np.array_equal(self.op, other.op)

    def __hash__(self):
        return hash((self.identity, self.op.tobytes()))

    def __repr__(self):
        return f'GroupTable(n={self.n}, identity={self.identity})'

    def mul(self, a, b):
        return int(self.op[a, b])

    @functools.cached_property
    def inverse(self):
        e = self.identity
        inv = np.full(self.n, -1, dtype=np.int64)
        for a in range(self.n):
            hits = np.flatnonzero(self.op[a] == e)
            if len(hits):
                inv[a] = hits[0]
        inv.setflags(write=False)
        return inv

    def violations(self):
        """Group axioms that fail, as ``(axiom, witness)`` pairs."""
        out = []
        op, n, e = self.op, self.n, self.identity
        r = np.arange(n)
        lhs = op[op[:, :, None], r[None, None, :]]
        rhs = op[r[:, None, None], op[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            out.append(('associativity', tuple(int(x) for x in bad[0])))
        if not (np.array_equal(op[e], r) and np.array_equal(op[:, e], r)):
            a = int(np.flatnonzero((op[e] != r) | (op[:, e] != r))[0])
            out.append(('identity', (a,)))
        for a in range(n):
            row_ok = (op[a] == e).any()
            col_ok = (op[:, a] == e).any()
            if not (row_ok and col_ok):
                out.append(('inverses', (a,)))
                break
        return out

    def is_group(self):
        return not self.violations()

    def is_abelian(self):
        return np.array_equal(self.op, self.op.T)

    def opposite(self):
        return GroupTable(self.op.T.copy(), self.identity)

    def relabeled(self, p):
        """The isomorphic table obtained by renaming ``x`` to ``p[x]``."""
        return GroupTable(relabel_table(self.op, p), int(p[self.identity]))

    def with_identity_zero(self):
        if self.identity == 0:
            return self
        p = list(range(self.n))
        p[0], p[self.identity] = self.identity, 0
        return self.relabeled(p)

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = int(self.op[x, a])
            k += 1
        return k

    def center(self):
        op = self.op
        return frozenset(a for a in range(self.n) if np.array_equal(op[a], op[:, a]))

    def commutator(self, x, y):
        """``x y x^-1 y^-1``."""
        op, inv = self.op, self.inverse
        return int(op[op[op[x, y], inv[x]], inv[y]])

    def upper_central_series(self):
        """``[Z_0, Z_1, ...]`` as frozensets, stopping at stabilization."""
        terms = [frozenset([self.identity])]
        while True:
            prev = terms[-1]
            nxt = frozenset(g for g in range(self.n)
                            if all(self.commutator(g, x) in prev for x in range(self.n)))
            if nxt == prev:
                return terms
            terms.append(nxt)

    def automorphisms(self):
        """All automorphisms as an array of permutations (identity must be 0).

        Brute force over bijections fixing 0; intended for ``n <= 8``.
        """
        if self.identity != 0:
            raise ValueError('automorphisms() expects identity 0')
        P = perms_fixing_zero(self.n)
        op = self.op
        lhs = np.take_along_axis(P, np.broadcast_to(op.reshape(1, -1), (len(P), op.size)), axis=1)
        rhs = op[P[:, :, None], P[:, None, :]].reshape(len(P), -1)
        return P[(lhs == rhs).all(axis=1)]

    def canonical_form(self):
        (t,), _ = canonical_tables((self.op,))
        return GroupTable(t, 0)


# standard groups ------------------------------------------------------------

def cyclic_group(n):
    r = np.arange(n)
    return GroupTable((r[:, None] + r[None, :]) % n)


def group_from_permutations(elements):
    """Cayley table of a list of permutations closed under composition.

    The identity permutation must be present; it gets its list position as
    identity index.
    """
    elements = [tuple(p) for p in elements]
    index = {p: i for i, p in enumerate(elements)}
    op = [[index[compose(f, g)] for g in elements] for f in elements]
    e = index[tuple(range(len(elements[0])))]
    return GroupTable(op, e)


def symmetric_group(k):
    """``Sym(k)``; elements are the permutations in lexicographic order, so
    the identity is element 0."""
    return group_from_permutations(itertools.permutations(range(k)))


def dihedral_group(m):
    """Dihedral group of order ``2m`` acting on an ``m``-gon."""
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return group_from_permutations(closure([rot, ref]))


def quaternion_group():
    # regular representation of Q8 from its multiplication rule on +-1,i,j,k
    units = ['1', 'i', 'j', 'k']
    prod = {('1', u): (1, u) for u in units}
    prod.update({(u, '1'): (1, u) for u in units})
    prod.update({('i', 'i'): (-1, '1'), ('j', 'j'): (-1, '1'), ('k', 'k'): (-1, '1'),
                 ('i', 'j'): (1, 'k'), ('j', 'k'): (1, 'i'), ('k', 'i'): (1, 'j'),
                 ('j', 'i'): (-1, 'k'), ('k', 'j'): (-1, 'i'), ('i', 'k'): (-1, 'j')})
    elems = [(s, u) for s in (1, -1) for u in units]
    idx = {x: i for i, x in enumerate(elems)}
    op = []
    for (s1, u1) in elems:
        row = []
        for (s2, u2) in elems:
            s, u = prod[(u1, u2)]
            row.append(idx[(s * s1 * s2, u)])
        op.append(row)
    return GroupTable(op, 0)


def direct_product(g, h):
    g, h = g.with_identity_zero(), h.with_identity_zero()
    n, m = g.n, h.n
    op = np.empty((n * m, n * m), dtype=np.int64)
    for a, b, c, d in itertools.product(range(n), range(m), range(n), range(m)):
        op[a * m + b, c * m + d] = g.op[a, c] * m + h.op[b, d]
    return GroupTable(op, 0)


def closure(generators, identity=None):
    """Elements of the permutation group generated by ``generators``, in
    breadth-first order starting from the identity."""
    generators = [tuple(int(x) for x in g) for g in generators]
    if identity is None:
        identity = tuple(range(len(generators[0])))
    seen = {identity: 0}
    order = [identity]
    i = 0
    while i < len(order):
        x = order[i]
        for g in generators:
            y = compose(x, g)
            if y not in seen:
                seen[y] = len(order)
                order.append(y)
        i += 1
    return order
