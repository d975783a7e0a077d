"""Finite skew braces given by an addition table and a multiplication table.

Both groups have identity 0.  ``lam[a, b]`` is ``-a + a o b``; since
``lam[a]`` is a permutation, ``lam[a][lam[b]]`` is the composite
``lambda_a . lambda_b``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from .errors import FormatError
from .groups import GroupTable, _as_table, relabel_table
from .solutions import SolutionTable


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ''

    def __str__(self):
        w = ', '.join(map(str, self.witness))
        s = f'{self.axiom}: {self.detail}' if self.detail else self.axiom
        return f'{s} (witness {w})' if self.witness else s


@dataclass
class VerificationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def axioms(self):
        return [v.axiom for v in self.violations]

    def __str__(self):
        if self.ok:
            return 'skew brace: all axioms hold'
        return '\n'.join(str(v) for v in self.violations)


def _first(mask):
    bad = np.argwhere(mask)
    return tuple(int(x) for x in bad[0]) if len(bad) else None


def _find_identity(op):
    r = np.arange(op.shape[0])
    for e in range(op.shape[0]):
        if np.array_equal(op[e], r) and np.array_equal(op[:, e], r):
            return e
    return None


def _inverses(op, e):
    inv = np.full(op.shape[0], -1, dtype=np.int64)
    if e is None:
        return inv
    for a in range(op.shape[0]):
        hits = np.flatnonzero(op[a] == e)
        if len(hits):
            inv[a] = hits[0]
    return inv


class FiniteSkewBrace:
    """Carrier ``{0..n-1}`` with tables ``add`` and ``mul``.

    Construction only checks table shapes; call :func:`verify` to check the
    skew brace axioms.
    """

    def __init__(self, add, mul):
        self.add = _as_table(add, 'add')
        self.mul = _as_table(mul, 'mul')
        if self.add.shape != self.mul.shape:
            raise FormatError(f'add and mul tables differ in size: '
                              f'{self.add.shape[0]} vs {self.mul.shape[0]}')

    @property
    def n(self):
        return self.add.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, FiniteSkewBrace):
            return NotImplemented
        return np.array_equal(self.add, other.add) and np.array_equal(self.mul, other.mul)

    def __hash__(self):
        return hash((self.add.tobytes(), self.mul.tobytes()))

    def __repr__(self):
        return f'FiniteSkewBrace(n={self.n})'

    @functools.cached_property
    def neg(self):
        v = _inverses(self.add, 0)
        v.setflags(write=False)
        return v

    @functools.cached_property
    def inv(self):
        v = _inverses(self.mul, 0)
        v.setflags(write=False)
        return v

    @functools.cached_property
    def lam(self):
        if (self.neg < 0).any():
            raise ValueError('lambda is undefined: (B,+) has no inverses with identity 0')
        v = self.add[self.neg[:, None], self.mul]
        v.setflags(write=False)
        return v

    def sub(self, a, b):
        """``a - b``."""
        return int(self.add[a, self.neg[b]])

    def lambda_of(self, a):
        return tuple(int(x) for x in self.lam[a])

    def star(self, a, c):
        return int(self.add[self.lam[a, c], self.neg[c]])

    @functools.cached_property
    def star_table(self):
        v = self.add[self.lam, self.neg[None, :]]
        v.setflags(write=False)
        return v

    def additive_group(self):
        return GroupTable(self.add, 0)

    def multiplicative_group(self):
        return GroupTable(self.mul, 0)

    def is_trivial(self):
        return bool(np.array_equal(self.add, self.mul))

    def relabeled(self, p):
        """Transport along ``x -> p[x]``; ``p`` must fix 0."""
        if int(p[0]) != 0:
            raise ValueError('relabeling must fix 0')
        return FiniteSkewBrace(relabel_table(self.add, p), relabel_table(self.mul, p))


def verify(b):
    """Check every skew brace axiom; collect all violations with witnesses."""
    out = []
    add, mul, n = b.add, b.mul, b.n
    for axiom, w in GroupTable(add, 0).violations():
        out.append(Violation(f'additive group: {axiom}', w))
    e = _find_identity(mul)
    if e is None:
        out.append(Violation('multiplicative group: identity', (), 'no identity element'))
    else:
        if e != 0:
            out.append(Violation('shared identity', (e,), f'0 ≠ {e}'))
        for axiom, w in GroupTable(mul, e).violations():
            out.append(Violation(f'multiplicative group: {axiom}', w))
    if any(v.axiom.startswith('additive group') for v in out):
        return VerificationReport(out)

    neg = b.neg
    r = np.arange(n)
    a_, b_, c_ = r[:, None, None], r[None, :, None], r[None, None, :]
    lhs = mul[a_, add[b_, c_]]
    rhs = add[add[mul[a_, b_], neg[a_]], mul[a_, c_]]
    w = _first(lhs != rhs)
    if w:
        out.append(Violation('skew distributivity', w, 'a o (b + c) ≠ a o b - a + a o c'))

    lam = b.lam
    for a in range(n):
        if len(np.unique(lam[a])) != n:
            out.append(Violation('lambda bijective', (a,), 'lambda_a is not a permutation'))
            break
    w = _first(lam[a_, add[b_, c_]] != add[lam[a_, b_], lam[a_, c_]])
    if w:
        out.append(Violation('lambda automorphism', w,
                             'lambda_a(b + c) ≠ lambda_a(b) + lambda_a(c)'))
    w = _first(lam[mul[a_, b_], c_] != lam[a_, lam[b_, c_]])
    if w:
        out.append(Violation('lambda homomorphism', w,
                             'lambda_(a o b)(c) ≠ lambda_a(lambda_b(c))'))
    return VerificationReport(out)


def is_skew_brace(b):
    return verify(b).ok


def lambda_of(b, a):
    if not 0 <= a < b.n:
        raise IndexError(f'element {a} out of range')
    return b.lambda_of(a)


def star(b, a, c):
    if not (0 <= a < b.n and 0 <= c < b.n):
        raise IndexError('element out of range')
    return b.star(a, c)


def make_trivial(g):
    g = g.with_identity_zero()
    return FiniteSkewBrace(g.op, g.op)


def make_almost_trivial(g):
    g = g.with_identity_zero()
    return FiniteSkewBrace(g.op.T, g.op)


def semidirect(b):
    """``(B,+) x| (B,o)`` with ``(a,b)(c,d) = (a + lambda_b(c), b o d)``.

    The pair ``(a, b)`` is element ``a * n + b``; ``(0, 0)`` is the identity.
    """
    n = b.n
    a, bb, c, d = np.meshgrid(*(np.arange(n),) * 4, indexing='ij')
    first = b.add[a, b.lam[bb, c]]
    second = b.mul[bb, d]
    op = (first * n + second).reshape(n * n, n * n)
    return GroupTable(op, 0)


def solution_from_brace(b):
    """``r_B(a, c) = (lambda_a(c), lambda_a(c)^-1 o a o c)``."""
    left = b.lam
    right = b.mul[b.inv[left], b.mul]
    return SolutionTable(left.copy(), right)


# identity checks over all pairs / triples; each returns the first failing
# witness or None

def check_identity_pack(b):
    """``a + c = a o lambda_a^-1(c)``, ``a o c = a + lambda_a(c)`` and
    ``-a = lambda_a(a^-1)``."""
    n, lam = b.n, b.lam
    lam_inv = np.argsort(lam, axis=1)
    r = np.arange(n)
    w = _first(b.add != b.mul[r[:, None], lam_inv])
    if w:
        return 'a + c = a o lambda_a^-1(c)', w
    w = _first(b.mul != b.add[r[:, None], lam])
    if w:
        return 'a o c = a + lambda_a(c)', w
    w = _first(b.neg != lam[r, b.inv])
    if w:
        return '-a = lambda_a(a^-1)', w
    return None


def check_lambda_homomorphism(b):
    n, lam, mul = b.n, b.lam, b.mul
    for a in range(n):
        for c in range(n):
            if not np.array_equal(lam[mul[a, c]], lam[a][lam[c]]):
                return 'lambda_(a o c) = lambda_a lambda_c', (a, c)
    return None


def check_star_identities(b):
    """``a*(c+d) = a*c + c + a*d - c`` and
    ``(a o c)*d = a*(c*d) + c*d + a*d``."""
    n, add, mul, neg, st = b.n, b.add, b.mul, b.neg, b.star_table
    r = np.arange(n)
    a, c, d = r[:, None, None], r[None, :, None], r[None, None, :]
    lhs = st[a, add[c, d]]
    rhs = add[add[add[st[a, c], c], st[a, d]], neg[c]]
    w = _first(lhs != rhs)
    if w:
        return 'a*(c+d) = a*c + c + a*d - c', w
    lhs = st[mul[a, c], d]
    rhs = add[add[st[a, st[c, d]], st[c, d]], st[a, d]]
    w = _first(lhs != rhs)
    if w:
        return '(a o c)*d = a*(c*d) + c*d + a*d', w
    return None


def check_semidirect_commutator(b, g=None):
    """``[(0,a),(c,0)] = (a*c, 0)`` in the semidirect product."""
    g = semidirect(b) if g is None else g
    n = b.n
    for a in range(n):
        for c in range(n):
            if g.commutator(a, c * n) != b.star(a, c) * n:
                return '[(0,a),(c,0)] = (a*c,0)', (a, c)
    return None
