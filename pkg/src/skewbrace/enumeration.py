"""Brute-force enumeration of small groups, skew braces and solutions.

Groups are found by building the left regular representation row by row:
row ``a`` is the permutation ``x -> a*x``, and rows must be closed under
composition (``L_a L_c = L_{a*c}``).  Skew braces with a given additive
group ``A`` are the regular subgroups of the holomorph ``A x| Aut(A)``; the
naive method instead pairs every labeled group table with every other and
keeps the skew-distributive pairs.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .braces import FiniteSkewBrace, verify
from .groups import GroupTable, canonical_tables, compose, perms_fixing_zero
from .solutions import SolutionTable

MAX_ORDER = 8
MAX_SOLUTION_SIZE = 3


def _check_order(n, hi, what='order'):
    if not 1 <= n <= hi:
        raise ValueError(f'{what} must be between 1 and {hi}, got {n}')


# groups ---------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _fixed_point_free(n, e):
    """Permutations ``p`` of ``range(n)`` with ``p[0] == e`` and no fixed points."""
    out = []
    for p in itertools.permutations(range(n)):
        if p[0] == e and all(p[i] != i for i in range(n)):
            out.append(p)
    return out


def _semiregular(n, d):
    """``(0 1 .. d-1)(d .. 2d-1)...``."""
    p = list(range(n))
    for start in range(0, n, d):
        for k in range(d):
            p[start + k] = start + (k + 1) % d
    return tuple(p)


def _close_rows(rows):
    rows = list(rows)
    n = len(rows)
    ident = tuple(range(n))
    defined = [a for a in range(n) if rows[a] is not None]
    pending = list(defined)
    while pending:
        new = []
        for a in pending:
            for c in list(defined):
                for p in (compose(rows[a], rows[c]), compose(rows[c], rows[a])):
                    e = p[0]
                    if rows[e] is None:
                        if any(p[i] == i for i in range(n)):
                            return None
                        rows[e] = p
                        defined.append(e)
                        new.append(e)
                    elif rows[e] != p:
                        return None
                    if e == 0 and p != ident:
                        return None
        pending = new
    return rows


def _group_tables(n, labeled):
    ident = tuple(range(n))
    found = []

    def rec(rows):
        free = [a for a in range(n) if rows[a] is None]
        if not free:
            found.append(GroupTable([list(r) for r in rows], 0))
            return
        e = free[0]
        defined = [r for r in rows if r is not None]
        if not labeled and e == 1:
            cands = [_semiregular(n, d) for d in range(2, n + 1) if n % d == 0]
        else:
            cands = [p for p in _fixed_point_free(n, e)
                     if all(p[i] != r[i] for r in defined for i in range(n))]
        for p in cands:
            trial = list(rows)
            trial[e] = p
            closed = _close_rows(trial)
            if closed is not None:
                rec(closed)

    rec([ident] + [None] * (n - 1))
    return found


@functools.lru_cache(maxsize=None)
def all_group_tables(n):
    """Every group table on ``{0..n-1}`` with identity 0 (labeled, no
    isomorphism reduction).  Feasible for ``n <= 5``."""
    _check_order(n, 5)
    tables = _group_tables(n, labeled=True)
    return tuple(sorted(tables, key=lambda g: g.op.tobytes()))


@functools.lru_cache(maxsize=None)
def enumerate_groups(n):
    """One group table per isomorphism class of order ``n``, each in
    canonical form, sorted by table."""
    _check_order(n, MAX_ORDER)
    seen = {}
    for g in _group_tables(n, labeled=False):
        c = g.canonical_form()
        seen.setdefault(c.op.tobytes(), c)
    return tuple(seen[k] for k in sorted(seen))


# isomorphism of braces ------------------------------------------------------

def canonical_form(b):
    """Lexicographically least ``(add, mul)`` over all relabelings fixing 0."""
    if b.n > MAX_ORDER:
        raise ValueError(f'canonical_form supports order <= {MAX_ORDER}, got {b.n}')
    (add, mul), _ = canonical_tables((b.add, b.mul), MAX_ORDER)
    return FiniteSkewBrace(add, mul)


def _key(b):
    return (b.add.tobytes(), b.mul.tobytes())


def are_isomorphic(b1, b2):
    if b1.n != b2.n:
        raise ValueError(f'orders differ: {b1.n} vs {b2.n}')
    return canonical_form(b1) == canonical_form(b2)


def find_isomorphism(b1, b2):
    """A bijection ``p`` with ``b1.relabeled(p) == b2``, or None.  Brute force."""
    if b1.n != b2.n:
        return None
    for p in perms_fixing_zero(b1.n):
        if b1.relabeled(p) == b2:
            return tuple(int(x) for x in p)
    return None


# skew braces ----------------------------------------------------------------

@dataclass(frozen=True)
class BraceCatalog:
    order: int
    braces: tuple
    method: str

    def __len__(self):
        return len(self.braces)

    def __iter__(self):
        return iter(self.braces)

    def __getitem__(self, i):
        return self.braces[i]


def _perm_order(p):
    ident = tuple(range(len(p)))
    k, q = 1, p
    while q != ident:
        q = compose(q, p)
        k += 1
    return k


def regular_subgroups(a):
    """Lambda maps ``x -> phi_x`` whose graph ``{(x, phi_x)}`` is a regular
    subgroup of the holomorph of the group ``a`` (identity 0)."""
    n, op = a.n, a.op.tolist()
    auts = [tuple(int(v) for v in p) for p in a.automorphisms()]
    auts = [p for p in auts if n % _perm_order(p) == 0]
    found = set()

    def close(lmap, x, phi):
        lmap = dict(lmap)
        lmap[x] = phi
        pending = [x]
        while pending:
            new = []
            for u in pending:
                for v in list(lmap):
                    for (s, ps), (t, pt) in (((u, lmap[u]), (v, lmap[v])),
                                             ((v, lmap[v]), (u, lmap[u]))):
                        w = op[s][ps[t]]
                        pw = compose(ps, pt)
                        old = lmap.get(w)
                        if old is None:
                            lmap[w] = pw
                            new.append(w)
                        elif old != pw:
                            return None
            pending = new
        return lmap

    def rec(lmap):
        if len(lmap) == n:
            found.add(tuple(lmap[x] for x in range(n)))
            return
        x = min(set(range(n)) - lmap.keys())
        for phi in auts:
            nxt = close(lmap, x, phi)
            if nxt is not None:
                rec(nxt)

    rec({0: tuple(range(n))})
    return sorted(found)


def brace_from_lambda(a, lam):
    """``x o y = x + lambda_x(y)``."""
    lam = np.asarray(lam, dtype=np.int64)
    r = np.arange(a.n)
    return FiniteSkewBrace(a.op, a.op[r[:, None], lam])


def _holomorph_braces(n):
    out = []
    for a in enumerate_groups(n):
        for lam in regular_subgroups(a):
            out.append(brace_from_lambda(a, lam))
    return out


def _naive_braces(n):
    tables = all_group_tables(n)
    out = []
    for g in tables:
        for h in tables:
            b = FiniteSkewBrace(g.op, h.op)
            if verify(b).ok:
                out.append(b)
    return out


@functools.lru_cache(maxsize=None)
def enumerate_skew_braces(n, method='holomorph'):
    """All skew braces of order ``n`` up to isomorphism, in canonical form."""
    if method == 'holomorph':
        _check_order(n, MAX_ORDER)
        raw = _holomorph_braces(n)
    elif method == 'naive':
        _check_order(n, 4)
        raw = _naive_braces(n)
    else:
        raise ValueError(f'unknown method {method!r}')
    seen = {}
    for b in raw:
        c = canonical_form(b)
        seen.setdefault(_key(c), c)
    braces = tuple(seen[k] for k in sorted(seen))
    for b in braces:
        assert verify(b).ok
    return BraceCatalog(n, braces, method)


# solutions ------------------------------------------------------------------

def _batch_ybe(left, right):
    """YBE test for a stack of solutions; ``left``/``right`` have shape
    ``(N, n, n)``."""
    N, n, _ = left.shape
    k = np.arange(N)
    ok = np.ones(N, dtype=bool)
    for a, b, c in itertools.product(range(n), repeat=3):
        a0 = np.full(N, a)
        b0 = np.full(N, b)
        c0 = np.full(N, c)
        # r12 r23 r12
        x, y, z = left[k, a0, b0], right[k, a0, b0], c0
        x, y, z = x, left[k, y, z], right[k, y, z]
        x, y, z = left[k, x, y], right[k, x, y], z
        # r23 r12 r23
        u, v, w = a0, left[k, b0, c0], right[k, b0, c0]
        u, v, w = left[k, u, v], right[k, u, v], w
        u, v, w = u, left[k, v, w], right[k, v, w]
        ok &= (x == u) & (y == v) & (z == w)
    return ok


def _batch_nondegenerate(left, right):
    n = left.shape[1]
    s = np.sort(left, axis=2)
    t = np.sort(right, axis=1)
    r = np.arange(n)
    return (s == r).all(axis=(1, 2)) & (t == r[:, None]).all(axis=(1, 2))


def _batch_involutive(left, right):
    N, n, _ = left.shape
    k = np.arange(N)[:, None, None]
    l2 = left[k, left, right]
    r2 = right[k, left, right]
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing='ij')
    return (l2 == i).all(axis=(1, 2)) & (r2 == j).all(axis=(1, 2))


def _collect(left, right, nondegenerate, involutive):
    mask = np.ones(len(left), dtype=bool)
    if nondegenerate:
        mask &= _batch_nondegenerate(left, right)
    left, right = left[mask], right[mask]
    if involutive and len(left):
        m = _batch_involutive(left, right)
        left, right = left[m], right[m]
    if len(left):
        m = _batch_ybe(left, right)
        left, right = left[m], right[m]
    return [SolutionTable(l, r) for l, r in zip(left, right)]


def naive_solutions(n, nondegenerate=False, involutive=False, chunk=200_000):
    """Scan every bijection of ``X x X``."""
    _check_order(n, MAX_SOLUTION_SIZE, 'size')
    perms = itertools.permutations(range(n * n))
    out = []
    while True:
        block = np.array(list(itertools.islice(perms, chunk)), dtype=np.int64)
        if not len(block):
            break
        block = block.reshape(-1, n, n)
        out += _collect(block // n, block % n, nondegenerate, involutive)
    return out


def optimized_solutions(n, involutive=False):
    """Non-degenerate solutions, scanning families of permutations
    ``sigma_x`` and ``tau_y`` instead of all bijections."""
    _check_order(n, MAX_SOLUTION_SIZE, 'size')
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    fam = np.array(list(itertools.product(range(len(perms)), repeat=n)), dtype=np.int64)
    families = perms[fam]  # (F, n, n): families[f, x] = sigma_x
    F = len(families)
    si = np.repeat(np.arange(F), F)
    ti = np.tile(np.arange(F), F)
    left = families[si]
    right = np.transpose(families[ti], (0, 2, 1))
    codes = np.sort((left * n + right).reshape(len(left), -1), axis=1)
    bij = (codes == np.arange(n * n)).all(axis=1)
    return _collect(left[bij], right[bij], False, involutive)


def enumerate_solutions(n, require_nondegenerate=False, require_involutive=False,
                        method='auto'):
    """All solutions on ``{0..n-1}`` as raw tables, sorted."""
    _check_order(n, MAX_SOLUTION_SIZE, 'size')
    if method == 'auto':
        method = 'optimized' if require_nondegenerate else 'naive'
    if method == 'optimized':
        if not require_nondegenerate:
            raise ValueError('the optimized generator only produces non-degenerate solutions')
        sols = optimized_solutions(n, require_involutive)
    elif method == 'naive':
        sols = naive_solutions(n, require_nondegenerate, require_involutive)
    else:
        raise ValueError(f'unknown method {method!r}')
    return sorted(sols, key=SolutionTable.key)
