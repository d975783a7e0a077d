"""Left ideals, ideals, quotients, socle, annihilator and ascending series."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .braces import FiniteSkewBrace
from .errors import PreconditionError


@dataclass(frozen=True, eq=False)
class ElementSubset:
    """A subset of a brace carrier.  Equality ignores the parent brace and
    also holds against plain sets with the same members."""

    members: frozenset
    brace: FiniteSkewBrace = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'members', frozenset(int(x) for x in self.members))

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def __eq__(self, other):
        if isinstance(other, (ElementSubset, set, frozenset)):
            return self.members == _members(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other):
        return self.members <= _members(other)

    def __lt__(self, other):
        return self.members < _members(other)

    @property
    def bits(self):
        return sum(1 << x for x in self.members)

    def sorted(self):
        return sorted(self.members)

    def __str__(self):
        return '{' + ', '.join(map(str, self.sorted())) + '}'


def _members(s):
    if isinstance(s, ElementSubset):
        return s.members
    return frozenset(int(x) for x in s)


def subset(b, members):
    return ElementSubset(frozenset(members), b)


@dataclass(frozen=True)
class AscendingSeries:
    terms: tuple

    @property
    def length(self):
        return len(self.terms) - 1

    @property
    def top(self):
        return self.terms[-1]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]


# predicates -----------------------------------------------------------------

def is_additive_subgroup(b, s):
    s = _members(s)
    if 0 not in s:
        return False
    idx = np.array(sorted(s))
    return set(b.add[idx[:, None], idx[None, :]].ravel().tolist()) <= s \
        and set(b.neg[idx].tolist()) <= s


def is_left_ideal(b, s):
    """Additive subgroup invariant under every ``lambda_a``.

    Such a subset is automatically closed under ``o``; that consequence is
    asserted.
    """
    s = _members(s)
    if not is_additive_subgroup(b, s):
        return False
    idx = np.array(sorted(s))
    if not set(b.lam[:, idx].ravel().tolist()) <= s:
        return False
    assert set(b.mul[idx[:, None], idx[None, :]].ravel().tolist()) <= s, \
        'left ideal not closed under o'
    return True


def _normal(op, inv, s, n):
    idx = np.array(sorted(s))
    g = np.arange(n)
    conj = op[op[g[:, None], idx[None, :]], inv[g][:, None]]
    return set(conj.ravel().tolist()) <= s


def is_ideal(b, s):
    s = _members(s)
    return is_left_ideal(b, s) and _normal(b.add, b.neg, s, b.n) \
        and _normal(b.mul, b.inv, s, b.n)


# closures -------------------------------------------------------------------

def additive_closure(b, seed):
    """Additive subgroup generated by ``seed``."""
    s = set(_members(seed)) | {0}
    frontier = list(s)
    gens = list(s)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = int(b.add[x, g])
                if y not in s:
                    s.add(y)
                    new.append(y)
        frontier = new
    return frozenset(s)


def ideal_closure(b, seed):
    """Smallest ideal containing ``seed``.

    Alternates additive-subgroup closure with lambda-images, additive and
    multiplicative conjugates and star-products on both sides until nothing
    changes.
    """
    n = b.n
    g = np.arange(n)
    s = additive_closure(b, seed)
    while True:
        idx = np.array(sorted(s))
        images = set(s)
        images.update(b.lam[:, idx].ravel().tolist())
        images.update(b.add[b.add[g[:, None], idx[None, :]], b.neg[g][:, None]].ravel().tolist())
        images.update(b.mul[b.mul[g[:, None], idx[None, :]], b.inv[g][:, None]].ravel().tolist())
        images.update(b.star_table[:, idx].ravel().tolist())
        images.update(b.star_table[idx, :].ravel().tolist())
        nxt = additive_closure(b, images)
        if nxt == s:
            return ElementSubset(s, b)
        s = nxt


# quotients ------------------------------------------------------------------

def cosets(b, i):
    """Additive cosets ``a + I`` ordered by least element, plus the
    projection array."""
    i = sorted(_members(i))
    proj = np.full(b.n, -1, dtype=np.int64)
    reps = []
    for a in range(b.n):
        if proj[a] >= 0:
            continue
        k = len(reps)
        reps.append(a)
        proj[b.add[a, i]] = k
    return reps, proj


def quotient(b, i):
    """``B/I`` with its projection.

    Coset ``k`` is the one whose least element is the ``k``-th smallest
    coset representative, so the zero coset is 0.
    """
    i = _members(i)
    if not is_ideal(b, i):
        raise PreconditionError('quotient needs an ideal')
    reps, proj = cosets(b, i)
    ii = np.array(sorted(i))
    for a in reps:
        if set(b.add[a, ii].tolist()) != set(b.mul[a, ii].tolist()):
            raise AssertionError(f'a + I ≠ a o I for a = {a}')
    r = np.array(reps)
    add = proj[b.add[r[:, None], r[None, :]]]
    mul = proj[b.mul[r[:, None], r[None, :]]]
    proj.setflags(write=False)
    return FiniteSkewBrace(add, mul), proj


def preimage(proj, s):
    s = _members(s)
    return frozenset(int(a) for a in np.flatnonzero(np.isin(proj, sorted(s))))


# distinguished ideals -------------------------------------------------------

def _additive_center(b):
    add = b.add
    return frozenset(a for a in range(b.n) if np.array_equal(add[a], add[:, a]))


def socle(b):
    """``Ker(lambda) ∩ Z(B,+)``."""
    r = np.arange(b.n)
    ker = {a for a in range(b.n) if np.array_equal(b.lam[a], r)}
    return ElementSubset(ker & _additive_center(b), b)


def annihilator(b):
    """``Soc(B) ∩ Z(B,o)``."""
    mul = b.mul
    return ElementSubset({a for a in socle(b).members
                          if np.array_equal(mul[a], mul[:, a])}, b)


def derived_ideal(b):
    """Additive subgroup generated by all ``a * c``."""
    return ElementSubset(additive_closure(b, b.star_table.ravel().tolist()), b)


def _upper_series(b, operator):
    terms = [frozenset([0])]
    while True:
        q, proj = quotient(b, terms[-1])
        nxt = preimage(proj, operator(q).members)
        if nxt == terms[-1]:
            return AscendingSeries(tuple(ElementSubset(t, b) for t in terms))
        terms.append(nxt)


def upper_annihilator_series(b):
    return _upper_series(b, annihilator)


def upper_socle_series(b):
    return _upper_series(b, socle)


def is_annihilator_nilpotent(b):
    return len(upper_annihilator_series(b).top) == b.n


# all ideals -----------------------------------------------------------------

def additive_subgroups(b):
    """Every subgroup of ``(B,+)``, found by adjoining one element at a time."""
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        new = []
        for h in frontier:
            for x in range(b.n):
                if x in h:
                    continue
                k = additive_closure(b, h | {x})
                if k not in found:
                    found.add(k)
                    new.append(k)
        frontier = new
    return found


def _joins_of_principal_ideals(b):
    principal = {ideal_closure(b, [x]).members for x in range(b.n)}
    found = set(principal)
    frontier = list(principal)
    while frontier:
        new = []
        for i in frontier:
            for j in principal:
                k = ideal_closure(b, i | j).members
                if k not in found:
                    found.add(k)
                    new.append(k)
        frontier = new
    return found


def all_ideals(b, method=None, max_subgroup_order=12):
    """All ideals, sorted by bit pattern.

    ``method='subgroups'`` tests every additive subgroup (default for
    ``n <= max_subgroup_order``); ``method='closure'`` takes joins of the
    ideals generated by single elements.
    """
    if method is None:
        method = 'subgroups' if b.n <= max_subgroup_order else 'closure'
    if method == 'subgroups':
        sets = [s for s in additive_subgroups(b) if is_ideal(b, s)]
    elif method == 'closure':
        sets = _joins_of_principal_ideals(b)
    else:
        raise ValueError(f'unknown method {method!r}')
    return sorted((ElementSubset(s, b) for s in sets), key=lambda s: s.bits)


def is_simple(b):
    """No ideals besides ``{0}`` and ``B``; the one-element brace is not
    simple."""
    return b.n > 1 and len(all_ideals(b)) == 2


# conjugates and socle multiples ---------------------------------------------

def conjugates(b, x):
    """``g * x``, ``x * g``, ``g o x o g^-1`` and ``g + x - g`` over all ``g``."""
    g = np.arange(b.n)
    out = set(b.star_table[:, x].tolist())
    out.update(b.star_table[x, :].tolist())
    out.update(b.mul[b.mul[g, x], b.inv[g]].tolist())
    out.update(b.add[b.add[g, x], b.neg[g]].tolist())
    return ElementSubset(out, b)


def multiple(b, k, s):
    """``k*s`` as a ``k``-fold additive sum."""
    x = 0
    for _ in range(k):
        x = int(b.add[x, s])
    return x


def socle_multiples(b, k):
    if k < 1:
        raise ValueError('k must be positive')
    return ElementSubset({multiple(b, k, s) for s in socle(b).members}, b)
