"""Skew brace presentations: generator names plus relator b-words, each
asserted to evaluate to 0."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bwords
from .braces import FiniteSkewBrace
from .bwords import ZERO, Gen, Inv, Neg, Prod, Sum, difference, equation, eval_bword, substitute
from .errors import FormatError, PreconditionError
from .ideals import _members, cosets, is_ideal, quotient


@dataclass(frozen=True)
class SkewBracePresentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(self.relators)
        seen = set()
        for g in gens:
            if not bwords.NAME_RE.match(g):
                raise FormatError(f'invalid generator name {g!r}')
            if g in seen:
                raise FormatError(f'duplicate generator {g!r}')
            seen.add(g)
        for k, w in enumerate(rels):
            extra = bwords.generators_of(w) - seen
            if extra:
                raise FormatError(f'relator {k + 1} uses undeclared generator {sorted(extra)[0]!r}')
        object.__setattr__(self, 'generators', gens)
        object.__setattr__(self, 'relators', rels)

    def __len__(self):
        return len(self.relators)

    def evaluate(self, b, assignment):
        """Value of every relator under ``assignment``."""
        missing = [g for g in self.generators if g not in assignment]
        if missing:
            raise bwords.UnboundGeneratorError(missing[0])
        return [eval_bword(w, b, assignment) for w in self.relators]

    def failures(self, b, assignment):
        """``(index, value)`` for every relator that does not evaluate to 0."""
        return [(k, v) for k, v in enumerate(self.evaluate(b, assignment)) if v != 0]

    def holds_in(self, b, assignment):
        return not self.failures(b, assignment)

    def renamed(self, mapping):
        """Generator-change rewriting: substitute words for generators.

        ``mapping`` sends old names to ``(new_name_or_word)``; the new
        generator list is given by the names appearing in the image words.
        """
        words = {k: bwords.as_word(v) for k, v in mapping.items()}
        rels = tuple(substitute(w, words) for w in self.relators)
        names = []
        for g in self.generators:
            for h in sorted(bwords.generators_of(words.get(g, Gen(g)))):
                if h not in names:
                    names.append(h)
        return SkewBracePresentation(tuple(names), rels)


def table_relators(b, word_of):
    """For each pair ``(a, c)``: ``(a + c) - (a+c)`` and
    ``(a o c) o (a o c)^-1``, with elements spelled by ``word_of``."""
    rels = []
    for a in range(b.n):
        for c in range(b.n):
            rels.append(difference(Sum(word_of(a), word_of(c)), word_of(int(b.add[a, c]))))
            rels.append(Prod(Prod(word_of(a), word_of(c)), Inv(word_of(int(b.mul[a, c])))))
    return rels


def additive_table_relators(b, word_of):
    return [difference(Sum(word_of(a), word_of(c)), word_of(int(b.add[a, c])))
            for a in range(b.n) for c in range(b.n)]


def table_presentation(b):
    """One generator ``g<k>`` per element, the relators of both tables, and
    the relator ``g0``."""
    names = tuple(f'g{a}' for a in range(b.n))
    rels = table_relators(b, lambda a: Gen(names[a]))
    rels.append(Gen(names[0]))
    return SkewBracePresentation(names, tuple(rels)), {g: a for a, g in enumerate(names)}


def trivial_brace_presentation(cyclic_orders):
    """Presentation of the trivial brace on a direct sum of cyclic groups;
    an order of 0 means infinite cyclic."""
    orders = list(cyclic_orders)
    if any(k < 0 for k in orders):
        raise ValueError('cyclic orders must be >= 0')
    names = tuple(f'x{i + 1}' for i in range(len(orders)))
    rels = []
    for x, k in zip(names, orders):
        rels += [bwords.star(x, x), bwords.star(x, Neg(Gen(x))),
                 bwords.star(Neg(Gen(x)), Neg(Gen(x)))]
        if k:
            rels.append(bwords.multiple(k, x))
    for i, xi in enumerate(names):
        for xj in names[i + 1:]:
            rels.append(difference(Sum(Gen(xi), Gen(xj)), Sum(Gen(xj), Gen(xi))))
    for xi in names:
        for xj in names:
            if xi != xj:
                rels += [bwords.star(xi, xj), bwords.star(xi, Neg(Gen(xj)))]
    return SkewBracePresentation(names, tuple(rels))


def sub_brace(b, members):
    """The sub-skew brace on ``members`` relabeled in increasing order."""
    elems = sorted(members)
    pos = {e: k for k, e in enumerate(elems)}
    idx = np.array(elems)
    add = [[pos[int(v)] for v in row] for row in b.add[idx[:, None], idx[None, :]]]
    mul = [[pos[int(v)] for v in row] for row in b.mul[idx[:, None], idx[None, :]]]
    return FiniteSkewBrace(add, mul), elems


@dataclass(frozen=True)
class ExtensionFamilies:
    """Sizes of the relator families emitted by :func:`extend_presentation`."""

    m: int  # non-zero cosets
    n: int  # non-zero ideal elements
    ideal: int  # relators presenting the ideal
    quotient: int  # relators presenting the quotient brace
    quotient_additive: int  # relators presenting the quotient's additive group

    @property
    def total(self):
        return self.m ** 2 + self.m + self.ideal + 4 * self.n * self.m \
            + self.quotient + self.quotient_additive


def extension_family_sizes(order, ideal_order):
    q = order // ideal_order
    m, n = q - 1, ideal_order - 1
    ell = 2 * ideal_order ** 2 + 1
    s = 2 * q ** 2 + 1 if m else 0
    r = q ** 2 + 1 if m else 0
    return ExtensionFamilies(m, n, ell, s, r)


def extend_presentation(b, ideal):
    """Presentation of ``b`` built from presentations of an ideal ``I`` and
    of ``B/I``.

    Generators: ``y1..ym`` name the least elements of the non-zero cosets,
    ``x1..xn`` the non-zero elements of ``I``.  Every element of ``B`` is
    then ``y + x`` for a single coset letter and a single ideal letter, so
    each correction term is one generator (or 0).  Each family is a set of
    equations ``L = R`` turned into relators by :func:`bwords.equation`
    (``L o R^-1`` when ``L`` is multiplicative, ``L - R`` otherwise).  In
    order:

    1. ``y_i o y_j = y + x``
    2. ``y_i^-1 = y + x``
    3. the table presentation of ``I`` in the letters ``x``
    4. ``lambda_{y_j}(x_i) = x``
    5. ``(y_j o x_i) o y_j^-1 = x``
    6. ``(y_j + x_i) - y_j = x``
    7. ``lambda_{y_j^-1}(x_i) = x``
    8. each relator of the table presentation of ``B/I`` lifted to the
       letters ``y``, equal to the ideal element it evaluates to
    9. likewise for the additive table of ``B/I``

    Families 8 and 9 are omitted when ``I = B``.
    """
    members = _members(ideal)
    if not is_ideal(b, members):
        raise PreconditionError('extend_presentation needs an ideal')
    q, proj = quotient(b, members)
    reps, _ = cosets(b, members)
    xs = sorted(members - {0})
    yname = {k: f'y{k}' for k in range(1, len(reps))}
    xname = {e: f'x{k + 1}' for k, e in enumerate(xs)}

    def X(e):
        return Gen(xname[e]) if e else ZERO

    def Y(k):
        return Gen(yname[k]) if k else ZERO

    def split(e):
        t = int(proj[e])
        d = int(b.add[b.neg[reps[t]], e])
        if t and d:
            return Sum(Y(t), X(d))
        return Y(t) if t else X(d)

    ys = range(1, len(reps))
    rels = []
    for i in ys:
        for j in ys:
            rels.append(equation(Prod(Y(i), Y(j)), split(int(b.mul[reps[i], reps[j]]))))
    for i in ys:
        rels.append(equation(Inv(Y(i)), split(int(b.inv[reps[i]]))))

    sub, elems = sub_brace(b, members)
    sub_pres, _ = table_presentation(sub)
    rels += [substitute(w, {f'g{k}': X(e) for k, e in enumerate(elems)})
             for w in sub_pres.relators]

    families = [
        lambda a, y: (bwords.lam(Y(y), X(a)), b.lam[reps[y], a]),
        lambda a, y: (bwords.conj_mul(X(a), Y(y)),
                      b.mul[b.mul[reps[y], a], b.inv[reps[y]]]),
        lambda a, y: (bwords.conj_add(X(a), Y(y)),
                      b.add[b.add[reps[y], a], b.neg[reps[y]]]),
        lambda a, y: (bwords.lam(Inv(Y(y)), X(a)), b.lam[b.inv[reps[y]], a]),
    ]
    for family in families:
        for a in xs:
            for y in ys:
                w, value = family(a, y)
                rels.append(equation(w, X(int(value))))

    assignment = {yname[k]: reps[k] for k in ys}
    assignment.update({xname[e]: e for e in xs})
    if len(reps) > 1:
        lift = {f'g{k}': Y(k) for k in range(q.n)}
        q_pres, _ = table_presentation(q)
        additive = additive_table_relators(q, lambda k: Gen(f'g{k}')) + [Gen('g0')]
        for w in list(q_pres.relators) + additive:
            lifted = substitute(w, lift)
            rels.append(equation(lifted, X(eval_bword(lifted, b, assignment))))

    gens = tuple(yname[k] for k in ys) + tuple(xname[e] for e in xs)
    return SkewBracePresentation(gens, tuple(rels)), assignment
