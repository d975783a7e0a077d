"""The permutation skew brace of a finite non-degenerate solution, and the
defining presentations of its structure group and additive group.

Generators are ``g_x = (sigma_x, tau_x^-1)`` in ``Sym(X) x Sym(X)``,
multiplied componentwise with ``(f*g)(x) = f(g(x))``.  Writing ``f_a`` for
the first component of ``a``, lambda acts on generators by
``lambda_a(g_y) = g_{f_a(y)}``, and the addition is recovered from
``a + g_y = a o g_{f_a^-1(y)}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braces import FiniteSkewBrace, verify
from .bwords import Gen, Inv, Prod, Sum, difference
from .errors import PreconditionError
from .groups import compose, perm_inverse
from .presentations import SkewBracePresentation
from .solutions import extract_diagonal, is_nondegenerate, is_ybe, ybe_witness


@dataclass(frozen=True)
class PermBraceResult:
    brace: FiniteSkewBrace
    labels: tuple  # element -> (first, second) permutation pair
    generator_map: tuple  # x -> element index of g_x
    additive_certificates: tuple  # element -> generator indices y1, y2, ...

    def first(self, a):
        return self.labels[a][0]


def _generator_pairs(sol):
    d = extract_diagonal(sol)
    return [(tuple(int(v) for v in d.sigma[x]), perm_inverse(tuple(int(v) for v in d.tau[x])))
            for x in range(sol.n)]


def permutation_brace(sol):
    if not is_ybe(sol):
        (t, lhs, rhs) = ybe_witness(sol)
        raise PreconditionError(f'not a solution of the YBE: triple {t} gives {lhs} vs {rhs}')
    if not is_nondegenerate(sol):
        raise PreconditionError('solution is degenerate')
    n = sol.n
    gens = _generator_pairs(sol)
    ident = (tuple(range(n)), tuple(range(n)))

    def times(p, q):
        return compose(p[0], q[0]), compose(p[1], q[1])

    # multiplicative closure: identity, generators in index order, then
    # breadth-first right multiplication by generators
    index = {ident: 0}
    labels = [ident]
    for g in gens:
        if g not in index:
            index[g] = len(labels)
            labels.append(g)
    i = 1
    while i < len(labels):
        for g in gens:
            y = times(labels[i], g)
            if y not in index:
                index[y] = len(labels)
                labels.append(y)
        i += 1
    size = len(labels)
    genmap = tuple(index[g] for g in gens)
    mul = np.empty((size, size), dtype=np.int64)
    for a, p in enumerate(labels):
        for c, q in enumerate(labels):
            mul[a, c] = index[times(p, q)]

    finv = [perm_inverse(p[0]) for p in labels]

    def plus_gen(a, y):
        return int(mul[a, genmap[finv[a][y]]])

    # additive closure of the generators from 0, recording one word each
    words = {0: ()}
    order = [0]
    i = 0
    while i < len(order):
        a = order[i]
        for y in range(n):
            c = plus_gen(a, y)
            if c not in words:
                words[c] = words[a] + (y,)
                order.append(c)
        i += 1
    if len(words) != size:
        raise AssertionError('additive closure of the generators is not the whole carrier')

    add = np.empty((size, size), dtype=np.int64)
    for c in range(size):
        for a in range(size):
            x = a
            for y in words[c]:
                x = plus_gen(x, y)
            add[a, c] = x

    brace = FiniteSkewBrace(add, mul)
    report = verify(brace)
    if not report.ok:
        raise AssertionError(f'permutation skew brace failed verification:\n{report}')
    return PermBraceResult(brace, tuple(labels), genmap,
                           tuple(words[a] for a in range(size)))


def _names(n):
    return tuple(f'x{i + 1}' for i in range(n))


def emit_mul_presentation(sol):
    """Relators ``(x o y) o (sigma_x(y) o tau_y(x))^-1`` for every pair."""
    d = extract_diagonal(sol)
    names = _names(sol.n)
    rels = []
    for x in range(sol.n):
        for y in range(sol.n):
            s, t = int(d.sigma[x, y]), int(d.tau[y, x])
            rels.append(Prod(Prod(Gen(names[x]), Gen(names[y])),
                             Inv(Prod(Gen(names[s]), Gen(names[t])))))
    return SkewBracePresentation(names, tuple(rels))


def emit_add_presentation(sol):
    """Relators ``(x + u) - (u + sigma_u(tau_y(x)))`` with ``u = sigma_x(y)``."""
    d = extract_diagonal(sol)
    names = _names(sol.n)
    rels = []
    for x in range(sol.n):
        for y in range(sol.n):
            u = int(d.sigma[x, y])
            v = int(d.sigma[u, d.tau[y, x]])
            rels.append(difference(Sum(Gen(names[x]), Gen(names[u])),
                                   Sum(Gen(names[u]), Gen(names[v]))))
    return SkewBracePresentation(names, tuple(rels))


def image_assignment(pb):
    return {f'x{x + 1}': e for x, e in enumerate(pb.generator_map)}


def check_image_relations(sol, pb):
    a = image_assignment(pb)
    return emit_mul_presentation(sol).holds_in(pb.brace, a) \
        and emit_add_presentation(sol).holds_in(pb.brace, a)


def lambda_on_generators_holds(pb):
    """``lambda_a(g_y) = g_{f_a(y)}`` for every element ``a`` and every ``y``."""
    lam = pb.brace.lam
    for a in range(pb.brace.n):
        f = pb.first(a)
        for y, g in enumerate(pb.generator_map):
            if lam[a, g] != pb.generator_map[f[y]]:
                return False
    return True
