"""Acceptance gate: nine checks, each printing one PASS/FAIL line.

Run under pytest (``pytest tests/test_acceptance.py -s``) or directly with
``python tests/test_acceptance.py``.
"""

import sys
import time
from pathlib import Path

import pytest

from skewbrace import formats
from skewbrace.braces import (
    check_identity_pack,
    check_lambda_homomorphism,
    check_semidirect_commutator,
    check_star_identities,
    make_trivial,
    semidirect,
    solution_from_brace,
    verify,
)
from skewbrace.bwords import Gen, Inv, Prod
from skewbrace.cli import run
from skewbrace.enumeration import (
    enumerate_groups,
    enumerate_skew_braces,
    enumerate_solutions,
    naive_solutions,
)
from skewbrace.groups import cyclic_group
from skewbrace.ideals import (
    all_ideals,
    conjugates,
    is_ideal,
    socle,
    socle_multiples,
    upper_annihilator_series,
)
from skewbrace.presentations import extend_presentation, table_presentation, trivial_brace_presentation
from skewbrace.solutions import is_nondegenerate, is_ybe, make_flip
from skewbrace.structure import check_image_relations, emit_mul_presentation, permutation_brace

DATA = Path(__file__).parent / 'data'


def catalog(max_order):
    for n in range(1, max_order + 1):
        yield from enumerate_skew_braces(n)


def criterion_1():
    """Axiom battery on the catalog, orders 1..6, under 2 minutes."""
    checked = 0
    for b in catalog(6):
        report = verify(b)
        assert report.ok, report
        for check in (check_identity_pack, check_star_identities, check_lambda_homomorphism):
            assert check(b) is None, (b, check(b))
        assert check_semidirect_commutator(b, semidirect(b)) is None
        checked += 1
    return 120, f'{checked} braces'


def criterion_2():
    """Naive and holomorph enumeration agree for n <= 4; counts 1, 1, 1."""
    for n in range(1, 5):
        naive = enumerate_skew_braces(n, 'naive')
        holo = enumerate_skew_braces(n, 'holomorph')
        assert naive.braces == holo.braces, n
    counts = [len(enumerate_skew_braces(n, 'naive')) for n in (1, 2, 3)]
    assert counts == [1, 1, 1], counts
    for n in (1, 2, 3):
        assert enumerate_skew_braces(n, 'naive')[0].is_trivial()
    return None, f'counts n<=4: {[len(enumerate_skew_braces(n)) for n in range(1, 5)]}'


def criterion_3():
    """solution_from_brace is a non-degenerate solution for every brace of order <= 6."""
    k = 0
    for b in catalog(6):
        sol = solution_from_brace(b)
        assert is_ybe(sol) and is_nondegenerate(sol), b
        k += 1
    return None, f'{k} solutions'


def criterion_4():
    """Structure-brace soundness for every non-degenerate solution with |X| <= 3."""
    for n in (1, 2):
        naive = set(naive_solutions(n, nondegenerate=True))
        opt = set(enumerate_solutions(n, require_nondegenerate=True))
        assert naive == opt, n
    k = 0
    for n in (1, 2, 3):
        for sol in enumerate_solutions(n, require_nondegenerate=True):
            pb = permutation_brace(sol)
            assert verify(pb.brace).ok
            assert check_image_relations(sol, pb), sol
            k += 1
    return 300, f'{k} solutions'


def criterion_5():
    """Every emitted relator evaluates to 0, orders <= 6."""
    ext = tab = 0
    for b in catalog(6):
        for i in all_ideals(b):
            if len(i) in (1, b.n):
                continue
            p, a = extend_presentation(b, i)
            assert p.holds_in(b, a), (b, i, p.failures(b, a))
            ext += 1
        p, a = table_presentation(b)
        assert p.holds_in(b, a), b
        tab += 1
    for k in range(1, 9):
        p = trivial_brace_presentation([k])
        assert p.holds_in(make_trivial(cyclic_group(k)), {'x1': 1 % k}), k
    return 180, f'{ext} extensions, {tab} table presentations, 8 cyclic'


def criterion_6():
    """Socle conjugation identity, socle multiples are ideals, conjugate sets."""
    sizes = []
    for b in catalog(6):
        for c in socle(b):
            for a in range(b.n):
                assert b.lam[a, c] == b.mul[b.mul[a, c], b.inv[a]], (b, a, c)
        for k in range(1, 7):
            assert is_ideal(b, socle_multiples(b, k)), (b, k)
        sizes.append(max(len(conjugates(b, x)) for x in range(b.n)))
    return None, f'largest conjugate set {max(sizes)}'


def criterion_7():
    """Upper annihilator series of trivial braces is the upper central series."""
    k = 0
    for n in range(1, 9):
        for g in enumerate_groups(n):
            b = make_trivial(g)
            series = [set(t) for t in upper_annihilator_series(b)]
            assert series == [set(t) for t in g.upper_central_series()], g
            if g.is_abelian():
                expect = [{0}] if n == 1 else [{0}, set(range(n))]
                assert series == expect, g
            k += 1
    return None, f'{k} groups'


def criterion_8():
    """The flip collapses to the one-element brace; its relators are commutations."""
    for n in range(1, 5):
        f = make_flip(n)
        pb = permutation_brace(f)
        assert pb.brace.n == 1
        rels = emit_mul_presentation(f).relators
        names = [Gen(f'x{i + 1}') for i in range(n)]
        expect = tuple(Prod(Prod(names[i], names[j]), Inv(Prod(names[j], names[i])))
                       for i in range(n) for j in range(n))
        assert rels == expect
    return None, 'n = 1..4'


def _malformed():
    out = []
    for p in sorted((DATA / 'malformed').iterdir()):
        if p.suffix == '.sol':
            out.append((p, ['verify-solution', str(p)]))
        elif p.suffix == '.brc':
            out.append((p, ['verify-brace', str(p)]))
        elif p.suffix == '.prs':
            out.append((p, ['check-presentation', str(p), '--in', str(DATA / 'z2.brc'),
                            '--assign', 'x1=1']))
    return out


def criterion_9():
    """Byte-exact round trips of all five formats; malformed fixtures give status 2."""
    def same(dump, parse, obj):
        text = dump(obj)
        assert dump(parse(text)) == text
    same(formats.dump_solution, formats.parse_solution, make_flip(2))
    for sol in enumerate_solutions(3, require_nondegenerate=True):
        same(formats.dump_solution, formats.parse_solution, sol)
    for b in catalog(6):
        same(formats.dump_brace, formats.parse_brace, b)
        same(formats.dump_presentation, formats.parse_presentation, table_presentation(b)[0])
    for n in range(1, 7):
        same(formats.dump_catalog, formats.parse_catalog, enumerate_skew_braces(n))
    for sol in enumerate_solutions(3, require_nondegenerate=True):
        pb = permutation_brace(sol)
        text = formats.dump_perm_brace(pb)
        b, labels = formats.parse_perm_brace(text)
        assert b == pb.brace and labels == pb.labels
    assert (DATA / 'flip2.sol').read_text() == formats.dump_solution(make_flip(2))
    fixtures = _malformed()
    assert len(fixtures) >= 10
    for path, cmd in fixtures:
        r = run(cmd)
        assert r.status == 2, (path.name, r.status, r.report)
    return None, f'{len(fixtures)} malformed fixtures rejected'


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def evaluate(fn):
    """Run one criterion; returns ``(ok, line)``."""
    k = fn.__name__.split('_')[1]
    t0 = time.perf_counter()
    try:
        limit, detail = fn()
        ok = True
    except AssertionError as e:
        limit, detail, ok = None, f'assertion failed: {e}'[:300], False
    elapsed = time.perf_counter() - t0
    if ok and limit is not None and elapsed > limit:
        ok, detail = False, f'{detail}; took {elapsed:.1f}s, limit {limit}s'
    status = 'PASS' if ok else 'FAIL'
    return ok, f'criterion {k}: {status} ({detail}; {elapsed:.2f}s) {fn.__doc__}'


@pytest.mark.parametrize('fn', CRITERIA, ids=lambda f: f.__name__)
def test_criterion(fn, capsys):
    ok, line = evaluate(fn)
    with capsys.disabled():
        print('\n' + line)
    assert ok, line


def main():
    results = [evaluate(fn) for fn in CRITERIA]
    for _, line in results:
        print(line)
    return 0 if all(ok for ok, _ in results) else 1


if __name__ == '__main__':
    sys.exit(main())
