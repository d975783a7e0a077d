import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbrace.braces import (
    FiniteSkewBrace,
    check_identity_pack,
    check_lambda_homomorphism,
    check_semidirect_commutator,
    check_star_identities,
    lambda_of,
    make_almost_trivial,
    make_trivial,
    semidirect,
    solution_from_brace,
    star,
    verify,
)
from skewbrace.enumeration import enumerate_groups, enumerate_skew_braces
from skewbrace.groups import cyclic_group, direct_product
from skewbrace.solutions import is_involutive, is_nondegenerate, is_ybe, make_flip


def test_trivial_z4_verifies(z4):
    assert verify(z4).ok


def test_almost_trivial_s3_verifies(s3_almost):
    assert verify(s3_almost).ok


def test_shared_identity_violation():
    b = FiniteSkewBrace([[0, 1], [1, 0]], [[1, 0], [0, 1]])
    report = verify(b)
    assert not report.ok
    assert 'shared identity' in report.axioms()
    assert '0 ≠ 1' in str(report)


def test_skew_distributivity_violation(s3):
    # S3 against a relabeled copy of itself that is not compatible
    b = FiniteSkewBrace(s3.op, s3.relabeled([0, 3, 2, 1, 4, 5]).op)
    report = verify(b)
    assert 'skew distributivity' in report.axioms()
    assert report.violations[0].witness


def test_klein_plus_cyclic_mul_is_a_brace():
    k = direct_product(cyclic_group(2), cyclic_group(2))
    assert verify(FiniteSkewBrace(k.op, cyclic_group(4).op)).ok


def test_trivial_lambda_is_identity(z4):
    for a in range(4):
        assert list(lambda_of(z4, a)) == [0, 1, 2, 3]


def test_almost_trivial_lambda_is_conjugation(s3, s3_almost):
    inv = s3.inverse
    for a in range(6):
        for c in range(6):
            assert s3_almost.lam[a, c] == s3.op[s3.op[a, c], inv[a]]


def test_trivial_star_is_zero(z4):
    assert not z4.star_table.any()


def test_almost_trivial_star(s3, s3_almost):
    op, inv = s3.op, s3.inverse
    for a in range(6):
        for c in range(6):
            expected = op[op[op[inv[c], a], c], inv[a]]
            assert star(s3_almost, a, c) == expected


def test_star_out_of_range(z4):
    with pytest.raises(IndexError):
        star(z4, 0, 9)


def test_nontrivial_order4_lambda():
    assert any(not (b.lam == np.arange(4)).all() for b in enumerate_skew_braces(4))


def test_trivial_and_almost_trivial():
    z2 = cyclic_group(2)
    assert make_trivial(z2) == make_almost_trivial(z2)


def test_s3_trivial_differs(s3):
    assert make_trivial(s3) != make_almost_trivial(s3)


@pytest.mark.parametrize('n', range(1, 9))
def test_constructions_verify_for_all_small_groups(n):
    for g in enumerate_groups(n):
        assert verify(make_trivial(g)).ok
        assert verify(make_almost_trivial(g)).ok


def test_semidirect_order_and_trivial_case(z4):
    g = semidirect(z4)
    assert g.n == 16 and g.is_group()
    # lambda = id: (a, b)(c, d) = (a + c, b + d)
    for a, b, c, d in [(1, 2, 3, 1), (2, 2, 1, 3)]:
        assert g.op[a * 4 + b, c * 4 + d] == ((a + c) % 4) * 4 + (b + d) % 4


def test_semidirect_commutator_s3(s3_almost):
    assert check_semidirect_commutator(s3_almost) is None


def test_identity_checks_on_catalog():
    for n in range(1, 7):
        for b in enumerate_skew_braces(n):
            assert check_identity_pack(b) is None
            assert check_star_identities(b) is None
            assert check_lambda_homomorphism(b) is None


def test_solution_of_abelian_trivial_is_flip(z4):
    assert solution_from_brace(z4) == make_flip(4)


def test_solution_of_s3_trivial(s3):
    b = make_trivial(s3)
    sol = solution_from_brace(b)
    op, inv = s3.op, s3.inverse
    for a in range(6):
        for c in range(6):
            assert sol(a, c) == (c, op[op[inv[c], a], c])
    assert is_ybe(sol) and is_nondegenerate(sol)
    assert not is_involutive(sol)


@settings(max_examples=25, deadline=None)
@given(tail=st.permutations(range(1, 6)))
def test_relabeling_preserves_verification(tail, s3_almost):
    p = [0] + list(tail)
    b = s3_almost.relabeled(p)
    assert verify(b).ok
    assert solution_from_brace(b) == solution_from_brace(s3_almost).relabeled(p)
