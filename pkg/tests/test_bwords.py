import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbrace import bwords
from skewbrace.braces import make_trivial
from skewbrace.bwords import (
    ZERO,
    BWordSyntaxError,
    Gen,
    Inv,
    Neg,
    Prod,
    Sum,
    UnboundGeneratorError,
    depth,
    eval_bword,
    generators_of,
    parse_bword,
    print_bword,
    substitute,
)
from skewbrace.enumeration import enumerate_skew_braces
from skewbrace.errors import FormatError
from skewbrace.groups import cyclic_group
from skewbrace.ideals import all_ideals, quotient

x1, y1 = Gen('x1'), Gen('y1')


def test_parse_examples():
    assert parse_bword('(x1 + x1)') == Sum(x1, x1)
    assert parse_bword('(x1 ~)') == Inv(x1)
    assert parse_bword('0') == ZERO
    assert parse_bword('((- y1) + (y1 o x1))') == bwords.lam(y1, x1)


def test_o_as_name_and_operator():
    assert parse_bword('(o o o)') == Prod(Gen('o'), Gen('o'))
    assert parse_bword('(o2 o (- o))') == Prod(Gen('o2'), Neg(Gen('o')))


def test_whitespace_insensitive():
    assert parse_bword(' (\tx1+( y1  o x1 ) ) ') == Sum(x1, Prod(y1, x1))
    assert parse_bword('(x1+(y1 o x1))') == Sum(x1, Prod(y1, x1))


def test_print_format():
    w = Sum(Neg(x1), Prod(Inv(y1), ZERO))
    assert print_bword(w) == '((- x1) + ((y1 ~) o 0))'


@pytest.mark.parametrize('text', ['', '(', '(x1 +)', '(x1 + x1', 'x1)', '(x1 * x1)',
                                  '(X1 + x1)', '(x1 + x1) x1', '(- )', '(1 + x1)'])
def test_syntax_errors(text):
    with pytest.raises(BWordSyntaxError) as e:
        parse_bword(text)
    assert isinstance(e.value, FormatError)


def test_error_position():
    with pytest.raises(BWordSyntaxError) as e:
        parse_bword('(x1 * x1)', line=3)
    assert e.value.line == 3
    assert e.value.position == 4


names = st.sampled_from(['x1', 'x2', 'y1', 'o', 'ab3'])
words = st.recursive(
    st.one_of(st.just(ZERO), names.map(Gen)),
    lambda kids: st.one_of(
        st.tuples(kids, kids).map(lambda t: Sum(*t)),
        st.tuples(kids, kids).map(lambda t: Prod(*t)),
        kids.map(Neg),
        kids.map(Inv),
    ),
    max_leaves=40,
).filter(lambda w: depth(w) <= 8)


@settings(max_examples=300, deadline=None)
@given(words)
def test_round_trip(w):
    text = print_bword(w)
    assert parse_bword(text) == w
    assert print_bword(parse_bword(text)) == text


def test_deep_word_prints_without_recursion_limit():
    w = x1
    for _ in range(5000):
        w = Neg(w)
    assert print_bword(w).count('(- ') == 5000


def test_eval_examples():
    z2 = make_trivial(cyclic_group(2))
    assert eval_bword(Sum(x1, x1), z2, {'x1': 1}) == 0
    with pytest.raises(UnboundGeneratorError):
        eval_bword(Sum(x1, y1), z2, {'x1': 1})


def test_lambda_macro_matches_lambda():
    for b in enumerate_skew_braces(4):
        for a in range(b.n):
            for c in range(b.n):
                assert eval_bword(bwords.lam(y1, x1), b, {'y1': a, 'x1': c}) == b.lam[a, c]


def test_star_macro_matches_star():
    w = parse_bword('(((- y1) + (y1 o x1)) + (- x1))')
    assert w == bwords.star(y1, x1)
    for n in range(1, 5):
        for b in enumerate_skew_braces(n):
            for a in range(n):
                for c in range(n):
                    assert eval_bword(w, b, {'y1': a, 'x1': c}) == b.star(a, c)


def test_generators_and_substitute():
    w = Sum(x1, Prod(y1, x1))
    assert generators_of(w) == {'x1', 'y1'}
    assert substitute(w, {'x1': ZERO}) == Sum(ZERO, Prod(y1, ZERO))
    assert depth(w) == 2


def test_macros(s3_almost):
    b = s3_almost
    a = {'x1': 1, 'y1': 3}
    assert eval_bword(bwords.conj_mul(x1, y1), b, a) == b.mul[b.mul[3, 1], b.inv[3]]
    assert eval_bword(bwords.conj_add(x1, y1), b, a) == b.add[b.add[3, 1], b.neg[3]]
    assert eval_bword(bwords.multiple(3, y1), b, a) == b.add[b.add[3, 3], 3]
    assert eval_bword(bwords.equation(x1, x1), b, a) == 0


two_letter_words = st.recursive(
    st.one_of(st.just(ZERO), st.sampled_from(['x1', 'x2']).map(Gen)),
    lambda kids: st.one_of(
        st.tuples(kids, kids).map(lambda t: Sum(*t)),
        st.tuples(kids, kids).map(lambda t: Prod(*t)),
        kids.map(Neg),
        kids.map(Inv),
    ),
    max_leaves=12,
)


@settings(max_examples=60, deadline=None)
@given(w=two_letter_words, a=st.integers(0, 5), c=st.integers(0, 5))
def test_evaluation_commutes_with_quotient(w, a, c):
    for b in enumerate_skew_braces(6):
        for i in all_ideals(b):
            q, proj = quotient(b, i)
            val = eval_bword(w, b, {'x1': a, 'x2': c})
            assert proj[val] == eval_bword(w, q, {'x1': int(proj[a]), 'x2': int(proj[c])})
