"""b-words: terms over generator names built from ``+``, ``o``, additive
negation and multiplicative inversion.

Text grammar (whitespace between tokens is ignored)::

    word := '0' | NAME | '(' word '+' word ')' | '(' word 'o' word ')'
          | '(' '-' word ')' | '(' word '~' ')'
    NAME := [a-z][a-z0-9]*

``o`` is an ordinary name in word position and the product operator after
the first operand of a parenthesized word, so a generator may be called
``o``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FormatError


class BWord:
    __slots__ = ()

    def __str__(self):
        return print_bword(self)


@dataclass(frozen=True)
class Zero(BWord):
    pass


@dataclass(frozen=True)
class Gen(BWord):
    name: str


@dataclass(frozen=True)
class Sum(BWord):
    left: BWord
    right: BWord


@dataclass(frozen=True)
class Prod(BWord):
    left: BWord
    right: BWord


@dataclass(frozen=True)
class Neg(BWord):
    arg: BWord


@dataclass(frozen=True)
class Inv(BWord):
    arg: BWord


ZERO = Zero()

NAME_RE = re.compile(r'[a-z][a-z0-9]*\Z')


class BWordSyntaxError(FormatError):
    """Parse failure; ``position`` is the 0-based character offset."""

    def __init__(self, message, position, line=None):
        self.position = position
        super().__init__(f'{message} at position {position}', line=line,
                         column=position + 1 if line is not None else None)


class UnboundGeneratorError(KeyError):
    pass


# printing -------------------------------------------------------------------

def print_bword(w):
    # iterative so that deep words do not hit the recursion limit
    out = []
    stack = [w]
    while stack:
        x = stack.pop()
        if isinstance(x, str):
            out.append(x)
        elif isinstance(x, Zero):
            out.append('0')
        elif isinstance(x, Gen):
            out.append(x.name)
        elif isinstance(x, Sum):
            stack.extend([')', x.right, ' + ', x.left, '('])
        elif isinstance(x, Prod):
            stack.extend([')', x.right, ' o ', x.left, '('])
        elif isinstance(x, Neg):
            stack.extend([')', x.arg, '(- '])
        elif isinstance(x, Inv):
            stack.extend([' ~)', x.arg, '('])
        else:
            raise TypeError(f'not a b-word: {x!r}')
    return ''.join(out)


# parsing --------------------------------------------------------------------

_TOKEN_RE = re.compile(r'\s*(?:(?P<name>[a-z][a-z0-9]*)|(?P<sym>[0()+\-~]))')


def _tokenize(text, line=None):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise BWordSyntaxError(f'unexpected character {text[bad]!r}', bad, line)
            return tokens
        kind = 'name' if m.group('name') else 'sym'
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()


def parse_bword(text, line=None):
    tokens = _tokenize(text, line)
    end = len(text)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else ('eof', '', end)

    def expect(value):
        nonlocal i
        kind, tok, pos = peek()
        if tok != value or kind == 'eof':
            found = 'end of input' if kind == 'eof' else repr(tok)
            raise BWordSyntaxError(f'expected {value!r}, found {found}', pos, line)
        i += 1

    def word():
        nonlocal i
        kind, tok, pos = peek()
        if kind == 'name':
            i += 1
            return Gen(tok)
        if tok == '0':
            i += 1
            return ZERO
        if tok != '(':
            found = 'end of input' if kind == 'eof' else repr(tok)
            raise BWordSyntaxError(f'expected a word, found {found}', pos, line)
        i += 1
        if peek()[1] == '-' and peek()[0] == 'sym':
            i += 1
            w = Neg(word())
            expect(')')
            return w
        left = word()
        kind, tok, pos = peek()
        if (kind, tok) == ('sym', '+'):
            i += 1
            w = Sum(left, word())
        elif (kind, tok) == ('name', 'o'):
            i += 1
            w = Prod(left, word())
        elif (kind, tok) == ('sym', '~'):
            i += 1
            w = Inv(left)
        else:
            found = 'end of input' if kind == 'eof' else repr(tok)
            raise BWordSyntaxError(f"expected '+', 'o' or '~', found {found}", pos, line)
        expect(')')
        return w

    w = word()
    if i != len(tokens):
        raise BWordSyntaxError(f'trailing input {tokens[i][1]!r}', tokens[i][2], line)
    return w


# traversal ------------------------------------------------------------------

def generators_of(w):
    names = set()
    stack = [w]
    while stack:
        x = stack.pop()
        if isinstance(x, Gen):
            names.add(x.name)
        elif isinstance(x, (Sum, Prod)):
            stack += [x.left, x.right]
        elif isinstance(x, (Neg, Inv)):
            stack.append(x.arg)
    return names


def depth(w):
    if isinstance(w, (Sum, Prod)):
        return 1 + max(depth(w.left), depth(w.right))
    if isinstance(w, (Neg, Inv)):
        return 1 + depth(w.arg)
    return 0


def substitute(w, mapping):
    """Replace each generator by the word ``mapping[name]``; names missing
    from ``mapping`` are left alone."""
    if isinstance(w, Gen):
        return mapping.get(w.name, w)
    if isinstance(w, Sum):
        return Sum(substitute(w.left, mapping), substitute(w.right, mapping))
    if isinstance(w, Prod):
        return Prod(substitute(w.left, mapping), substitute(w.right, mapping))
    if isinstance(w, Neg):
        return Neg(substitute(w.arg, mapping))
    if isinstance(w, Inv):
        return Inv(substitute(w.arg, mapping))
    return w


def eval_bword(w, b, assignment):
    """Value of ``w`` in the brace ``b`` with generators sent to elements by
    ``assignment``."""
    if isinstance(w, Zero):
        return 0
    if isinstance(w, Gen):
        try:
            return int(assignment[w.name])
        except KeyError:
            raise UnboundGeneratorError(w.name) from None
    if isinstance(w, Sum):
        return int(b.add[eval_bword(w.left, b, assignment), eval_bword(w.right, b, assignment)])
    if isinstance(w, Prod):
        return int(b.mul[eval_bword(w.left, b, assignment), eval_bword(w.right, b, assignment)])
    if isinstance(w, Neg):
        return int(b.neg[eval_bword(w.arg, b, assignment)])
    if isinstance(w, Inv):
        return int(b.inv[eval_bword(w.arg, b, assignment)])
    raise TypeError(f'not a b-word: {w!r}')


# macros ---------------------------------------------------------------------

def as_word(x):
    return Gen(x) if isinstance(x, str) else x


def lam(a, x):
    """``lambda_a(x) = (-a) + (a o x)``."""
    a, x = as_word(a), as_word(x)
    return Sum(Neg(a), Prod(a, x))


def star(a, x):
    """``a * x = lambda_a(x) - x``."""
    x = as_word(x)
    return Sum(lam(a, x), Neg(x))


def conj_mul(x, y):
    """``x^{o,y} = (y o x) o y^-1``."""
    x, y = as_word(x), as_word(y)
    return Prod(Prod(y, x), Inv(y))


def conj_add(x, y):
    """``x^{+,y} = (y + x) - y``."""
    x, y = as_word(x), as_word(y)
    return Sum(Sum(y, x), Neg(y))


def multiple(k, x):
    """``x + x + ... + x`` (``k >= 1`` copies, left-nested)."""
    x = as_word(x)
    w = x
    for _ in range(k - 1):
        w = Sum(w, x)
    return w


def difference(lhs, rhs):
    """``lhs - rhs`` as a relator."""
    return Sum(as_word(lhs), Neg(as_word(rhs)))


def equation(lhs, rhs):
    """Relator for ``lhs = rhs``: ``lhs o rhs^-1`` when ``lhs`` is a product
    or inverse, ``lhs - rhs`` otherwise."""
    lhs, rhs = as_word(lhs), as_word(rhs)
    if isinstance(lhs, (Prod, Inv)):
        return Prod(lhs, Inv(rhs))
    return Sum(lhs, Neg(rhs))
