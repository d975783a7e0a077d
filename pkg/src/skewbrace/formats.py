"""Text formats for solutions, braces, presentations, catalogs and labeled
permutation braces.

All indices are 0-based.  ``dump_*`` produces the canonical form of each
format; ``parse_*`` raises :class:`~skewbrace.errors.FormatError` with the
offending line number.
"""

from __future__ import annotations

import numpy as np

from .braces import FiniteSkewBrace
from .bwords import generators_of, parse_bword, print_bword
from .enumeration import BraceCatalog
from .errors import FormatError
from .groups import is_permutation
from .presentations import SkewBracePresentation
from .solutions import SolutionTable


class _Lines:
    def __init__(self, text, offset=0):
        lines = text.split('\n')
        while lines and not lines[-1].strip():
            lines.pop()
        self.lines = lines
        self.pos = 0
        self.offset = offset

    @property
    def lineno(self):
        return self.pos + self.offset + 1

    def at_end(self):
        return self.pos >= len(self.lines)

    def next(self, what):
        if self.at_end():
            raise FormatError(f'unexpected end of input, expected {what}', self.lineno)
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def error(self, message, column=None):
        return FormatError(message, self.pos + self.offset, column)

    def expect_end(self):
        if not self.at_end():
            raise FormatError(f'unexpected trailing line {self.lines[self.pos]!r}', self.lineno)


def _int(lines, tok, what):
    try:
        return int(tok)
    except ValueError:
        raise lines.error(f'expected an integer for {what}, found {tok!r}') from None


def _header(lines, keyword, nargs):
    parts = lines.next(f'{keyword!r} header').split()
    if not parts or parts[0] != keyword or len(parts) != nargs + 1:
        raise lines.error(f'expected header {keyword!r} with {nargs} argument(s)')
    return parts[1:]


# solutions ------------------------------------------------------------------

def dump_solution(sol):
    out = [f'solution {sol.n}']
    for (i, j), (k, l) in sol.items():
        out.append(f'{i} {j} -> {k} {l}')
    return '\n'.join(out) + '\n'


def parse_solution(text):
    lines = _Lines(text)
    (ns,) = _header(lines, 'solution', 1)
    n = _int(lines, ns, 'size')
    if n < 1:
        raise lines.error('size must be positive')
    left = np.full((n, n), -1, dtype=np.int64)
    right = np.full((n, n), -1, dtype=np.int64)
    for _ in range(n * n):
        line = lines.next('a line "i j -> k l"')
        parts = line.split()
        if len(parts) != 5 or parts[2] != '->':
            raise lines.error(f'expected "i j -> k l", found {line!r}')
        i, j, k, l = (_int(lines, t, 'index') for t in parts[:2] + parts[3:])
        if not all(0 <= v < n for v in (i, j, k, l)):
            raise lines.error(f'index out of range 0..{n - 1}')
        if left[i, j] >= 0:
            raise lines.error(f'duplicate pair ({i}, {j})')
        left[i, j], right[i, j] = k, l
    lines.expect_end()
    missing = np.argwhere(left < 0)
    if len(missing):
        i, j = missing[0]
        raise FormatError(f'missing pair ({i}, {j})', lines.lineno)
    try:
        return SolutionTable(left, right)
    except FormatError as e:
        raise FormatError(e.message, 1) from None


# braces ---------------------------------------------------------------------

def _dump_table(t):
    return [' '.join(str(int(v)) for v in row) for row in t]


def dump_brace(b):
    return '\n'.join([f'brace {b.n}', 'add', *_dump_table(b.add),
                      'mul', *_dump_table(b.mul)]) + '\n'


def _read_table(lines, name, n):
    if lines.next(f'{name!r}').strip() != name:
        raise lines.error(f'expected section {name!r}')
    rows = []
    for _ in range(n):
        parts = lines.next(f'a row of the {name} table').split()
        if len(parts) != n:
            raise lines.error(f'{name} row has {len(parts)} entries, expected {n}')
        row = [_int(lines, t, 'table entry') for t in parts]
        for c, v in enumerate(row):
            if not 0 <= v < n:
                raise lines.error(f'{name} entry {v} out of range 0..{n - 1}', c + 1)
        rows.append(row)
    return rows


def _read_brace(lines):
    (ns,) = _header(lines, 'brace', 1)
    n = _int(lines, ns, 'order')
    if n < 1:
        raise lines.error('order must be positive')
    add = _read_table(lines, 'add', n)
    mul = _read_table(lines, 'mul', n)
    return FiniteSkewBrace(add, mul)


def parse_brace(text):
    lines = _Lines(text)
    b = _read_brace(lines)
    lines.expect_end()
    return b


# presentations --------------------------------------------------------------

def dump_presentation(p):
    head = ' '.join(('gens',) + p.generators)
    return '\n'.join(['presentation', head] + [print_bword(w) for w in p.relators]) + '\n'


def parse_presentation(text):
    lines = _Lines(text)
    if lines.next("'presentation'").strip() != 'presentation':
        raise lines.error("expected header 'presentation'")
    parts = lines.next("'gens' line").split()
    if not parts or parts[0] != 'gens':
        raise lines.error("expected 'gens' line")
    gens = tuple(parts[1:])
    declared = set(gens)
    for g in gens:
        try:
            SkewBracePresentation((g,), ())
        except FormatError as e:
            raise lines.error(e.message) from None
    if len(declared) != len(gens):
        raise lines.error('duplicate generator name')
    rels = []
    while not lines.at_end():
        line = lines.next('a relator')
        if not line.strip():
            continue
        w = parse_bword(line, line=lines.pos)
        extra = generators_of(w) - declared
        if extra:
            raise lines.error(f'undeclared generator {sorted(extra)[0]!r}')
        rels.append(w)
    return SkewBracePresentation(gens, tuple(rels))


# catalogs -------------------------------------------------------------------

def dump_catalog(cat):
    head = f'catalog {cat.order} {len(cat.braces)} {cat.method}\n'
    return head + '\n'.join(dump_brace(b) for b in cat.braces)


def parse_catalog(text):
    lines = _Lines(text)
    order_s, count_s, method = _header(lines, 'catalog', 3)
    order = _int(lines, order_s, 'order')
    count = _int(lines, count_s, 'count')
    braces = []
    while not lines.at_end():
        if not lines.lines[lines.pos].strip():
            lines.pos += 1
            continue
        b = _read_brace(lines)
        if b.n != order:
            raise lines.error(f'brace of order {b.n} in a catalog of order {order}')
        braces.append(b)
    if len(braces) != count:
        raise FormatError(f'catalog header announces {count} braces, found {len(braces)}', 1)
    return BraceCatalog(order, tuple(braces), method)


# permutation braces with labels ---------------------------------------------

def _perm_str(p):
    return ' '.join(str(int(x)) for x in p)


def dump_perm_brace(pb):
    out = [dump_brace(pb.brace).rstrip('\n'), 'labels']
    for e, (p1, p2) in enumerate(pb.labels):
        out.append(f'{e} : {_perm_str(p1)} | {_perm_str(p2)}')
    return '\n'.join(out) + '\n'


def parse_perm_brace(text):
    """Returns ``(brace, labels)``."""
    lines = _Lines(text)
    b = _read_brace(lines)
    if lines.next("'labels'").strip() != 'labels':
        raise lines.error("expected section 'labels'")
    labels = []
    width = None
    for e in range(b.n):
        line = lines.next(f'label of element {e}')
        head, sep, rest = line.partition(':')
        if not sep or '|' not in rest:
            raise lines.error(f'expected "e : p1 | p2", found {line!r}')
        if _int(lines, head.strip(), 'element') != e:
            raise lines.error(f'labels must be listed in element order, expected {e}')
        pair = []
        for part in rest.split('|'):
            p = tuple(_int(lines, t, 'permutation entry') for t in part.split())
            if not is_permutation(p):
                raise lines.error(f'{_perm_str(p)!r} is not a permutation')
            pair.append(p)
        if len(pair) != 2 or len(pair[0]) != len(pair[1]):
            raise lines.error('a label is a pair of permutations of the same degree')
        if width is None:
            width = len(pair[0])
        elif len(pair[0]) != width:
            raise lines.error('all labels must have the same degree')
        labels.append(tuple(pair))
    lines.expect_end()
    if len(set(labels)) != len(labels):
        raise FormatError('labels are not distinct', lines.lineno)
    return b, tuple(labels)


# solutions lists ------------------------------------------------------------

def dump_solution_list(sols):
    return '\n'.join(dump_solution(s) for s in sols)
