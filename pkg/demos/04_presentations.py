"""Presentations written as b-words, and evaluating them."""

from skewbrace import (
    cyclic_group,
    extend_presentation,
    make_almost_trivial,
    make_trivial,
    parse_bword,
    print_bword,
    symmetric_group,
    table_presentation,
    trivial_brace_presentation,
)
from skewbrace.bwords import eval_bword

w = parse_bword('(((- y1) + (y1 o x1)) + (- x1))')
b = make_almost_trivial(symmetric_group(3))
print(print_bword(w), '=', eval_bword(w, b, {'y1': 3, 'x1': 1}), '= 3 * 1 =', b.star(3, 1))

p = trivial_brace_presentation([0])
print('infinite cyclic trivial brace:')
for r in p.relators:
    print('  ', print_bword(r))

p = trivial_brace_presentation([2])
print('Z/2:', len(p), 'relators, all zero:', p.holds_in(make_trivial(cyclic_group(2)), {'x1': 1}))

p, a = table_presentation(b)
print('table presentation of Sym(3):', len(p), 'relators, all zero:', p.holds_in(b, a))

# Glue a presentation of A3 to one of the quotient.
p, a = extend_presentation(b, {0, 3, 4})
print('extension presentation:', p.generators, len(p), 'relators, all zero:', p.holds_in(b, a))
for r in p.relators[:4]:
    print('  ', print_bword(r))
