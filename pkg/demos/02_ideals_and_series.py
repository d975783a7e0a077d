"""Ideals, socle, annihilator and the two upper series."""

from skewbrace import (
    all_ideals,
    annihilator,
    conjugates,
    cyclic_group,
    derived_ideal,
    dihedral_group,
    is_annihilator_nilpotent,
    is_simple,
    make_almost_trivial,
    make_trivial,
    quotient,
    socle,
    socle_multiples,
    symmetric_group,
    upper_annihilator_series,
    upper_socle_series,
)

b = make_almost_trivial(symmetric_group(3))
print('ideals of the almost trivial brace on Sym(3):', *all_ideals(b))
print('socle', socle(b), '| annihilator', annihilator(b), '| B(2)', derived_ideal(b))

# Elements 3 and 4 are the 3-cycles; together with 0 they form an ideal
# whose quotient is the trivial brace of order 2.
q, proj = quotient(b, {0, 3, 4})
print('quotient by A3 has order', q.n, 'and projection', proj.tolist())

# Both series stall at {0}: the centre of Sym(3) is trivial.
print('annihilator series', *upper_annihilator_series(b))
print('socle series', *upper_socle_series(b))
print('annihilator nilpotent:', is_annihilator_nilpotent(b))

# For trivial braces the annihilator series is the upper central series.
d8 = dihedral_group(4)
print('D8 central series sizes', [len(t) for t in d8.upper_central_series()])
print('trivial brace on D8  ', [len(t) for t in upper_annihilator_series(make_trivial(d8))])

z4 = make_trivial(cyclic_group(4))
print('Z/4 simple?', is_simple(z4), '| Z/5 simple?', is_simple(make_trivial(cyclic_group(5))))
print('2 Soc(Z/4) =', socle_multiples(z4, 2))
print('conjugates of a transposition:', conjugates(b, 1))
