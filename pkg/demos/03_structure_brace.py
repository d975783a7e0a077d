"""The permutation skew brace of a solution.

G(X, r) is generated inside Sym(X) x Sym(X) by g_x = (sigma_x, tau_x^-1).
Its addition is not given directly, so it is grown from the generators and
then checked against every axiom.
"""

from skewbrace import (
    check_image_relations,
    emit_mul_presentation,
    enumerate_solutions,
    make_flip,
    permutation_brace,
    print_bword,
    solution_from_brace,
    symmetric_group,
    make_trivial,
)
from skewbrace.solutions import SolutionTable

shift = SolutionTable.from_function(2, lambda x, y: ((y + 1) % 2, (x + 1) % 2))
pb = permutation_brace(shift)
print('shift: order', pb.brace.n, 'labels', pb.labels)

# The flip has trivial sigma and tau, so everything collapses.
print('flip: order', permutation_brace(make_flip(3)).brace.n)
for w in emit_mul_presentation(make_flip(2)).relators:
    print('  ', print_bword(w))

# The solution of the trivial brace on Sym(3) gives a six-element image.
sol = solution_from_brace(make_trivial(symmetric_group(3)))
pb = permutation_brace(sol)
print('Sym(3) solution: order', pb.brace.n, 'generators at', pb.generator_map)
print('defining relations hold in the image:', check_image_relations(sol, pb))

# Every non-degenerate solution on three points.
sizes = {}
for s in enumerate_solutions(3, require_nondegenerate=True):
    n = permutation_brace(s).brace.n
    sizes[n] = sizes.get(n, 0) + 1
print('image orders over all non-degenerate solutions on 3 points:', dict(sorted(sizes.items())))
