"""Solutions of the Yang-Baxter equation and the skew braces behind them.

We start with the smallest interesting tables, check the braid relation
directly, then build the almost trivial skew brace on Sym(3) and turn it
into a solution.
"""

from skewbrace import (
    extract_diagonal,
    is_involutive,
    is_nondegenerate,
    is_ybe,
    make_almost_trivial,
    make_flip,
    solution_from_brace,
    symmetric_group,
    verify,
)
from skewbrace.solutions import SolutionTable, ybe_witness

# The flip r(x, y) = (y, x) is the prototype: a non-degenerate involutive
# solution on any set.
flip = make_flip(3)
print('flip on 3 points:', is_ybe(flip), is_nondegenerate(flip), is_involutive(flip))

# Swapping (0,0) and (0,1) and fixing everything else is a bijection of
# X x X but not a solution.  ybe_witness names the triple where the two
# sides of the braid relation disagree.
swap = SolutionTable.from_function(2, lambda x, y: {(0, 0): (0, 1), (0, 1): (0, 0)}.get((x, y), (x, y)))
print('swap witness:', ybe_witness(swap))

# The shift r(x, y) = (y + 1, x + 1) mod 2 has sigma_x = tau_y = (0 1).
shift = SolutionTable.from_function(2, lambda x, y: ((y + 1) % 2, (x + 1) % 2))
d = extract_diagonal(shift)
print('shift sigma:', d.sigma.tolist(), 'tau:', d.tau.tolist())

# Sym(3) with u + v = v u and u o v = u v.
s3 = symmetric_group(3)
b = make_almost_trivial(s3)
print(verify(b))
print('lambda table (conjugation):')
print(b.lam)

r = solution_from_brace(b)
print('r_B is a solution:', is_ybe(r), '| non-degenerate:', is_nondegenerate(r),
      '| involutive:', is_involutive(r))
