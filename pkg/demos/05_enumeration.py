"""Counting small groups, skew braces and solutions."""

import time

from skewbrace import enumerate_groups, enumerate_skew_braces, enumerate_solutions

for n in range(1, 9):
    t = time.perf_counter()
    groups = enumerate_groups(n)
    braces = enumerate_skew_braces(n)
    print(f'order {n}: {len(groups)} groups, {len(braces)} skew braces '
          f'({time.perf_counter() - t:.2f}s)')

# The naive method pairs every labeled group table with every other one.
for n in range(1, 5):
    same = enumerate_skew_braces(n, 'naive').braces == enumerate_skew_braces(n).braces
    print(f'order {n}: naive scan agrees with the holomorph method: {same}')

for n in (1, 2, 3):
    nd = enumerate_solutions(n, require_nondegenerate=True)
    inv = enumerate_solutions(n, require_nondegenerate=True, require_involutive=True)
    print(f'|X| = {n}: {len(nd)} non-degenerate solutions, {len(inv)} involutive')
