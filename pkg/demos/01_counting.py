"""Counting smooth and total arithmetical structures on bidents.

Smooth counts come from a scan over (b, eps); totals then follow from
ballot numbers.  Everything is exact, so n = 43 is no harder than n = 4.
"""

import time

from bident import count_smooth, count_total
from bident.smooth import smooth_bounds_check, smooth_pairs
from bident.transform import total_bounds_check

t0 = time.perf_counter()
print(f"{'n':>3} {'smooth':>7} {'total':>26}")
for n in range(3, 44):
    print(f"{n:>3} {count_smooth(n):>7} {count_total(n):>26}")
print(f"computed in {time.perf_counter() - t0:.2f}s\n")

# the pairs behind a single row: rbar prong values (a, b) with a >= b
print("unordered (a, b) pairs on D_6:", sorted(smooth_pairs(6)))

# both counts sit inside explicit sandwiches
for n in (10, 25, 43):
    lo, v, hi, ok = smooth_bounds_check(n)
    print(f"n={n}: {float(lo):.1f} <= {v} < {float(hi):.1f}  ok={ok}")
    lo, v, hi, ok = total_bounds_check(n)
    print(f"      {lo} <= {v} < {hi}  ok={ok}")
