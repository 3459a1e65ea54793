"""Critical groups: order formula, Smith normal form, extremes."""

from bident import laplacian_variant, max_even_order, max_order, order_distribution, smith_normal_form
from bident.critical import group_order, lorenzini_order
from bident.oracle import oracle_all

for s in oracle_all(4):
    snf = smith_normal_form(laplacian_variant(s))
    print(f"r={s.r}  order={group_order(s)}  snf={snf}  product={lorenzini_order(s)}")

print()
for n in range(4, 11):
    dist = order_distribution(n)
    top, w = max_order(n)
    print(f"D_{n}: {dict(dist)}")
    print(f"     max {top} via r={w.r}, max even {max_even_order(n)}")
