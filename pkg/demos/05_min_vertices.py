"""Smallest bident carrying a critical group of each order."""

from math import gcd

from bident import N_of, min_vertices, order_witness
from bident.critical import best_k, smallest_coprime
from bident.euclid import chain

for m in range(2, 20):
    k = best_k(m)
    print(f"m={m:>2}  n={min_vertices(m):>2}  k={k}")

# two orders where the smallest coprime k is not the best one
for m in (6, 210):
    k0 = smallest_coprime(m)
    print(f"\nm={m}: smallest coprime k={k0} gives {N_of(m, k0)}")
    print(f"      best k={best_k(m)} gives {min_vertices(m)}")

# the 210 case in detail
print("\nchain(13, 11) =", chain(13, 11).terms)
print("N(210, k) for the first coprime k:",
      {k: N_of(210, k) for k in range(11, 40) if gcd(210, k) == 1})
w = order_witness(210, 13)
print("witness on", w.n, "vertices, r begins", w.r[:6])
