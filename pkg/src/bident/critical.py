"""Critical groups of arithmetical structures on bidents.

The critical group is the torsion part of coker L(D_n, d).  On a bident it
is always cyclic, so its order says everything; the order is
``r_0 / (r_x r_y r_ell)`` for n >= 4 and 1 on D_3.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Optional, Sequence

from .core import ExactMatrix, Structure, degrees, laplacian_variant
from .euclid import F
from .smooth import smooth_from_triple
from .transform import subdivide_at


class NotCoprime(ValueError):
    pass


@dataclass(frozen=True)
class CriticalGroupRecord:
    order: int
    invariant_factors: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.invariant_factors is not None:
            nontrivial = [a for a in self.invariant_factors if a != 1]
            assert len(nontrivial) <= 1, self.invariant_factors
            assert prod(nontrivial) == self.order


def group_order(s: Structure) -> int:
    if s.n == 3:
        return 1
    rx, ry, r0, rl = s.r[0], s.r[1], s.r[2], s.r[-1]
    q, rem = divmod(r0, rx * ry * rl)
    assert rem == 0, s
    return q


def lorenzini_order(s: Structure) -> Fraction:
    """Product of r_v^(deg(v) - 2) over all vertices, as an exact rational."""
    out = Fraction(1)
    for rv, deg in zip(s.r, degrees(s.n)):
        out *= Fraction(rv) ** (deg - 2)
    return out


def order_upper_bound(s: Structure) -> Fraction:
    """``(n-3)(1/(r_y r_ell) + 1/(r_x r_ell)) + 1/(r_x r_y)``; valid for smooth s."""
    rx, ry, rl = s.r[0], s.r[1], s.r[-1]
    return (s.n - 3) * (Fraction(1, ry * rl) + Fraction(1, rx * rl)) + Fraction(1, rx * ry)


def smith_normal_form(mat: ExactMatrix | Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors of a square integer matrix, zeros last.

    Plain elementary row/column operations with the smallest nonzero entry
    as pivot; entries stay exact Python ints.
    """
    a = mat.rows() if isinstance(mat, ExactMatrix) else [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return ()
    m = len(a[0])
    diag = []
    for t in range(min(n, m)):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    v = a[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, pi, pj = best
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ai, at = a[i], a[t]
                        for j in range(t, m):
                            ai[j] -= q * at[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, n):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, m) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            at, ab = a[t], a[bad]
            for j in range(t, m):
                at[j] += ab[j]
        if best is None:
            diag.extend([0] * (min(n, m) - t))
            break
        diag.append(abs(a[t][t]))
    nonzero = sorted(v for v in diag if v)
    return tuple(nonzero + [0] * (len(diag) - len(nonzero)))


def critical_group(s: Structure, exact: bool = False) -> CriticalGroupRecord:
    """Order of K(D_n; d, r); with ``exact`` also the SNF invariant factors."""
    order = group_order(s)
    if not exact:
        return CriticalGroupRecord(order)
    snf = smith_normal_form(laplacian_variant(s))
    assert snf[-1] == 0 and all(snf[:-1])
    return CriticalGroupRecord(order, snf[:-1])


def max_order(n: int) -> tuple[int, Structure]:
    """Largest critical group order on D_n and its unique witness."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    witness = smooth_from_triple(1, 1, 2 * n - 5)
    assert witness.n == n and group_order(witness) == 2 * n - 5
    return 2 * n - 5, witness


def max_even_order_witness(n: int) -> Structure:
    k, rem = divmod(n, 4)
    if rem in (0, 1):
        s = smooth_from_triple(2, 1, 12 * k - 8)
    else:
        s = smooth_from_triple(2, 1, 12 * k - 4)
    if rem in (1, 3):
        s = subdivide_at(s, s.ell)
    assert s.n == n
    return s


def max_even_order(n: int) -> int:
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    k, rem = divmod(n, 4)
    value = 6 * k - 4 if rem in (0, 1) else 6 * k - 2
    assert group_order(max_even_order_witness(n)) == value
    return value


def N_of(m: int, k: int) -> int:
    """``m - floor(m/k) + F(k, k - (m mod k))`` for coprime m, k >= 2."""
    if m < 2 or k < 2:
        raise ValueError(f"need m, k >= 2, got ({m}, {k})")
    if gcd(m, k) != 1:
        raise NotCoprime(f"gcd({m}, {k}) = {gcd(m, k)}")
    return m - m // k + F(k, k - m % k)


def order_witness(m: int, k: int) -> Structure:
    """Smooth structure with r_x = 1, r_y = k - 1, r_0 = m(k - 1); order m."""
    if gcd(m, k) != 1:
        raise NotCoprime(f"gcd({m}, {k}) = {gcd(m, k)}")
    s = smooth_from_triple(1, k - 1, m * (k - 1))
    assert s.n == N_of(m, k) and group_order(s) == m
    return s


def best_k(m: int) -> int:
    """The k in [2, m + 1] coprime to m minimising N(m, k); smallest k on ties."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return min((k for k in range(2, m + 2) if gcd(m, k) == 1), key=lambda k: (N_of(m, k), k))


def min_vertices(m: int) -> int:
    """Smallest n such that some structure on D_n has critical group of order m.

    k > m + 1 never helps: then floor(m/k) = 0 and F >= 2, so N >= m + 2,
    which k = m + 1 already attains.
    """
    return N_of(m, best_k(m))


def smallest_coprime(m: int) -> int:
    k = 2
    while gcd(m, k) != 1:
        k += 1
    return k


def order_distribution(n: int, cap: int | None = None) -> dict[int, int]:
    """Tally of critical group orders over every structure on D_n."""
    from .oracle import oracle_all

    return dict(sorted(Counter(group_order(s) for s in oracle_all(n, cap=cap)).items()))
