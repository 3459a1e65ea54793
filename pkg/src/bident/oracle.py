"""Brute-force enumerators used to cross-check the fast counting code.

Nothing here touches the (b, eps, t) case split or the N(m, k) formula.
Smooth structures come from simulating the r-chain for every candidate
pair of prong values; everything else comes from subdivision closure.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .core import Structure, d_from_r
from .transform import descendants

MAX_ALL_N = int(os.environ.get("BIDENT_ORACLE_MAX_N", 12))
MAX_SMOOTH_N = int(os.environ.get("BIDENT_ORACLE_SMOOTH_MAX_N", 25))


@dataclass(frozen=True)
class PathStructure:
    """Arithmetical structure on the path P_k; P_1 is stored as d=(0,), r=(1,)."""

    k: int
    d: tuple[int, ...]
    r: tuple[int, ...]

    def is_valid(self) -> bool:
        k, d, r = self.k, self.d, self.r
        if len(d) != k or len(r) != k or min(r) < 1:
            return False
        g = 0
        for v in r:
            g = gcd(g, v)
        if g != 1:
            return False
        for i in range(k):
            nb = (r[i - 1] if i > 0 else 0) + (r[i + 1] if i < k - 1 else 0)
            if d[i] * r[i] != nb:
                return False
        return k == 1 or min(d) >= 1


def path_subdivisions(p: PathStructure) -> list[PathStructure]:
    out = []
    k, d, r = p.k, p.d, p.r
    # new end vertex on either side
    out.append(PathStructure(k + 1, (1, d[0] + 1) + d[1:], (r[0],) + r))
    out.append(PathStructure(k + 1, d[:-1] + (d[-1] + 1, 1), r + (r[-1],)))
    for i in range(k - 1):
        nd = d[:i] + (d[i] + 1, 1, d[i + 1] + 1) + d[i + 2:]
        nr = r[: i + 1] + (r[i] + r[i + 1],) + r[i + 1:]
        out.append(PathStructure(k + 1, nd, nr))
    return out


def oracle_paths(k: int) -> list[PathStructure]:
    """Every arithmetical structure on P_k, by subdivision closure from P_1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    level = {PathStructure(1, (0,), (1,))}
    for _ in range(k - 1):
        level = {q for p in level for q in path_subdivisions(p)}
    return sorted(level, key=lambda p: p.d)


def attach_prong(p: PathStructure, which: str) -> Structure:
    """Hang a d = 1 prong off the second vertex of a path (or the only one)."""
    if which == "both":
        if p.k < 1:
            raise ValueError("empty path")
        d0 = p.d[0] + 2
        d = (1, 1, d0) + p.d[1:]
        r = (p.r[0], p.r[0]) + p.r
        return Structure(p.k + 2, d, r)
    if p.k < 2:
        raise ValueError("need a path with at least two vertices")
    end_d, end_r = p.d[0], p.r[0]
    d0 = p.d[1] + 1
    rest_d, rest_r = p.d[2:], p.r[2:]
    if which == "x":
        # path is (v_y, v_0, v_1, ...); new prong is v_x
        d = (1, end_d, d0) + rest_d
        r = (p.r[1], end_r, p.r[1]) + rest_r
    elif which == "y":
        d = (end_d, 1, d0) + rest_d
        r = (end_r, p.r[1], p.r[1]) + rest_r
    else:
        raise ValueError(f"unknown prong {which!r}")
    return Structure(p.k + 1, d, r)


def _rbar_chain_length(a: int, b: int, stop: int) -> int:
    """Vertex count of the smooth structure with rbar_x = a, rbar_y = b.

    Returns ``stop + 1`` as soon as the chain is known to be longer.
    """
    c = a * b
    prev, cur = c, c - a - b
    if cur == 0:
        return 3
    n = 4
    while prev % cur:
        prev, cur = cur, (-prev) % cur
        n += 1
        if n > stop:
            return stop + 1
    return n


def oracle_smooth_upto(n_max: int) -> dict[int, list[Structure]]:
    """Smooth structures on D_n for every 3 <= n <= n_max, by chain simulation.

    Candidate prong values: 2 <= b <= a with b <= 2n - 4 and
    a <= max(n b^2, b(n - 1)); loose on purpose, only completeness matters.
    """
    out: dict[int, list[Structure]] = {n: [] for n in range(3, n_max + 1)}
    for b in range(2, max(2 * n_max - 4, 2) + 1):
        a_max = max(n_max * b * b, b * (n_max - 1))
        for a in range(b, a_max + 1):
            n = _rbar_chain_length(a, b, n_max)
            if n > n_max:
                continue
            for x, y in {(a, b), (b, a)}:
                g = gcd(x, y)
                c = x * y // g
                if n == 3:
                    r = (x // g, y // g, c)
                else:
                    tail = [c, c - x // g - y // g]
                    while tail[-2] % tail[-1]:
                        tail.append((-tail[-2]) % tail[-1])
                    r = (x // g, y // g, *tail)
                out[n].append(d_from_r(n, r))
    for n in out:
        out[n].sort(key=Structure.key)
    return out


def oracle_smooth(n: int) -> list[Structure]:
    if n > MAX_SMOOTH_N:
        raise ValueError(f"oracle_smooth is capped at n <= {MAX_SMOOTH_N}")
    return oracle_smooth_upto(n)[n]


def oracle_all(
    n: int,
    smooth_by_n: dict[int, list[Structure]] | None = None,
    cap: int | None = None,
) -> list[Structure]:
    """Every arithmetical structure on D_n, built explicitly.

    Descendants of all smooth structures on D_m (3 <= m <= n) plus the
    structures with a d = 1 prong, which come from paths on n-1 and n-2
    vertices.  Pass ``smooth_by_n`` to reuse a precomputed smooth table;
    ``cap`` overrides the default size limit.
    """
    cap = MAX_ALL_N if cap is None else cap
    if n > cap:
        raise ValueError(f"oracle_all is capped at n <= {cap}")
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if smooth_by_n is None:
        smooth_by_n = oracle_smooth_upto(n)
    seen: set[Structure] = set()
    for m in range(3, n + 1):
        for base in smooth_by_n[m]:
            for s in descendants(base, n):
                if s in seen:
                    raise AssertionError(f"duplicate descendant {s}")
                seen.add(s)
    for p in oracle_paths(n - 1):
        seen.add(attach_prong(p, "x"))
        seen.add(attach_prong(p, "y"))
    for p in oracle_paths(n - 2):
        seen.add(attach_prong(p, "both"))
    return sorted(seen, key=Structure.key)


def _nullspace(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    a = [[Fraction(v) for v in row] for row in rows]
    nrows, ncols = len(a), len(a[0])
    pivots = []
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        p = a[rk][col]
        a[rk] = [v / p for v in a[rk]]
        for i in range(nrows):
            if i != rk and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        pivots.append(col)
        rk += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fcol]
        basis.append(v)
    return basis


def kernel_check(s: Structure) -> bool:
    """L(D_n, d) has a one-dimensional kernel spanned by r."""
    basis = _nullspace(laplacian_variant_unchecked(s))
    if len(basis) != 1:
        return False
    v = basis[0]
    scale = v[0] / s.r[0]
    return all(x == scale * rv for x, rv in zip(v, s.r))


def laplacian_variant_unchecked(s: Structure) -> list[list[int]]:
    # same matrix as core.laplacian_variant without its L r = 0 assertion
    n = s.n
    m = [[0] * n for _ in range(n)]
    for i, v in enumerate(s.d):
        m[i][i] = v
    m[0][2] = m[2][0] = m[1][2] = m[2][1] = -1
    for i in range(2, n - 1):
        m[i][i + 1] = m[i + 1][i] = -1
    return m

