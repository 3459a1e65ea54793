"""Smoothing, subdivision, subdivision sequences and the total count."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence, Union

from .core import Structure, index_of
from .smooth import count_smooth


class NotSmoothable(ValueError):
    pass


class ProngSmoothingLeavesPath(ValueError):
    pass


class InvalidPosition(ValueError):
    pass


class ProngDegreeOne(ValueError):
    pass


@dataclass(frozen=True)
class SubdivisionSequence:
    base_m: int
    b: tuple[int, ...]

    def __post_init__(self):
        for i, bi in enumerate(self.b, start=1):
            if not 1 <= bi <= self.base_m - 3 + i:
                raise InvalidPosition(
                    f"b_{i} = {bi} outside 1..{self.base_m - 3 + i} for base D_{self.base_m}"
                )

    def is_canonical(self) -> bool:
        return all(x <= y for x, y in zip(self.b, self.b[1:]))


SeqLike = Union[SubdivisionSequence, Sequence[int]]


def smooth_at(s: Structure, pos) -> Structure:
    """Remove a vertex with d = 1 from the tail (positions 1..ell)."""
    ell = s.ell
    if pos in ("x", "y"):
        if s.d[index_of(pos)] != 1:
            raise NotSmoothable(f"d_{pos} = {s.d[index_of(pos)]} != 1")
        raise ProngSmoothingLeavesPath(f"smoothing at v_{pos} leaves a path graph")
    pos = int(pos)
    if not 1 <= pos <= ell:
        raise InvalidPosition(f"position {pos} outside 1..{ell}")
    k = index_of(pos)
    if s.d[k] != 1:
        raise NotSmoothable(f"d_{pos} = {s.d[k]} != 1")
    d = list(s.d)
    r = list(s.r)
    d[k - 1] -= 1
    if pos < ell:
        d[k + 1] -= 1
    del d[k]
    del r[k]
    return Structure(s.n - 1, tuple(d), tuple(r))


def subdivide_at(s: Structure, pos) -> Structure:
    """Insert a d = 1 vertex at tail position 1..ell+1."""
    ell = s.ell
    if pos in ("x", "y"):
        raise InvalidPosition("prong subdivision starts from a path structure")
    pos = int(pos)
    if not 1 <= pos <= ell + 1:
        raise InvalidPosition(f"position {pos} outside 1..{ell + 1}")
    k = index_of(pos)
    d = list(s.d)
    r = list(s.r)
    if pos <= ell:
        d[k - 1] += 1
        d[k] += 1
        d.insert(k, 1)
        r.insert(k, r[k - 1] + r[k])
    else:
        d[k - 1] += 1
        d.append(1)
        r.append(r[k - 1])
    return Structure(s.n + 1, tuple(d), tuple(r))


def _seq(base_m: int, seq: SeqLike) -> SubdivisionSequence:
    if isinstance(seq, SubdivisionSequence):
        if seq.base_m != base_m:
            raise InvalidPosition(f"sequence is for D_{seq.base_m}, structure is on D_{base_m}")
        return seq
    return SubdivisionSequence(base_m, tuple(seq))


def apply_sequence(s0: Structure, seq: SeqLike) -> Structure:
    seq = _seq(s0.n, seq)
    s = s0
    for bi in seq.b:
        s = subdivide_at(s, bi)
    return s


def canonicalize_sequence(seq: SubdivisionSequence) -> SubdivisionSequence:
    """Sort a subdivision sequence by repeated adjacent swaps (b_j, b_j+1) -> (b_j+1, b_j + 1)."""
    b = list(seq.b)
    j = 0
    while j < len(b) - 1:
        if b[j] > b[j + 1]:
            b[j], b[j + 1] = b[j + 1], b[j] + 1
            j = max(j - 1, 0)
        else:
            j += 1
    return SubdivisionSequence(seq.base_m, tuple(b))


def smooth_ancestor(s: Structure) -> tuple[Structure, SubdivisionSequence]:
    """Smooth away every tail vertex with d = 1, largest position first.

    Returns the smooth ancestor together with the nondecreasing sequence
    that rebuilds ``s`` from it.
    """
    if s.d[0] == 1 or s.d[1] == 1:
        raise ProngDegreeOne("d_x = 1 or d_y = 1: no smooth ancestor on a bident")
    positions = []
    cur = s
    while True:
        ones = [i for i in range(1, cur.ell + 1) if cur.d[i + 2] == 1]
        if not ones:
            break
        j = ones[-1]
        cur = smooth_at(cur, j)
        positions.append(j)
    return cur, SubdivisionSequence(cur.n, tuple(reversed(positions)))


def descendants(s0: Structure, n: int) -> Iterator[Structure]:
    """Every descendant of ``s0`` on ``D_n``, each produced exactly once.

    Walks nondecreasing valid subdivision sequences depth first.
    """
    steps = n - s0.n
    if steps < 0:
        return

    def walk(s: Structure, lo: int, left: int):
        if left == 0:
            yield s
            return
        for p in range(lo, s.ell + 2):
            yield from walk(subdivide_at(s, p), p, left - 1)

    yield from walk(s0, 1, steps)


def nondecreasing_sequences(base_m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing valid subdivision sequences of length n - base_m."""
    length = n - base_m

    def walk(prefix: list[int], lo: int):
        i = len(prefix) + 1
        if i > length:
            yield tuple(prefix)
            return
        for p in range(lo, base_m - 3 + i + 1):
            prefix.append(p)
            yield from walk(prefix, p)
            prefix.pop()

    yield from walk([], 1)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def ballot(n: int, k: int) -> int:
    """``B(n, k) = (n-k+1)/(n+1) * C(n+k, n)``, zero for ``k > n``."""
    if k < 0 or n < 0:
        raise ValueError("n and k must be >= 0")
    if k > n:
        return 0
    num = (n - k + 1) * comb(n + k, n)
    q, rem = divmod(num, n + 1)
    assert rem == 0
    return q


def count_descendants(m: int, n: int) -> int:
    if not 3 <= m <= n:
        raise ValueError(f"need 3 <= m <= n, got m={m}, n={n}")
    return ballot(n - 3, n - m)


@lru_cache(maxsize=None)
def count_total(n: int) -> int:
    """``|Arith(D_n)| = 2 C(n-2) + sum_{m=4}^n B(n-3, n-m) |SArith(D_m)|``."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return 2 * catalan(n - 2) + sum(
        ballot(n - 3, n - m) * count_smooth(m) for m in range(4, n + 1)
    )


def total_bounds_check(n: int) -> tuple[int, int, int, bool]:
    """``2C(n-2) + C(n-3) <= |Arith(D_n)| < 2C(n-2) + 702 C(n-3)``."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    base = 2 * catalan(n - 2)
    lower = base + catalan(n - 3)
    upper = base + 702 * catalan(n - 3)
    value = count_total(n)
    return lower, value, upper, lower <= value < upper
