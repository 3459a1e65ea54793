"""Smooth arithmetical structures on bidents.

A smooth structure is pinned down by the two prong values of its rescaled
r-vector ``rbar = (r_0 / (r_x r_y)) * r``.  Writing ``a >= b`` for those two
values and ``a + b = t*b^2 + eps``, the bident it lives on has
``n = F(b^2, eps) + t + floor(ab / (a + b))`` vertices.  Counting smooth
structures on a fixed ``D_n`` therefore reduces to a scan over ``(b, eps)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator

from .core import Structure, d_from_r
from .euclid import F_fast, F_square_row


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class SmoothGenerators:
    a: int
    b: int
    t: int
    eps: int

    @classmethod
    def from_pair(cls, a: int, b: int) -> "SmoothGenerators":
        a, b = max(a, b), min(a, b)
        t, eps = divmod(a + b, b * b)
        return cls(a, b, t, eps)


def rbar(s: Structure) -> tuple[int, ...]:
    rx, ry, r0 = s.r[0], s.r[1], s.r[2]
    scale, rem = divmod(r0, rx * ry)
    assert rem == 0
    return tuple(scale * v for v in s.r)


def _tail(a: int, b: int, c: int) -> list[int]:
    r = [c, c - a - b]
    while r[-2] % r[-1]:
        r.append((-r[-2]) % r[-1])
    return r


def smooth_from_triple(a: int, b: int, c: int) -> Structure:
    """The unique smooth structure with ``r_x = a, r_y = b, r_0 = c``."""
    if min(a, b, c) < 1:
        raise PreconditionViolated(f"entries must be positive: {(a, b, c)}")
    if gcd(gcd(a, b), c) != 1:
        raise PreconditionViolated(f"{(a, b, c)} share a common factor")
    if c % a or c % b or not (a < c and b < c):
        raise PreconditionViolated(f"need a | c, b | c, a < c, b < c: {(a, b, c)}")
    if c == 2 * a == 2 * b:
        return d_from_r(3, (a, b, c))
    tail = _tail(a, b, c)
    r = (a, b, *tail)
    s = d_from_r(len(r), r)
    assert s.is_smooth() and s.d[2] == 1
    return s


def smooth_from_pair(a: int, b: int) -> Structure:
    """The smooth structure with ``rbar_x = a`` and ``rbar_y = b``."""
    if a < 2 or b < 2:
        raise PreconditionViolated(f"need a, b >= 2, got ({a}, {b})")
    g = gcd(a, b)
    return smooth_from_triple(a // g, b // g, a * b // g)


def n_of_pair(a: int, b: int) -> int:
    """Vertex count of the bident carrying the ``(a, b)`` smooth structure."""
    if a < 2 or b < 2:
        raise PreconditionViolated(f"need a, b >= 2, got ({a}, {b})")
    a, b = max(a, b), min(a, b)
    t, eps = divmod(a + b, b * b)
    return F_fast(b * b, eps) + t + (a * b) // (a + b)


def smooth_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Unordered pairs ``(a, b)``, ``a >= b``, of smooth structures on ``D_n``.

    Scans ``2 <= b <= 2n - 4`` and ``0 <= eps < b^2`` and applies the case
    split below in the printed order; at most one ``t`` survives per cell.
    """
    if n == 3:
        yield (2, 2)
        return
    for b in range(2, 2 * n - 3):
        bb = b * b
        row = F_square_row(b)
        for eps in range(bb):
            f = row[eps]
            if f + b - 1 < n:
                t = n - f - b + 1
                yield (t * bb + eps - b, b)
                continue
            # only t = 0 remains, and then a = eps - b must be >= b
            if eps < 2 * b:
                continue
            v = f + ((eps - b) * b) // eps
            if v == n:
                yield (eps - b, b)


def enumerate_smooth(n: int) -> list[Structure]:
    """All smooth structures on ``D_n`` in canonical order."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    out = []
    for a, b in smooth_pairs(n):
        out.append(smooth_from_pair(a, b))
        if a > b:
            out.append(smooth_from_pair(b, a))
    for s in out:
        assert s.n == n, (s, n)
    out.sort(key=Structure.key)
    return out


@lru_cache(maxsize=None)
def count_smooth(n: int) -> int:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return sum(2 if a > b else 1 for a, b in smooth_pairs(n))


def log_bounds(x: int, tol: Fraction = Fraction(1, 10**15)) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= log(x) <= hi`` with ``hi - lo <= tol`` for ``x >= 1``.

    Uses ``log(x) = j*log(2) + 2*atanh(s)`` with ``s = (y-1)/(y+1) <= 1/3``
    after halving ``x`` into ``[1, 2)``; the atanh tail is bounded by a
    geometric series.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    j = x.bit_length() - 1
    y = Fraction(x, 1 << j)

    def atanh2(s: Fraction, budget: Fraction) -> tuple[Fraction, Fraction]:
        # 2 * atanh(s) = 2 * sum s^(2i+1) / (2i+1)
        total = Fraction(0)
        term = s
        i = 0
        s2 = s * s
        while True:
            total += 2 * term / (2 * i + 1)
            term *= s2
            i += 1
            tail = 2 * term / ((2 * i + 1) * (1 - s2))
            if tail <= budget:
                return total, total + tail

    budget = tol / (2 * (j + 1))
    lo_y, hi_y = atanh2((y - 1) / (y + 1), budget)
    lo_2, hi_2 = atanh2(Fraction(1, 3), budget)
    return lo_y + j * lo_2, hi_y + j * hi_2


def smooth_lower_bound(n: int) -> Fraction:
    return Fraction(n**3 - 3 * n**2 - n - 45, 24)


def smooth_upper_bound(n: int, log_value: Fraction) -> Fraction:
    poly = Fraction(2, 3) * n**3 - 2 * n**2 + Fraction(16, 3) * n - 6
    return poly + (2 * n**2 - 4 * n + 2) * log_value


def smooth_bounds_check(n: int) -> tuple[Fraction, int, Fraction, bool]:
    """Cubic sandwich around ``count_smooth(n)``.

    The reported upper bound uses a rational over-approximation of
    ``log(n - 3)``.  The strict upper inequality is decided against the
    under-approximation, so ``ok`` never relies on rounding in our favour.
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    lo_log, hi_log = log_bounds(n - 3)
    value = count_smooth(n)
    lower = smooth_lower_bound(n)
    upper = smooth_upper_bound(n, hi_log)
    ok = lower <= value < smooth_upper_bound(n, lo_log)
    return lower, value, upper, ok


@dataclass(frozen=True)
class ParityRow:
    n: int
    second_difference: int
    expected_sign: int
    holds: bool


def parity_report(n_from: int = 5, n_to: int = 60) -> list[ParityRow]:
    """Sign of (X_n - X_{n-1}) - (X_{n+1} - X_n) with X_n = count_smooth(n).

    Empirically positive for even n and negative for odd n.
    """
    rows = []
    for n in range(n_from, n_to + 1):
        x = [count_smooth(m) for m in (n - 1, n, n + 1)]
        diff = (x[1] - x[0]) - (x[2] - x[1])
        expected = 1 if n % 2 == 0 else -1
        holds = diff * expected > 0
        rows.append(ParityRow(n, diff, expected, holds))
    return rows
