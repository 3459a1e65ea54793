"""The chain length function F and Euclidean-algorithm quotient data."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


@dataclass(frozen=True)
class ChainResult:
    terms: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.terms)


def chain(x1: int, x2: int) -> ChainResult:
    """Positive terms of x_{i+1} = (-x_{i-1}) mod x_i started at (x1, x2)."""
    if x1 < 1 or x2 < 0:
        raise ValueError(f"need x1 >= 1 and x2 >= 0, got ({x1}, {x2})")
    terms = [x1]
    prev, cur = x1, x2
    while cur > 0:
        terms.append(cur)
        prev, cur = cur, (-prev) % cur
    return ChainResult(tuple(terms))


def F(x1: int, x2: int) -> int:
    """Number of positive terms in the chain; ``F(x, 0) == 1``."""
    if x1 < 1 or x2 < 0:
        raise ValueError(f"need x1 >= 1 and x2 >= 0, got ({x1}, {x2})")
    k = 1
    prev, cur = x1, x2
    while cur > 0:
        k += 1
        prev, cur = cur, (-prev) % cur
    return k


@dataclass(frozen=True)
class QuotientVector:
    q: tuple[int, ...]
    beta: int
    eps: int

    @property
    def k(self) -> int:
        return len(self.q)

    @property
    def odd_sum(self) -> int:
        # q_1, q_3, ... (1-based odd positions)
        return sum(self.q[0::2])

    @property
    def even_sum(self) -> int:
        return sum(self.q[1::2])


def quotients(beta: int, eps: int) -> QuotientVector:
    """Quotients of the classical Euclidean algorithm on (beta, eps)."""
    if not 0 < eps < beta:
        raise ValueError(f"need 0 < eps < beta, got beta={beta}, eps={eps}")
    q = []
    a, b = beta, eps
    while b:
        qi, rem = divmod(a, b)
        q.append(qi)
        a, b = b, rem
    return QuotientVector(tuple(q), beta, eps)


def F_from_quotients(qv: QuotientVector) -> tuple[int, int]:
    """``(F(beta, eps), F(beta, beta - eps))`` from the quotient sums alone."""
    if qv.k % 2 == 0:
        return qv.even_sum + 1, qv.odd_sum + 1
    return qv.even_sum + 2, qv.odd_sum


def F_fast(x1: int, x2: int) -> int:
    """F computed through the quotient sums; O(log) instead of O(F)."""
    if x2 == 0:
        return 1
    if x2 >= x1:
        # F(x, kx + y) = F(x, y) + k
        k, y = divmod(x2, x1)
        return F_fast(x1, y) + k
    return F_from_quotients(quotients(x1, x2))[0]


@lru_cache(maxsize=None)
def F_square_row(b: int) -> tuple[int, ...]:
    """``F(b*b, eps)`` for every ``0 <= eps < b*b``."""
    bb = b * b
    return tuple(F_fast(bb, eps) for eps in range(bb))


def continuant(q: Sequence[int]) -> int:
    """Upper-left entry of prod_i [[q_i, 1], [1, 0]]."""
    if not q:
        raise ValueError("continuant of an empty sequence")
    prev, cur = 1, q[0]
    for qi in q[1:]:
        prev, cur = cur, qi * cur + prev
    return cur
