from fractions import Fraction

import pytest

from bident.core import Structure
from bident.euclid import F
from bident.smooth import (
    PreconditionViolated,
    SmoothGenerators,
    count_smooth,
    enumerate_smooth,
    log_bounds,
    n_of_pair,
    parity_report,
    rbar,
    smooth_bounds_check,
    smooth_from_pair,
    smooth_from_triple,
    smooth_pairs,
)

from conftest import D4_NOT_SMOOTH, D4_PAIRS


def _chain_n(a, b):
    # independent vertex count: simulate the rbar chain directly
    c = a * b
    seq = [c, c - a - b]
    if seq[1] == 0:
        return 3
    while seq[-2] % seq[-1]:
        seq.append((-seq[-2]) % seq[-1])
    return len(seq) + 2


def test_generators():
    g = SmoothGenerators.from_pair(2, 7)
    assert (g.a, g.b, g.t, g.eps) == (7, 2, 2, 1)
    assert g.a + g.b == g.t * g.b**2 + g.eps


def test_triple_examples():
    s = smooth_from_triple(1, 1, 2)
    assert (s.n, s.d, s.r) == (3, (2, 2, 1), (1, 1, 2))
    s = smooth_from_triple(1, 2, 6)
    assert (s.d, s.r) == ((6, 3, 1, 2), (1, 2, 6, 3))
    for n in range(4, 30):
        s = smooth_from_triple(1, 1, 2 * n - 5)
        assert s.n == n
        assert s.r[2:] == tuple(2 * (n - i) - 5 for i in range(n - 2))


def test_triple_preconditions():
    for bad in [(0, 1, 2), (2, 2, 4), (2, 3, 7), (3, 1, 3), (1, 1, 1)]:
        with pytest.raises(PreconditionViolated):
            smooth_from_triple(*bad)


def test_pair_examples():
    s = smooth_from_pair(2, 2)
    assert (s.n, s.d) == (3, (2, 2, 1))
    s = smooth_from_pair(3, 2)
    assert (s.r, s.d) == ((3, 2, 6, 1), (2, 3, 1, 6))
    with pytest.raises(PreconditionViolated):
        smooth_from_pair(1, 5)


def test_rbar_of_pair():
    for a in range(2, 30):
        for b in range(2, 30):
            rb = rbar(smooth_from_pair(a, b))
            assert rb[:3] == (a, b, a * b)


def test_n_of_pair_examples():
    assert n_of_pair(3, 2) == 4 == smooth_from_pair(3, 2).n
    assert n_of_pair(2, 2) == 3


def test_n_of_pair_matches_chain():
    for b in range(2, 61):
        for a in range(b, 61):
            assert n_of_pair(a, b) == _chain_n(a, b) == n_of_pair(b, a), (a, b)


def test_n_formula_when_t_positive():
    for b in range(2, 12):
        for a in range(b, 400):
            t, eps = divmod(a + b, b * b)
            if t >= 1:
                assert smooth_from_pair(a, b).n == F(b * b, eps) + t + b - 1


def test_enumerate_examples():
    assert len(enumerate_smooth(3)) == 1
    d4 = enumerate_smooth(4)
    assert {(s.d, s.r) for s in d4} == {p for p in D4_PAIRS if p[0] not in D4_NOT_SMOOTH}
    assert len(enumerate_smooth(6)) == 50
    assert len(enumerate_smooth(43)) == 24310


def test_enumeration_is_sorted_and_unique():
    for n in range(3, 16):
        out = enumerate_smooth(n)
        assert out == sorted(out, key=Structure.key)
        assert len(set(out)) == len(out)


def test_count_examples():
    assert count_smooth(3) == 1
    assert count_smooth(5) == 16
    assert count_smooth(24) == 3806


def test_smooth_characterisation():
    for n in range(3, 21):
        for s in enumerate_smooth(n):
            r, d = s.r, s.d
            assert s.is_smooth()
            assert d[2] == 1
            if n > 3:
                assert r[0] < r[2] and r[1] < r[2]
                assert all(u > v for u, v in zip(r[2:], r[3:]))


def test_tail_conditions_equivalent(all_structures):
    # d_i >= 2 on the tail <=> gaps weakly shrinking with a positive last gap
    # <=> r strictly decreasing along the tail
    for n in range(4, 10):
        for s in all_structures(n):
            tail = s.r[2:]
            gaps = [u - v for u, v in zip(tail, tail[1:])]
            a = all(x >= 2 for x in s.d[3:])
            b = all(g >= h for g, h in zip(gaps, gaps[1:])) and gaps[-1] > 0
            c = all(g > 0 for g in gaps)
            assert a == b == c, s


def test_at_most_one_t_per_cell():
    for n in range(4, 30):
        cells = [(b, (a + b) % (b * b)) for a, b in smooth_pairs(n)]
        assert len(cells) == len(set(cells))


def test_exactly_b_squared_with_rbar_y_b():
    for n in range(6, 41):
        ordered = {o for a, b in smooth_pairs(n) for o in ((a, b), (b, a))}
        for b in (2, 3, 4):
            if n >= b * b + b:
                assert sum(1 for _, y in ordered if y == b) == b * b, (b, n)
    for n in (12, 20, 33):
        structs = enumerate_smooth(n)
        for b in (2, 3):
            assert sum(1 for s in structs if rbar(s)[1] == b) == b * b


def test_b_range():
    for n in range(4, 30):
        assert all(2 <= b <= 2 * n - 4 for _, b in smooth_pairs(n))


def test_log_bounds():
    import math

    for x in (1, 2, 3, 10, 40, 1000, 12345):
        lo, hi = log_bounds(x)
        assert lo <= hi and hi - lo <= Fraction(1, 10**15)
        assert float(lo) <= math.log(x) + 1e-12 and math.log(x) - 1e-12 <= float(hi)


def test_bounds_examples():
    lower, value, upper, ok = smooth_bounds_check(4)
    assert lower <= 0 and ok
    for n in (10, 43):
        lower, value, upper, ok = smooth_bounds_check(n)
        assert ok and lower <= value < upper
    assert smooth_bounds_check(43)[1] == 24310


def test_parity_rows_shape():
    rows = parity_report(5, 20)
    assert [r.n for r in rows] == list(range(5, 21))
    assert all(r.expected_sign == (1 if r.n % 2 == 0 else -1) for r in rows)
