from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bident.euclid import (
    F,
    F_fast,
    F_from_quotients,
    F_square_row,
    chain,
    continuant,
    quotients,
)

THOUSAND = settings(max_examples=1000, deadline=None)
pos = st.integers(1, 500)
nonneg = st.integers(0, 500)


def test_chain_examples():
    assert chain(17, 12).terms == (17, 12, 7, 2, 1)
    assert F(17, 12) == 5
    assert chain(36, 23).terms == (36, 23, 10, 7, 4, 1)
    assert F(36, 23) == 6 and F(36, 13) == 5
    assert chain(5, 5).terms == (5, 5) and F(5, 5) == 2
    assert chain(7, 0).length == 1
    for x in (1, 2, 99, 10**30):
        assert F(x, 0) == 1


def test_chain_rejects_bad_input():
    with pytest.raises(ValueError):
        F(0, 3)
    with pytest.raises(ValueError):
        F(3, -1)


def test_quotient_examples():
    qv = quotients(36, 23)
    assert qv.q == (1, 1, 1, 3, 3)
    assert (qv.odd_sum, qv.even_sum) == (5, 4)
    assert F_from_quotients(qv) == (6, 5)
    assert quotients(10, 5).q == (2,)
    assert F_from_quotients(quotients(10, 5))[0] == F(10, 5) == 2
    assert quotients(7, 3).q == (2, 3)
    assert F_from_quotients(quotients(7, 3))[0] == F(7, 3) == 4
    with pytest.raises(ValueError):
        quotients(5, 0)
    with pytest.raises(ValueError):
        quotients(5, 5)


def test_continuant_examples():
    assert continuant((1, 1, 1, 3, 3)) == 36
    assert continuant((7,)) == 7
    assert continuant((2, 3)) == 7


def test_long_chain_is_iterative():
    # F(x, x-1) = x would blow the recursion limit if F recursed
    assert F(10**5, 10**5 - 1) == 10**5


@THOUSAND
@given(pos, pos, st.integers(0, 20))
def test_F_shift_first(x, y, k):
    assert F(x, y) == F(x + k * y, y)


@THOUSAND
@given(pos, nonneg, st.integers(0, 20))
def test_F_shift_second(x, y, k):
    assert F(x, k * x + y) == F(x, y) + k


@THOUSAND
@given(pos, nonneg, st.integers(1, 50))
def test_F_scale_invariant(x, y, a):
    assert F(a * x, a * y) == F(x, y)


def test_F_consecutive():
    for x in range(2, 501):
        assert F(x, x - 1) == x


@THOUSAND
@given(pos, nonneg)
def test_F_at_most_y_plus_one(x, y):
    assert F(x, y) <= y + 1


def test_F_at_most_half_x():
    cases = 0
    for x in range(3, 60):
        for y in range(1, x - 1):
            assert 2 * F(x, y) <= x + 1
            cases += 1
    assert cases >= 1000


@THOUSAND
@given(st.integers(1, 300), st.integers(0, 10), st.integers(0, 10), st.integers(0, 300))
def test_F_two_division_steps(r1, q1, q2, r2):
    y = q2 * r1 + r2
    if y == 0:
        return
    x = q1 * y + r1
    assert F(x, y) == q2 + F(r1, r2)


def test_F_from_quotients_exhaustive():
    for beta in range(2, 301):
        for eps in range(1, beta):
            assert F_from_quotients(quotients(beta, eps)) == (F(beta, eps), F(beta, beta - eps))


@THOUSAND
@given(st.integers(1, 10**12), st.integers(0, 10**12))
def test_F_fast_matches_chain(x, y):
    # keep F(x, y) small enough for the chain by bounding y/x
    y = y % (50 * x + 1)
    assert F_fast(x, y) == F(x, y)


def test_square_row():
    for b in range(2, 15):
        assert F_square_row(b) == tuple(F(b * b, e) for e in range(b * b))


def test_large_quotient_sums_force_large_continuant():
    cases = 0
    for b in range(2, 41):
        for eps in range(1, b * b):
            qv = quotients(b * b, eps)
            cases += 1
            if qv.odd_sum > b and qv.even_sum > b:
                assert continuant(qv.q) > b * b
    assert cases >= 1000


def test_half_of_eps_give_short_chains():
    for b in range(2, 61):
        short = sum(1 for eps in range(b * b) if F(b * b, eps) <= b + 2)
        assert 2 * short >= b * b + b, b


@THOUSAND
@given(st.integers(2, 10**9), st.data())
def test_beta_is_gcd_times_continuant(beta, data):
    eps = data.draw(st.integers(1, beta - 1))
    assert beta == gcd(beta, eps) * continuant(quotients(beta, eps).q)


@THOUSAND
@given(st.integers(2, 200), st.data())
def test_quotients_square_gcd(b, data):
    eps = data.draw(st.integers(1, b * b - 1))
    qv = quotients(b * b, eps)
    assert qv.odd_sum + qv.even_sum == sum(qv.q)
    assert b * b == gcd(b * b, eps) * continuant(qv.q)
