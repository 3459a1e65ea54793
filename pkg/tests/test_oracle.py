import random

import pytest

from bident.core import Structure, validate
from bident.oracle import (
    PathStructure,
    attach_prong,
    kernel_check,
    oracle_all,
    oracle_paths,
    oracle_smooth,
)
from bident.smooth import enumerate_smooth
from bident.transform import catalan, count_total

from conftest import D4_NOT_SMOOTH, D4_PAIRS


def test_paths_small():
    (p,) = oracle_paths(2)
    assert (p.d, p.r) == ((1, 1), (1, 1))
    assert len(oracle_paths(4)) == 5
    assert len(oracle_paths(7)) == 132


def test_path_counts_are_catalan():
    cases = 0
    for k in range(1, 10):
        paths = oracle_paths(k)
        assert len(paths) == catalan(k - 1)
        assert all(p.is_valid() for p in paths)
        cases += len(paths)
    assert cases >= 1000


def test_path_validity_rejects():
    assert not PathStructure(2, (1, 1), (2, 2)).is_valid()
    assert not PathStructure(2, (2, 1), (1, 1)).is_valid()


def test_attach_prong():
    p = PathStructure(3, (1, 2, 1), (1, 1, 1))
    assert attach_prong(p, "x") == validate(4, (1, 1, 3, 1), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        attach_prong(p, "z")


def test_oracle_smooth_examples():
    d4 = oracle_smooth(4)
    assert {(s.d, s.r) for s in d4} == {p for p in D4_PAIRS if p[0] not in D4_NOT_SMOOTH}
    assert len(oracle_smooth(7)) == 52


def test_oracle_smooth_matches_fast(smooth_table):
    for n in range(3, 26):
        assert smooth_table[n] == enumerate_smooth(n), n


def test_oracle_all_small(all_structures):
    assert len(all_structures(3)) == 2
    assert {(s.d, s.r) for s in all_structures(4)} == D4_PAIRS


def test_oracle_all_matches_count(all_structures):
    for n in range(3, 13):
        got = all_structures(n)
        assert len(got) == count_total(n), n
        assert len(set(got)) == len(got)


def test_oracle_all_structures_valid(all_structures):
    for n in range(3, 10):
        for s in all_structures(n):
            assert validate(s.n, s.d, s.r) == s


def test_caps():
    with pytest.raises(ValueError):
        oracle_all(99)
    with pytest.raises(ValueError):
        oracle_smooth(99)


def test_kernel_check(all_structures):
    for s in all_structures(4):
        assert kernel_check(s)
        bumped = list(s.d)
        bumped[2] += 1
        assert not kernel_check(Structure(4, tuple(bumped), s.r))
    rng = random.Random(3)
    pool = [s for n in range(5, 11) for s in all_structures(n)]
    for s in rng.sample(pool, 300):
        assert kernel_check(s)
