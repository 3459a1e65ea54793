from functools import lru_cache

import pytest

from bident.oracle import oracle_all, oracle_smooth_upto

D4_PAIRS = {
    ((1, 1, 3, 1), (1, 1, 1, 1)),
    ((3, 3, 1, 3), (1, 1, 3, 1)),
    ((6, 3, 1, 2), (1, 2, 6, 3)),
    ((3, 6, 1, 2), (2, 1, 6, 3)),
    ((6, 2, 1, 3), (1, 3, 6, 2)),
    ((2, 6, 1, 3), (3, 1, 6, 2)),
    ((3, 2, 1, 6), (2, 3, 6, 1)),
    ((2, 3, 1, 6), (3, 2, 6, 1)),
    ((2, 1, 2, 2), (1, 2, 2, 1)),
    ((1, 2, 2, 2), (2, 1, 2, 1)),
    ((2, 2, 2, 1), (1, 1, 2, 2)),
    ((4, 2, 1, 4), (1, 2, 4, 1)),
    ((2, 4, 1, 4), (2, 1, 4, 1)),
    ((4, 4, 1, 2), (1, 1, 4, 2)),
}
# the non-smooth ones: d = 1 at a prong or at v_1
D4_NOT_SMOOTH = {(1, 1, 3, 1), (2, 1, 2, 2), (1, 2, 2, 2), (2, 2, 2, 1)}


@lru_cache(maxsize=None)
def _smooth_table(n_max):
    return oracle_smooth_upto(n_max)


@lru_cache(maxsize=None)
def _all(n):
    return tuple(oracle_all(n, _smooth_table(12)))


@pytest.fixture(scope="session")
def smooth_table():
    """Oracle smooth structures for 3 <= n <= 25."""
    return _smooth_table(25)


@pytest.fixture(scope="session")
def all_structures():
    """Callable n -> every structure on D_n (n <= 12), cached."""
    return _all
