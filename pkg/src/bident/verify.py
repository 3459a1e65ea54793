"""Named invariant suites, shared by the ``verify`` subcommand.

Each suite returns a list of :class:`Check`.  A failing check carries a
counterexample in ``detail``.  Checks with ``fatal=False`` are reported but
never fail the run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Optional

from . import critical, euclid, smooth, transform
from .core import laplacian_variant


@dataclass
class Check:
    name: str
    ok: bool
    cases: int = 0
    detail: Optional[dict] = None
    fatal: bool = True


@dataclass
class _Tally:
    name: str
    cases: int = 0
    failure: Optional[dict] = field(default=None)

    def record(self, ok: bool, **payload):
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = payload

    def result(self, fatal: bool = True) -> Check:
        return Check(self.name, self.failure is None, self.cases, self.failure, fatal)


def suite_lemmas_F(samples: int = 2000, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    F = euclid.F
    out = []

    t = _Tally("F(x, y) = F(x + k y, y)")
    for _ in range(samples):
        x, y, k = rng.randint(1, 500), rng.randint(1, 500), rng.randint(0, 20)
        t.record(F(x, y) == F(x + k * y, y), x=x, y=y, k=k)
    out.append(t.result())

    t = _Tally("F(x, k x + y) = F(x, y) + k")
    for _ in range(samples):
        x, y, k = rng.randint(1, 500), rng.randint(0, 500), rng.randint(0, 20)
        t.record(F(x, k * x + y) == F(x, y) + k, x=x, y=y, k=k)
    out.append(t.result())

    t = _Tally("F(a x, a y) = F(x, y)")
    for _ in range(samples):
        x, y, a = rng.randint(1, 500), rng.randint(0, 500), rng.randint(1, 50)
        t.record(F(a * x, a * y) == F(x, y), x=x, y=y, a=a)
    out.append(t.result())

    t = _Tally("F(x, x - 1) = x")
    for x in range(2, 1002):
        t.record(F(x, x - 1) == x, x=x)
    out.append(t.result())

    t = _Tally("F(x, y) <= y + 1")
    for _ in range(samples):
        x, y = rng.randint(1, 500), rng.randint(0, 500)
        t.record(F(x, y) <= y + 1, x=x, y=y)
    out.append(t.result())

    t = _Tally("F(x, y) <= (x + 1)/2 for 1 <= y <= x - 2")
    for x in range(3, 80):
        for y in range(1, x - 1):
            t.record(2 * F(x, y) <= x + 1, x=x, y=y)
    out.append(t.result())

    t = _Tally("F(x, y) = q_2 + F(r_1, r_2)")
    for _ in range(samples):
        y, r1 = rng.randint(1, 400), rng.randint(1, 400)
        q1, q2, r2 = rng.randint(0, 10), rng.randint(0, 10), rng.randint(0, 400)
        y = q2 * r1 + r2
        if y < 1:
            continue
        x = q1 * y + r1
        t.record(F(x, y) == q2 + F(r1, r2), x=x, y=y, q2=q2, r1=r1, r2=r2)
    out.append(t.result())

    t = _Tally("F from quotient sums matches the chain")
    for beta in range(2, 301):
        for eps in range(1, beta):
            got = euclid.F_from_quotients(euclid.quotients(beta, eps))
            t.record(got == (F(beta, eps), F(beta, beta - eps)), beta=beta, eps=eps, got=got)
    out.append(t.result())

    t = _Tally("S^o > b and S^e > b imply A_k > b^2")
    for b in range(2, 41):
        for eps in range(1, b * b):
            qv = euclid.quotients(b * b, eps)
            if qv.odd_sum > b and qv.even_sum > b:
                t.record(euclid.continuant(qv.q) > b * b, b=b, eps=eps, q=list(qv.q))
            else:
                t.record(True)
    out.append(t.result())

    t = _Tally("at least (b^2 + b)/2 eps with F(b^2, eps) <= b + 2")
    for b in range(2, 61):
        short = sum(1 for eps in range(b * b) if F(b * b, eps) <= b + 2)
        t.record(2 * short >= b * b + b, b=b, short=short)
    out.append(t.result())

    t = _Tally("beta = gcd(beta, eps) * A_k")
    for _ in range(samples):
        beta = rng.randint(2, 10**6)
        eps = rng.randint(1, beta - 1)
        qv = euclid.quotients(beta, eps)
        t.record(beta == gcd(beta, eps) * euclid.continuant(qv.q), beta=beta, eps=eps)
    out.append(t.result())
    return out


def suite_smooth_oracle(max_n: int = 25) -> list[Check]:
    from .oracle import oracle_smooth_upto

    table = oracle_smooth_upto(max_n)
    t = _Tally(f"oracle smooth set equals fast enumeration, 3 <= n <= {max_n}")
    for n in range(3, max_n + 1):
        fast = smooth.enumerate_smooth(n)
        t.record(fast == table[n], n=n, fast=len(fast), oracle=len(table[n]))
    return [t.result()]


def suite_total_oracle(max_n: int = 10) -> list[Check]:
    from .oracle import oracle_all, oracle_smooth_upto

    table = oracle_smooth_upto(max_n)
    t = _Tally(f"explicit enumeration size equals count_total, 3 <= n <= {max_n}")
    for n in range(3, max_n + 1):
        size = len(oracle_all(n, table))
        t.record(size == transform.count_total(n), n=n, oracle=size, formula=transform.count_total(n))
    return [t.result()]


def suite_critical(max_n: int = 8, m_max: int = 300, seed: int = 0) -> list[Check]:
    from .oracle import oracle_all, oracle_smooth_upto

    out = []
    snf_n = min(max_n, 8)
    table = oracle_smooth_upto(max(snf_n, 4))
    t = _Tally(f"SNF, Lorenzini product and r_0/(r_x r_y r_ell) agree, n <= {snf_n}")
    for n in range(3, snf_n + 1):
        for s in oracle_all(n, table):
            snf = critical.smith_normal_form(laplacian_variant(s))
            order = critical.group_order(s)
            nontrivial = [v for v in snf[:-1] if v != 1]
            ok = (
                snf[-1] == 0
                and len(nontrivial) <= 1
                and (nontrivial[0] if nontrivial else 1) == order
                and critical.lorenzini_order(s) == order
            )
            t.record(ok, structure=s.to_dict(), snf=list(snf), order=order)
    out.append(t.result())

    t = _Tally(f"smallest-coprime-k rule, 2 <= m <= {m_max}, except 6 and 210")
    for m in range(2, m_max + 1):
        if m in (6, 210):
            continue
        rule = critical.N_of(m, critical.smallest_coprime(m))
        t.record(critical.min_vertices(m) == rule, m=m, search=critical.min_vertices(m), rule=rule)
    out.append(t.result())

    t = _Tally("N(m, k) bounds for coprime m <= 10^4, k <= 100")
    rng = random.Random(seed)
    while t.cases < 2000:
        m, k = rng.randint(2, 10**4), rng.randint(2, 100)
        if gcd(m, k) != 1:
            continue
        N = critical.N_of(m, k)
        ok = N > Fraction((k - 1) * m, k) + 2
        if m % k == 1:
            ok = ok and N == Fraction((k - 1) * m + 1, k) + k
        t.record(ok, m=m, k=k, N=N)
    out.append(t.result())
    return out


def suite_bounds(max_n: int = 43) -> list[Check]:
    out = []
    t = _Tally(f"cubic sandwich on smooth counts, 4 <= n <= {max_n}")
    for n in range(4, max_n + 1):
        lower, value, upper, ok = smooth.smooth_bounds_check(n)
        t.record(ok, n=n, lower=str(lower), value=value, upper=float(upper))
    out.append(t.result())
    t = _Tally(f"Catalan sandwich on total counts, 4 <= n <= {max_n}")
    for n in range(4, max_n + 1):
        lower, value, upper, ok = transform.total_bounds_check(n)
        t.record(ok, n=n, lower=lower, value=value, upper=upper)
    out.append(t.result())
    return out


def suite_parity(max_n: int = 60) -> list[Check]:
    t = _Tally(f"second-difference parity pattern, 5 <= n <= {max_n}")
    for row in smooth.parity_report(5, max_n):
        t.record(row.holds, n=row.n, second_difference=row.second_difference)
    return [t.result(fatal=False)]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "lemmas-F": lambda max_n=None: suite_lemmas_F(),
    "smooth-oracle": lambda max_n=None: suite_smooth_oracle(max_n or 25),
    "total-oracle": lambda max_n=None: suite_total_oracle(max_n or 10),
    "critical": lambda max_n=None: suite_critical(max_n or 8),
    "bounds": lambda max_n=None: suite_bounds(max_n or 43),
    "parity": lambda max_n=None: suite_parity(max_n or 60),
}


def run_suite(name: str, max_n: Optional[int] = None) -> list[Check]:
    if name == "all":
        from .oracle import MAX_ALL_N, MAX_SMOOTH_N

        caps = {"smooth-oracle": MAX_SMOOTH_N, "total-oracle": MAX_ALL_N}
        out = []
        for key, fn in SUITES.items():
            limit = max_n
            if limit is not None and key in caps:
                limit = min(limit, caps[key])
            out.extend(fn(limit))
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_n)
