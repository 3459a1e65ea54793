"""Bident graphs and arithmetical structures on them.

Vertices of the bident ``D_n`` are always stored in the order
``(v_x, v_y, v_0, v_1, ..., v_ell)`` with ``ell = n - 3``.  The two prongs
``v_x`` and ``v_y`` hang off ``v_0``; the tail runs ``v_0 - v_1 - ... - v_ell``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


class StructureError(ValueError):
    """Base class for invalid (d, r) data."""


class NonPositiveEntry(StructureError):
    pass


class NotPrimitive(StructureError):
    pass


class LinearSystemViolated(StructureError):
    def __init__(self, vertex: str, lhs: int, rhs: int):
        self.vertex = vertex
        super().__init__(f"equation at v_{vertex} fails: {lhs} != {rhs}")


class NonIntegralD(StructureError):
    pass


@dataclass(frozen=True)
class BidentShape:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"a bident needs at least 3 vertices, got {self.n}")

    @property
    def ell(self) -> int:
        return self.n - 3

    def labels(self) -> list[str]:
        return ["x", "y"] + [str(i) for i in range(self.ell + 1)]


def index_of(pos) -> int:
    """Array index of a vertex label (``'x'``, ``'y'`` or a tail index)."""
    if pos == "x":
        return 0
    if pos == "y":
        return 1
    return int(pos) + 2


@dataclass(frozen=True, order=False)
class Structure:
    """An arithmetical structure ``(d, r)`` on ``D_n``.

    Instances built through :func:`validate` or :func:`d_from_r` are checked;
    the bare constructor does not check anything, so that bulk enumerators
    can skip the cost.
    """

    n: int
    d: tuple[int, ...]
    r: tuple[int, ...]

    @property
    def shape(self) -> BidentShape:
        return BidentShape(self.n)

    @property
    def ell(self) -> int:
        return self.n - 3

    def key(self) -> tuple[int, ...]:
        # canonical order: lexicographic on d in label order
        return self.d

    def __lt__(self, other: "Structure") -> bool:
        return (self.n, self.d) < (other.n, other.d)

    def is_smooth(self) -> bool:
        d = self.d
        return d[0] >= 2 and d[1] >= 2 and all(v >= 2 for v in d[3:])

    def to_dict(self) -> dict:
        return {"n": self.n, "d": list(self.d), "r": list(self.r)}

    @classmethod
    def from_dict(cls, obj: dict) -> "Structure":
        return validate(obj["n"], obj["d"], obj["r"])


def _shape_n(shape) -> int:
    return shape.n if isinstance(shape, BidentShape) else int(shape)


def neighbor_sums(n: int, r: Sequence[int]) -> list[int]:
    """Sum of the neighbors' r-values at each vertex of ``D_n``."""
    ell = n - 3
    rx, ry, r0 = r[0], r[1], r[2]
    out = [r0, r0]
    out.append(rx + ry + (r[3] if ell >= 1 else 0))
    for i in range(1, ell + 1):
        left = r[i + 1]
        right = r[i + 3] if i < ell else 0
        out.append(left + right)
    return out


def validate(shape, d: Sequence[int], r: Sequence[int]) -> Structure:
    """Check ``(d, r)`` against the definition and return a Structure."""
    n = _shape_n(shape)
    BidentShape(n)
    d = tuple(int(v) for v in d)
    r = tuple(int(v) for v in r)
    if len(d) != n or len(r) != n:
        raise StructureError(f"expected vectors of length {n}, got {len(d)} and {len(r)}")
    if any(v < 1 for v in d) or any(v < 1 for v in r):
        raise NonPositiveEntry(f"entries must be positive: d={d}, r={r}")
    g = 0
    for v in r:
        g = gcd(g, v)
    if g != 1:
        raise NotPrimitive(f"gcd of r is {g}")
    labels = BidentShape(n).labels()
    for lab, dv, rv, s in zip(labels, d, r, neighbor_sums(n, r)):
        if dv * rv != s:
            raise LinearSystemViolated(lab, dv * rv, s)
    return Structure(n, d, r)


def d_from_r(shape, r: Sequence[int]) -> Structure:
    """Recover the unique d-vector for a primitive r-vector on ``D_n``."""
    n = _shape_n(shape)
    r = tuple(int(v) for v in r)
    if len(r) != n:
        raise StructureError(f"expected r of length {n}, got {len(r)}")
    if any(v < 1 for v in r):
        raise NonPositiveEntry(f"entries must be positive: r={r}")
    labels = BidentShape(n).labels()
    d = []
    for lab, rv, s in zip(labels, r, neighbor_sums(n, r)):
        q, rem = divmod(s, rv)
        if rem:
            raise NonIntegralD(f"d_{lab} = {s}/{rv} is not an integer")
        d.append(q)
    return validate(n, d, r)


def adjacency_pairs(n: int) -> list[tuple[int, int]]:
    """Edges of ``D_n`` as pairs of array indices."""
    edges = [(0, 2), (1, 2)]
    edges += [(i, i + 1) for i in range(2, n - 1)]
    return edges


def degrees(n: int) -> list[int]:
    deg = [0] * n
    for i, j in adjacency_pairs(n):
        deg[i] += 1
        deg[j] += 1
    return deg


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __matmul__(self, vec: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, vec)) for row in self.entries]


def laplacian_variant(s: Structure) -> ExactMatrix:
    """``L(D_n, d) = diag(d) - A`` as an exact integer matrix."""
    n = s.n
    m = [[0] * n for _ in range(n)]
    for i, v in enumerate(s.d):
        m[i][i] = v
    for i, j in adjacency_pairs(n):
        m[i][j] = -1
        m[j][i] = -1
    mat = ExactMatrix(tuple(tuple(row) for row in m))
    assert all(v == 0 for v in mat @ s.r)
    return mat


def rank(mat: ExactMatrix | Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by Gaussian elimination on Fractions."""
    rows = mat.rows() if isinstance(mat, ExactMatrix) else [list(r) for r in mat]
    a = [[Fraction(v) for v in row] for row in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        for i in range(rk + 1, nrows):
            if a[i][col]:
                f = a[i][col] / a[rk][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
        if rk == nrows:
            break
    return rk
