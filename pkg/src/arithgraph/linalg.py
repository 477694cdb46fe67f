"""Exact integer matrix algebra.

Matrices are tuples of row tuples of Python ints, so entries never overflow.
The Smith normal form routine returns unimodular transforms ``u`` and ``v``
with ``u @ m @ v == d``; kernels and integer solutions are read off it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch, NoKernel, NoSolution, NotRankDeficientByOne

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and len({len(row) for row in m}) != 1:
        raise DimensionMismatch("ragged matrix rows")
    return m


def shape(m: IntMatrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> IntMatrix:
    return tuple((0,) * cols for _ in range(rows))


def diag(values: Sequence[int]) -> IntMatrix:
    n = len(values)
    return tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if shape(a)[1] != len(b):
        raise DimensionMismatch(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m: IntMatrix, x: Sequence[int]) -> IntVector:
    if shape(m)[1] != len(x):
        raise DimensionMismatch(f"cannot apply {shape(m)} matrix to vector of length {len(x)}")
    return tuple(sum(a * b for a, b in zip(row, x)) for row in m)


def matadd(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matsub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def determinant(m: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix) -> int:
    """Rank over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = shape(m)
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            raise ArithmeticError("matrix is singular")
        a[c], a[pivot] = a[pivot], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    inv = []
    for row in a:
        tail = row[n:]
        if any(x.denominator != 1 for x in tail):
            raise ArithmeticError("matrix is not unimodular")
        inv.append(tuple(int(x) for x in tail))
    return tuple(inv)


@dataclass(frozen=True)
class SnfDecomposition:
    """``u @ source @ v == d`` with ``u``, ``v`` unimodular and ``d`` diagonal."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> IntVector:
        rows, cols = shape(self.d)
        return tuple(self.d[i][i] for i in range(min(rows, cols)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def _min_pivot(a, t, rows, cols):
    best = None
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(m: Sequence[Sequence[int]]) -> SnfDecomposition:
    """Smith normal form with unimodular transforms.

    Pivots are chosen as the nonzero entry of least absolute value in the
    remaining block (ties: lowest row, then lowest column). The diagonal is
    nonnegative, satisfies ``d[i] | d[i+1]`` and has its zeros last.
    """
    a = [list(row) for row in as_matrix(m)]
    rows, cols = shape(as_matrix(m))
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            found = _min_pivot(a, t, rows, cols)
            if found is None:
                break
            _, pi, pj = found
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    # nearest-integer quotient keeps remainders small
                    q = -_round_div(a[i][t], p)
                    add_row(i, t, q)
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = -_round_div(a[t][j], p)
                    add_col(j, t, q)
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) if any(a[i][j] % p for j in range(t + 1, cols))),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        if a[t][t] == 0:
            break

    return SnfDecomposition(
        u=tuple(tuple(r) for r in u),
        d=tuple(tuple(r) for r in a),
        v=tuple(tuple(r) for r in v),
    )


def _round_div(x: int, p: int) -> int:
    q, r = divmod(x, p)
    # divmod follows the sign of p; move to the nearer quotient
    if 2 * abs(r) > abs(p):
        q += 1 if (r > 0) == (p > 0) else -1
    return q


def integer_kernel_primitive(m: Sequence[Sequence[int]]) -> IntVector:
    """Primitive integer generator of a one-dimensional kernel.

    Sign is fixed so the first nonzero entry is positive.
    """
    mat = as_matrix(m)
    snf = smith_normal_form(mat)
    cols = shape(mat)[1]
    nullity = cols - snf.rank
    if nullity == 0:
        raise NoKernel("matrix has trivial kernel")
    if nullity > 1:
        raise NotRankDeficientByOne(f"kernel has dimension {nullity}")
    k = snf.rank
    vec = [row[k] for row in snf.v]
    g = 0
    for x in vec:
        g = gcd(g, x)
    vec = [x // g for x in vec]
    first = next(x for x in vec if x)
    if first < 0:
        vec = [-x for x in vec]
    return tuple(vec)


def solve_integer(
    m: Sequence[Sequence[int]],
    b: Sequence[int],
    snf: SnfDecomposition | None = None,
) -> IntVector:
    """Some integer ``x`` with ``m @ x == b``; free SNF coordinates are set to zero.

    Pass a precomputed ``snf`` of ``m`` to avoid recomputation.
    """
    mat = as_matrix(m)
    rows, cols = shape(mat)
    if len(b) != rows:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {rows}")
    if snf is None:
        snf = smith_normal_form(mat)
    ub = matvec(snf.u, tuple(int(x) for x in b))
    dg = snf.diagonal
    y = [0] * cols
    for i in range(rows):
        di = dg[i] if i < len(dg) else 0
        if di == 0:
            if ub[i] != 0:
                raise NoSolution("right-hand side is outside the rational image")
            continue
        q, r = divmod(ub[i], di)
        if r:
            raise NoSolution("right-hand side is outside the integer image")
        y[i] = q
    return matvec(snf.v, y)
