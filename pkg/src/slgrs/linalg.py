"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples of Python ints, so they are immutable,
hashable and never overflow.  Nothing in this module touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import ShapeError

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ShapeError("ragged matrix")
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def is_square(m: Matrix) -> bool:
    return all(len(r) == len(m) for r in m)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ShapeError(f"cannot multiply {shape(a)} by {shape(b)}")
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col) if x) for col in cols)
        for row in a
    )


def matvec(a: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v) if x) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in a)


def scale(c: int, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in a)


def is_symmetric(m: Matrix) -> bool:
    return is_square(m) and all(
        m[i][j] == m[j][i] for i in range(len(m)) for j in range(i)
    )


def columns(m: Matrix) -> tuple[Vector, ...]:
    return transpose(m)


def from_columns(cols: Sequence[Sequence[int]]) -> Matrix:
    return transpose(tuple(tuple(c) for c in cols))


def bilinear(form: Matrix, x: Sequence[int], y: Sequence[int]) -> int:
    """x^T * form * y."""
    return sum(xi * fy for xi, fy in zip(x, matvec(form, y)) if xi)


def gram(form: Matrix, vectors: Sequence[Sequence[int]]) -> Matrix:
    images = [matvec(form, v) for v in vectors]
    return tuple(
        tuple(sum(a * b for a, b in zip(u, img)) for img in images)
        for u in vectors
    )


def matpow(m: Matrix, k: int) -> Matrix:
    result = identity(len(m))
    base = m
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


# -- determinants and rank -------------------------------------------------

def det_exact(m: Matrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    if not is_square(m):
        raise ShapeError(f"determinant of non-square {shape(m)} matrix")
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is the Bareiss invariant
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_minors(m: Matrix) -> list[int]:
    return [det_exact(tuple(r[:k] for r in m[:k])) for k in range(1, len(m) + 1)]


def is_positive_definite(m: Matrix) -> bool:
    """Sylvester's criterion on exact leading principal minors."""
    if not is_symmetric(m):
        raise ShapeError("positive definiteness needs a symmetric matrix")
    return all(d > 0 for d in leading_minors(m))


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def row_echelon(m: Matrix) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form (fraction-free, rows kept primitive).

    Returns the non-zero echelon rows and their pivot columns.
    """
    rows = [list(r) for r in m if any(r)]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        a = prow[c]
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b:
                rows[i] = _primitive([a * x - b * y for x, y in zip(rows[i], prow)])
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Matrix) -> int:
    return len(row_echelon(m)[1]) if m else 0


# -- integer kernels --------------------------------------------------------

def hermite_rows(vectors: Sequence[Sequence[int]]) -> list[Vector]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Leading entries are positive; entries above each pivot are reduced into
    ``[0, pivot)``.  Zero rows are dropped.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    out: list[list[int]] = []
    r = 0
    for c in range(ncols):
        # Euclid on column c among rows r.. until a single non-zero remains
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[i0] = rows[i0], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if r < len(rows) and rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            piv = rows[r][c]
            for i in range(r):
                q = rows[i][c] // piv
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
            r += 1
            if r == len(rows):
                break
    out = [row for row in rows[:r] if any(row)]
    return [tuple(row) for row in out]


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.vectors)


def integer_kernel(m: Matrix, ncols: int | None = None) -> KernelBasis:
    """Basis of the integer lattice {x : m x = 0} in Hermite row form.

    Integer column operations bring ``m`` to lower echelon form; the
    unimodular transform's trailing columns then span the kernel lattice.
    """
    n = ncols if ncols is not None else (len(m[0]) if m else 0)
    a = [list(r) for r in m]
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns of U

    def colop(dst: int, src: int, q: int) -> None:
        for row in a:
            row[dst] -= q * row[src]
        for row in u:
            row[dst] -= q * row[src]

    def swap(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    c = 0
    for row in a:
        if c == n:
            break
        if not any(row[c:]):
            continue
        while True:
            j0 = min((j for j in range(c, n) if row[j]), key=lambda j: abs(row[j]))
            swap(c, j0)
            others = [j for j in range(c + 1, n) if row[j]]
            if not others:
                break
            for j in others:
                colop(j, c, row[j] // row[c])
        c += 1
    basis = [tuple(u[i][j] for i in range(n)) for j in range(c, n)]
    return KernelBasis(tuple(hermite_rows(basis)))


# -- rational solving -------------------------------------------------------

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Solution:
    values: tuple[Fraction, ...]

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError("solution is not integral")
        return tuple(int(v) for v in self.values)


@dataclass(frozen=True)
class NoSolution:
    inconsistent_row: int


@dataclass(frozen=True)
class NonUnique:
    particular: tuple[Fraction, ...]
    nullity: int


SolveResult = Union[Solution, NoSolution, NonUnique]


def solve_rational(
    a: Sequence[Sequence[Number]], b: Sequence[Number], nvars: int | None = None
) -> SolveResult:
    """Solve ``a x = b`` exactly.

    Rows are scaled to integers and reduced Gauss-Jordan style without
    fractions; zero entries are skipped, which keeps the sparse constraint
    systems assembled elsewhere in the package cheap.
    """
    n = nvars if nvars is not None else (len(a[0]) if a else 0)
    rows: list[list[int]] = []
    for i, (row, rhs) in enumerate(zip(a, b)):
        if len(row) != n:
            raise ShapeError(f"row {i} has {len(row)} entries, expected {n}")
        fr = [Fraction(x) for x in row] + [Fraction(rhs)]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append(_primitive([int(x * den) for x in fr]))
    if len(rows) != len(b):
        raise ShapeError("row count of a and b differ")
    origin = list(range(len(rows)))

    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        origin[r], origin[p] = origin[p], origin[r]
        prow = rows[r]
        nzcols = [j for j, x in enumerate(prow) if x]
        pa = prow[c]
        for i in range(len(rows)):
            if i == r:
                continue
            row = rows[i]
            bb = row[c]
            if not bb:
                continue
            g = gcd(pa, bb)
            fa, fb = pa // g, bb // g
            if fa != 1:
                row = [fa * x for x in row]
            for j in nzcols:
                row[j] -= fb * prow[j]
            rows[i] = _primitive(row)
        pivots.append(c)
        r += 1
        if r == len(rows):
            break

    for i in range(r, len(rows)):
        if rows[i][n]:
            return NoSolution(origin[i])
    values = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        values[c] = Fraction(rows[i][n], rows[i][c])
    if len(pivots) < n:
        return NonUnique(tuple(values), n - len(pivots))
    return Solution(tuple(values))


def inverse_rational(m: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse via Gauss-Jordan over the rationals."""
    if not is_square(m):
        raise ShapeError("inverse of non-square matrix")
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def inverse_unimodular(m: Matrix) -> Matrix:
    inv = inverse_rational(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


def charpoly(m: Matrix) -> tuple[int, ...]:
    """Coefficients of det(x*1 - m), highest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [1]
    mk = zeros(n, n)
    for k in range(1, n + 1):
        mk = add(matmul(m, mk), scale(coeffs[-1], identity(n)))
        tr = sum(row[i] for i, row in enumerate(matmul(m, mk)))
        # trace is divisible by k for integer matrices
        coeffs.append(-tr // k)
    return tuple(coeffs)
