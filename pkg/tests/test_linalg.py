from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slgrs import linalg as la
from slgrs.errors import ShapeError

from conftest import ldl_positive_definite, leibniz_det

small = st.integers(-4, 4)


def square(n_min=1, n_max=4):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)
    ).map(la.as_matrix)


@st.composite
def symmetric(draw, n_min=1, n_max=4):
    n = draw(st.integers(n_min, n_max))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(small)
    return la.as_matrix(m)


def test_det_examples():
    assert la.det_exact(((2, -1), (-1, 2))) == 3
    assert la.det_exact(la.identity(5)) == 1
    assert la.det_exact(((2, 2, 2),) * 3) == 0
    assert la.det_exact(()) == 1


def test_det_rejects_non_square():
    with pytest.raises(ShapeError):
        la.det_exact(((1, 2, 3), (4, 5, 6)))


@given(square())
def test_det_matches_permutation_expansion(m):
    assert la.det_exact(m) == leibniz_det(m)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n, n), square(n, n))))
def test_det_is_multiplicative(pair):
    a, b = pair
    assert la.det_exact(la.matmul(a, b)) == la.det_exact(a) * la.det_exact(b)


@given(symmetric())
def test_positive_definite_matches_ldl(m):
    assert la.is_positive_definite(m) == ldl_positive_definite(m)


def test_positive_definite_needs_symmetry():
    with pytest.raises(ShapeError):
        la.is_positive_definite(((2, -1), (0, 2)))


def test_kernel_examples():
    assert la.integer_kernel(((2, 2, 2),) * 3).vectors == ((1, 0, -1), (0, 1, -1))
    assert la.integer_kernel(((2,),)).rank == 0
    assert la.integer_kernel(((2, -1), (-1, 2))).rank == 0
    assert la.integer_kernel(((0, 0),)).vectors == ((1, 0), (0, 1))


def test_kernel_is_saturated():
    # 2x + 4y = 0 has (2, -1) as lattice generator, not (4, -2)
    assert la.integer_kernel(((2, 4),)).vectors == ((2, -1),)


@given(st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                           min_size=r, max_size=r))))
def test_kernel_basis_spans_integer_kernel(rows):
    m = la.as_matrix(rows)
    n = len(m[0])
    basis = la.integer_kernel(m, n).vectors
    for v in basis:
        assert la.matvec(m, v) == (0,) * len(m)
    assert len(basis) == n - la.rank(m)
    # every small kernel vector is an integer combination of the basis
    for x in itertools.product(range(-2, 3), repeat=n):
        if any(x) and la.matvec(m, x) == (0,) * len(m):
            cols = la.transpose(basis)
            sol = la.solve_rational(cols, x, len(basis))
            assert isinstance(sol, la.Solution) and sol.is_integral


def test_hermite_rows_canonical():
    assert la.hermite_rows([(2, 4), (0, 3)]) == [(2, 1), (0, 3)]
    assert la.hermite_rows([(0, 3), (2, 4)]) == la.hermite_rows([(2, 7), (0, -3)])
    assert la.hermite_rows([(0, 0)]) == []


def test_solve_unique():
    sol = la.solve_rational(((1, 1), (1, -1)), (2, 0))
    assert sol == la.Solution((Fraction(1), Fraction(1)))
    assert sol.as_ints() == (1, 1)


def test_solve_inconsistent_and_underdetermined():
    assert isinstance(la.solve_rational(((1, 1), (1, 1)), (1, 2)), la.NoSolution)
    r = la.solve_rational(((1, 1),), (2,))
    assert isinstance(r, la.NonUnique) and r.nullity == 1


def test_solve_fractional():
    sol = la.solve_rational(((2,),), (1,))
    assert sol.values == (Fraction(1, 2),) and not sol.is_integral


def test_solve_euler_system_for_a2():
    # unknowns x11 x12 x21 x22; X + X^T = I and X C + X^T = 0 with C = [[0,-1],[1,-1]]
    c = ((0, -1), (1, -1))
    rows, rhs = [], []
    cartan = ((2, -1), (-1, 2))
    for i in range(2):
        for j in range(2):
            r = [0] * 4
            r[2 * i + j] += 1
            r[2 * j + i] += 1
            rows.append(r)
            rhs.append(cartan[i][j])
            r = [0] * 4
            for k in range(2):
                r[2 * i + k] += c[k][j]
            r[2 * j + i] += 1
            rows.append(r)
            rhs.append(0)
    assert la.solve_rational(rows, rhs).as_ints() == (1, -1, 0, 1)


@given(square())
def test_inverse_rational(m):
    if la.det_exact(m) == 0:
        with pytest.raises(ZeroDivisionError):
            la.inverse_rational(m)
        return
    inv = la.inverse_rational(m)
    n = len(m)
    prod = [[sum(Fraction(m[i][k]) * inv[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]


@given(square(1, 4))
def test_charpoly_constant_term_is_signed_det(m):
    n = len(m)
    poly = la.charpoly(m)
    assert poly[0] == 1
    assert poly[-1] == (-1) ** n * la.det_exact(m)
    assert poly[1] == -sum(m[i][i] for i in range(n))


def test_charpoly_a2_coxeter():
    assert la.charpoly(((0, -1), (1, -1))) == (1, 1, 1)


def test_matpow():
    c = ((0, -1), (1, -1))
    assert la.matpow(c, 3) == la.identity(2)
    assert la.matpow(c, 0) == la.identity(2)
