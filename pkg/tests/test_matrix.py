"""Exact linear algebra core: frozen examples plus algebraic properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coringlab import (
    GF,
    QQ,
    FieldMismatch,
    Matrix,
    ShapeError,
    direct_sum,
    hstack,
    kron,
    left_inverse,
    same_column_space,
    solve_affine,
    solve_matrix,
    unvec,
    vec,
    vstack,
)
from conftest import field_and_matrix, field_and_square, fields, matrices, scalars


def M(field, entries):
    return Matrix(field, entries)


# -- frozen examples ---------------------------------------------------------


def test_rref_identity():
    R, pivots = Matrix.identity(QQ, 2).rref()
    assert R == Matrix.identity(QQ, 2)
    assert pivots == (0, 1)


def test_rref_zero():
    R, pivots = Matrix.zero(QQ, 2, 3).rref()
    assert R == Matrix.zero(QQ, 2, 3)
    assert pivots == ()


def test_rref_rank_one():
    R, pivots = M(QQ, [[2, 4], [1, 2]]).rref()
    assert R == M(QQ, [[1, 2], [0, 0]])
    assert pivots == (0,)


def test_kernel_of_identity_is_trivial():
    K = Matrix.identity(QQ, 3).kernel_basis()
    assert K.rows == 3 and K.cols == 0


def test_kernel_of_zero_is_everything():
    K = Matrix.zero(QQ, 3, 3).kernel_basis()
    assert K == Matrix.identity(QQ, 3)


def test_kernel_of_sum_functional():
    K = M(QQ, [[1, 1]]).kernel_basis()
    assert K == M(QQ, [[-1], [1]])


def test_solve_affine_identity_system():
    b = Matrix.column(QQ, [2, 5])
    res = solve_affine([(Matrix.identity(QQ, 2), b)])
    assert res.feasible
    assert res.x0 == b
    assert res.nullspace.cols == 0


def test_solve_affine_inconsistent():
    L = M(QQ, [[1, 1]])
    res = solve_affine([(L, Matrix.column(QQ, [1])), (L, Matrix.column(QQ, [2]))])
    assert not res.feasible
    assert res.rank_deficit == 1


def test_solve_affine_underdetermined():
    res = solve_affine([(M(QQ, [[1, 0]]), Matrix.column(QQ, [3]))])
    assert res.feasible
    assert res.x0 == Matrix.column(QQ, [3, 0])
    assert res.nullspace == M(QQ, [[0], [1]])


def test_prime_field_inverse():
    F = GF(7)
    for a in range(1, 7):
        assert F.inv(a) * a % 7 == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_rational_scalar_format():
    assert QQ.format_scalar(Fraction(-4, 6)) == "-2/3"
    assert QQ.format_scalar(Fraction(8, 4)) == "2"
    assert QQ.parse_scalar("-2/3") == Fraction(-2, 3)


def test_field_mismatch_raises():
    with pytest.raises(FieldMismatch):
        Matrix.identity(QQ, 2) @ Matrix.identity(GF(2), 2)


def test_shape_error_raises():
    with pytest.raises(ShapeError):
        Matrix.identity(QQ, 2) @ Matrix.zero(QQ, 3, 1)


def test_zero_dimensional_matrices():
    a = Matrix.zero(QQ, 0, 3)
    b = Matrix.zero(QQ, 3, 2)
    assert (a @ b).rows == 0 and (a @ b).cols == 2
    assert a.rank() == 0
    assert a.kernel_basis() == Matrix.identity(QQ, 3)
    c = Matrix.zero(QQ, 2, 0)
    assert (c @ Matrix.zero(QQ, 0, 5)) == Matrix.zero(QQ, 2, 5)
    assert kron(a, b).rows == 0
    assert Matrix.identity(QQ, 0).rref()[1] == ()


def test_left_inverse_of_injection():
    m = M(QQ, [[1, 0], [2, 1], [3, 4]])
    li = left_inverse(m)
    assert li @ m == Matrix.identity(QQ, 2)
    assert left_inverse(M(QQ, [[1, 2], [2, 4]])) is None


def test_solve_matrix_block():
    a = M(QQ, [[1, 2], [0, 1]])
    b = M(QQ, [[5, 6], [7, 8]])
    x = solve_matrix(a, b)
    assert a @ x == b
    assert solve_matrix(M(QQ, [[1], [1]]), M(QQ, [[0], [1]])) is None


def test_same_column_space():
    a = M(QQ, [[1, 0], [0, 1], [0, 0]])
    b = M(QQ, [[2, 3], [1, 1], [0, 0]])
    c = M(QQ, [[1], [0], [1]])
    assert same_column_space(a, b)
    assert not same_column_space(a, c)


def test_stacking():
    a = Matrix.identity(QQ, 2)
    assert hstack([a, a]).cols == 4
    assert vstack([a, a]).rows == 4
    ds = direct_sum(a, Matrix.zero(QQ, 1, 1))
    assert ds.rows == 3 and ds.cols == 3 and ds[2, 2] == 0


def test_vec_unvec_roundtrip():
    m = M(QQ, [[1, 2, 3], [4, 5, 6]])
    v = vec(m)
    assert v.rows == 6 and v[1, 0] == 2  # row-major
    assert unvec(QQ, v, 2, 3) == m


# -- properties --------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(field_and_matrix())
def test_rref_is_idempotent(fm):
    _, m = fm
    R, pivots = m.rref()
    R2, pivots2 = R.rref()
    assert R2 == R and pivots2 == pivots


@settings(max_examples=60, deadline=None)
@given(field_and_matrix())
def test_rank_nullity(fm):
    _, m = fm
    K = m.kernel_basis()
    assert m.rank() + K.cols == m.cols
    if K.cols:
        assert (m @ K).is_zero()


@settings(max_examples=60, deadline=None)
@given(field_and_matrix())
def test_kernel_retraction(fm):
    _, m = fm
    K, ret = m.kernel_and_retraction()
    assert ret @ K == Matrix.identity(m.field, K.cols)


@settings(max_examples=40, deadline=None)
@given(field_and_matrix(), st.data())
def test_solve_affine_solutions_check_out(fm, data):
    field, L = fm
    x = data.draw(matrices(field, L.cols, 1))
    b = L @ x
    res = solve_affine([(L, b)])
    assert res.feasible
    assert L @ res.x0 == b
    for j in range(res.nullspace.cols):
        col = res.nullspace.take_cols([j])
        assert (L @ col).is_zero()
    # the claimed solution set has the right dimension
    assert res.nullspace.cols == L.cols - L.rank()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_kron_mixed_product(data):
    field = data.draw(fields)
    a = data.draw(matrices(field, 2, 3))
    c = data.draw(matrices(field, 3, 2))
    b = data.draw(matrices(field, 2, 2))
    d = data.draw(matrices(field, 2, 3))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_vec_of_product(data):
    field = data.draw(fields)
    a = data.draw(matrices(field, 2, 3))
    x = data.draw(matrices(field, 3, 2))
    b = data.draw(matrices(field, 2, 3))
    assert vec(a @ x @ b) == kron(a, b.transpose()) @ vec(x)


@settings(max_examples=40, deadline=None)
@given(field_and_square())
def test_matmul_associative(fm):
    field, a = fm
    n = a.rows
    b = Matrix.identity(field, n).scale(field.one) if n else Matrix.identity(field, 0)
    assert (a @ b) @ a == a @ (b @ a)


@settings(max_examples=60, deadline=None)
@given(field_and_matrix(), st.data())
def test_matmul_agrees_with_definition(fm, data):
    field, a = fm
    b = data.draw(matrices(field, a.cols, 2))
    prod = a @ b
    for i in range(a.rows):
        for j in range(2):
            s = sum((a[i, k] * b[k, j] for k in range(a.cols)), field.zero)
            if field.modulus is not None:
                s %= field.modulus
            assert prod[i, j] == s


@settings(max_examples=40, deadline=None)
@given(field_and_matrix())
def test_transpose_involution(fm):
    _, m = fm
    assert m.transpose().transpose() == m


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_scalar_strings_roundtrip(data):
    field = data.draw(fields)
    x = data.draw(scalars(field))
    x = field.coerce(x)
    assert field.coerce(field.parse_scalar(field.format_scalar(x))) == x
