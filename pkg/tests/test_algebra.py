"""Algebras, homs, bimodules and the projectivity splitter."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coringlab import GF, QQ, AlgebraMismatch, Matrix, ValidationFailed, kron
from coringlab.algebra import (
    Algebra,
    AlgebraHom,
    Bimodule,
    BimoduleMap,
    field_algebra,
    is_projective,
    matrix_algebra,
    product_algebra,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
    validate_algebra,
    validate_algebra_hom,
    validate_bimodule,
    validate_bimodule_map,
)

ALGEBRA_BUILDERS = [
    lambda f: field_algebra(f),
    lambda f: product_algebra(field_algebra(f), field_algebra(f)),
    lambda f: matrix_algebra(f, 2),
    lambda f: upper_triangular_algebra(f),
    lambda f: truncated_polynomial_algebra(f, 3),
]


@pytest.mark.parametrize("field", [QQ, GF(2), GF(5)])
@pytest.mark.parametrize("build", ALGEBRA_BUILDERS)
def test_builtin_algebras_validate(field, build):
    alg = build(field)
    report = validate_algebra(alg)
    assert report.ok, report


def test_matrix_algebra_structure():
    m2 = matrix_algebra(QQ, 2)
    # e_01 * e_10 = e_00 and e_01 * e_01 = 0
    e01 = Matrix.column(QQ, [0, 1, 0, 0])
    e10 = Matrix.column(QQ, [0, 0, 1, 0])
    e00 = Matrix.column(QQ, [1, 0, 0, 0])
    assert m2.mult @ kron(e01, e10) == e00
    assert (m2.mult @ kron(e01, e01)).is_zero()


def test_perturbed_mult_breaks_named_axiom():
    alg = upper_triangular_algebra(QQ)
    # redirect e12 * e22 from e12 to e11; then (e12 e22) e22 != e12 (e22 e22)
    bad_cols = [alg.mult.col_list(j) for j in range(9)]
    bad_cols[1 * 3 + 2] = [1, 0, 0]
    bad = Algebra(QQ, 3, Matrix.from_columns(QQ, bad_cols, rows=3), alg.unit)
    report = validate_algebra(bad)
    assert not report.ok
    assert any(v.axiom == "associativity" for v in report.violations)


def test_perturbed_unit_breaks_unit_law():
    alg = field_algebra(QQ)
    bad = Algebra(QQ, 1, alg.mult, Matrix.column(QQ, [2]))
    report = validate_algebra(bad)
    labels = {v.axiom for v in report.violations}
    assert "left unit" in labels or "right unit" in labels


def test_diagonal_hom_validates():
    a = field_algebra(QQ)
    b = product_algebra(a, a)
    hom = AlgebraHom(a, b, Matrix(QQ, [[1], [1]]))
    assert validate_algebra_hom(hom).ok
    # the non-unital embedding into the first factor fails
    bad = AlgebraHom(a, b, Matrix(QQ, [[1], [0]]))
    report = validate_algebra_hom(bad)
    assert any(v.axiom == "preserves unit" for v in report.violations)


def test_hom_compose_and_identity():
    a = field_algebra(QQ)
    b = product_algebra(a, a)
    hom = AlgebraHom(a, b, Matrix(QQ, [[1], [1]]))
    assert hom.compose(AlgebraHom.identity(a)).matrix == hom.matrix
    with pytest.raises(AlgebraMismatch):
        hom.compose(hom)


@pytest.mark.parametrize("field", [QQ, GF(3)])
@pytest.mark.parametrize("build", ALGEBRA_BUILDERS)
def test_regular_bimodule_validates(field, build):
    alg = build(field)
    assert validate_bimodule(Bimodule.regular(alg)).ok


def test_bimodule_direct_sum_and_zero():
    alg = upper_triangular_algebra(QQ)
    reg = Bimodule.regular(alg)
    z = Bimodule.zero(alg, alg)
    assert validate_bimodule(z).ok
    s = reg.direct_sum(reg)
    assert s.dim == 6
    assert validate_bimodule(s).ok
    s2 = reg.direct_sum(z)
    assert s2.dim == reg.dim
    assert validate_bimodule(s2).ok


def test_restrict_scalars():
    a = field_algebra(QQ)
    b = product_algebra(a, a)
    hom = AlgebraHom(a, b, Matrix(QQ, [[1], [1]]))
    reg = Bimodule.regular(b)
    left = reg.restrict_left(hom)
    assert left.left_algebra == a and left.right_algebra == b
    assert validate_bimodule(left).ok
    both = left.restrict_right(hom)
    assert validate_bimodule(both).ok


def test_bimodule_map_checked():
    alg = truncated_polynomial_algebra(QQ, 2)
    reg = Bimodule.regular(alg)
    ident = BimoduleMap(reg, reg, Matrix.identity(QQ, 2))
    assert validate_bimodule_map(ident).ok
    # multiplication by x is a bimodule map since the algebra is commutative
    x_times = BimoduleMap(reg, reg, Matrix(QQ, [[0, 0], [1, 0]]))
    assert validate_bimodule_map(x_times).ok
    with pytest.raises(ValidationFailed):
        BimoduleMap(reg, reg, Matrix(QQ, [[0, 1], [0, 0]]))


def _module_over(alg, dim, left_cols, field=QQ):
    """Left module over alg, trivial right action of the ground field."""
    right = Matrix.identity(field, dim)
    return Bimodule(
        alg,
        field_algebra(field),
        dim,
        Matrix.from_columns(field, left_cols, rows=dim),
        right,
    )


def test_regular_module_is_projective():
    alg = upper_triangular_algebra(QQ)
    reg = Bimodule.regular(alg)
    split = is_projective(reg, side="left")
    assert split
    assert reg.left_action @ split.section == Matrix.identity(QQ, 3)
    split_r = is_projective(reg, side="right")
    assert split_r
    assert reg.right_action @ split_r.section == Matrix.identity(QQ, 3)


def test_trivial_module_over_dual_numbers_is_not_projective():
    alg = truncated_polynomial_algebra(QQ, 2)
    # K with x acting as 0: columns (a, m) for a in {1, x}, m in {e}
    mod = _module_over(alg, 1, [[1], [0]])
    assert validate_bimodule(mod).ok
    assert not is_projective(mod, side="left")


def test_column_module_over_matrix_algebra_is_projective():
    m2 = matrix_algebra(QQ, 2)
    # standard column module K^2: e_ij . v_m = delta_jm v_i
    cols = []
    for p in range(4):
        i, j = divmod(p, 2)
        for m in range(2):
            col = [0, 0]
            if j == m:
                col[i] = 1
            cols.append(col)
    mod = _module_over(m2, 2, cols)
    assert validate_bimodule(mod).ok
    split = is_projective(mod, side="left")
    assert split
    assert mod.left_action @ split.section == Matrix.identity(QQ, 2)


def test_zero_module_is_projective():
    alg = field_algebra(QQ)
    z = Bimodule.zero(alg, alg)
    assert is_projective(z)


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([QQ, GF(2), GF(7)]),
    st.integers(min_value=2, max_value=4),
)
def test_truncated_polynomial_family_validates(field, n):
    alg = truncated_polynomial_algebra(field, n)
    assert validate_algebra(alg).ok
    assert validate_bimodule(Bimodule.regular(alg)).ok
