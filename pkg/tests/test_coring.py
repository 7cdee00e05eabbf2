"""Coring and comodule axiom suites on the fixture corings."""

import pytest

from coringlab import GF, QQ, Matrix, ValidationFailed
from coringlab.algebra import Bimodule, field_algebra, validate_bimodule
from coringlab.coring import (
    Bicomodule,
    ComoduleMap,
    Coring,
    LeftComodule,
    RightComodule,
    as_bicomodule,
    cofree_right,
    regular_right_comodule,
    sample_right_comodules,
    validate_comodule,
    validate_comodule_map,
    validate_coring,
    zero_right_comodule,
)
from coringlab.fixtures import (
    comatrix_coring,
    fixture_corings,
    grouplike_coring,
    sweedler_dual_numbers,
    sweedler_over_product,
    trivial_coring,
    trivial_coring_product,
)

FIELDS = [QQ, GF(2), GF(5)]


@pytest.mark.parametrize("field", FIELDS)
def test_fixture_corings_validate(field):
    for name, coring in fixture_corings(field):
        report = validate_coring(coring)
        assert report.ok, (name, report)


def test_sweedler_product_shape():
    c = sweedler_over_product(QQ)
    assert c.base.dim == 2
    assert c.dim == 4
    assert c.cc.dim == 8  # C (x)_A C for A = K x K collapses one factor


def test_sweedler_dual_numbers_validates():
    c = sweedler_dual_numbers(QQ)
    assert c.dim == 4
    assert validate_coring(c).ok


def test_perturbed_delta_breaks_coring():
    c = comatrix_coring(QQ, 2)
    cols = [c.delta.col_list(j) for j in range(c.dim)]
    cols[0] = [x + 1 if i == 0 else x for i, x in enumerate(cols[0])]
    bad = Coring(
        c.base, c.carrier, Matrix.from_columns(QQ, cols, rows=c.cc.dim), c.epsilon
    )
    report = validate_coring(bad)
    assert not report.ok
    labels = {v.axiom for v in report.violations}
    assert labels & {"coassociativity", "left counit", "right counit"}


def test_perturbed_epsilon_breaks_counit():
    c = grouplike_coring(QQ)
    bad = Coring(c.base, c.carrier, c.delta, Matrix(QQ, [[2]]))
    report = validate_coring(bad)
    labels = {v.axiom for v in report.violations}
    assert "left counit" in labels or "right counit" in labels


def test_perturbed_delta_can_break_bilinearity():
    c = sweedler_over_product(QQ)
    cols = [c.delta.col_list(j) for j in range(c.dim)]
    cols[1] = [x + 1 if i == 0 else x for i, x in enumerate(cols[1])]
    bad = Coring(
        c.base, c.carrier, Matrix.from_columns(QQ, cols, rows=c.cc.dim), c.epsilon
    )
    report = validate_coring(bad)
    assert not report.ok
    assert any("comultiplication not" in v.axiom or "coassociativity" in v.axiom
               or "counit" in v.axiom for v in report.violations)


@pytest.mark.parametrize("field", [QQ, GF(2)])
def test_fixture_comodules_validate(field):
    for name, coring in fixture_corings(field):
        for i, m in enumerate(sample_right_comodules(coring)):
            report = validate_comodule(m)
            assert report.ok, (name, i, report)


def test_regular_bicomodule_validates():
    for coring in [grouplike_coring(QQ), sweedler_over_product(QQ), comatrix_coring(QQ, 2)]:
        bc = Bicomodule.regular(coring)
        assert validate_comodule(bc).ok


def test_as_bicomodule_trivializes_missing_side():
    c = comatrix_coring(QQ, 2)
    m = regular_right_comodule(c)
    bc = as_bicomodule(m)
    assert bc.left_coring.dim == 1  # trivial coring over K
    assert validate_comodule(bc).ok
    left = LeftComodule(c, c.carrier, c.delta)
    assert validate_comodule(left).ok
    bc2 = as_bicomodule(left)
    assert validate_comodule(bc2).ok


def test_perturbed_rho_breaks_comodule():
    c = comatrix_coring(QQ, 2)
    m = regular_right_comodule(c)
    bad_rho = m.rho.scale(2)
    bad = RightComodule(c, m.carrier, bad_rho)
    report = validate_comodule(bad)
    assert not report.ok
    assert any("counit" in v.axiom or "coassociativity" in v.axiom
               for v in report.violations)


def test_comodule_map_validation():
    c = sweedler_over_product(QQ)
    m = regular_right_comodule(c)
    ident = ComoduleMap(m, m, Matrix.identity(QQ, m.dim))
    assert validate_comodule_map(ident).ok
    # the coaction itself is a colinear map into the cofree comodule on M
    cf = cofree_right(c, m.carrier)
    rho_map = ComoduleMap(m, cf, m.rho)
    assert validate_comodule_map(rho_map).ok
    # projecting onto one basis line is not colinear here
    bad = Matrix.zero(QQ, m.dim, m.dim) + Matrix.elementary(QQ, m.dim, m.dim, 0, 0)
    assert not validate_comodule_map(ComoduleMap(m, m, bad, check=False)).ok
    with pytest.raises(ValidationFailed):
        ComoduleMap(m, m, bad)


def test_direct_sum_and_zero_comodules():
    c = comatrix_coring(GF(2), 2)
    m = regular_right_comodule(c)
    s = m.direct_sum(m)
    assert s.dim == 2 * m.dim
    assert validate_comodule(s).ok
    z = zero_right_comodule(c)
    assert z.dim == 0
    assert validate_comodule(z).ok
    assert validate_comodule(m.direct_sum(z)).ok


def test_left_comodule_direct_sum():
    c = sweedler_over_product(QQ)
    left = LeftComodule(c, c.carrier, c.delta)
    s = left.direct_sum(left)
    assert s.dim == 2 * c.dim
    assert validate_comodule(s).ok


def test_trivial_coring_comodules_are_modules():
    # over the trivial coring, a comodule structure is unique
    for c in [trivial_coring(QQ), trivial_coring_product(QQ)]:
        m = regular_right_comodule(c)
        assert validate_comodule(m).ok
        assert m.rho.rows == m.chain.dim


def test_cofree_over_nontrivial_base():
    c = sweedler_over_product(GF(2))
    a_reg = Bimodule.regular(c.base)
    cf = cofree_right(c, a_reg)
    assert validate_comodule(cf).ok
    assert validate_bimodule(cf.carrier).ok


def test_coring_carrier_mismatch_rejected():
    from coringlab import AlgebraMismatch
    from coringlab.algebra import product_algebra

    K = field_algebra(QQ)
    c = trivial_coring(QQ)
    with pytest.raises(AlgebraMismatch):
        RightComodule(c, Bimodule.regular(product_algebra(K, K)), Matrix.zero(QQ, 4, 4))
