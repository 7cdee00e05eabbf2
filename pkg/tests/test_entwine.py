"""Entwining structures, their axioms, and compilation to corings."""

import pytest

from coringlab import GF, QQ
from coringlab.algebra import (
    AlgebraHom,
    field_algebra,
    product_algebra,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
)
from coringlab.coring import Coring, validate_coring
from coringlab.entwine import (
    Entwining,
    EntwiningMorphism,
    coring_from_entwining,
    hom_from_entwining_morphism,
    trivial_entwining,
    validate_entwining,
    validate_entwining_morphism,
)
from coringlab.errors import AlgebraMismatch, ShapeError, ValidationFailed
from coringlab.fixtures import fixture_corings
from coringlab.functors import identity_hom, validate_coring_hom
from coringlab.matrix import Matrix

FIELDS = [QQ, GF(2)]

ENTWINING_AXIOMS = {
    "multiplication slides through psi",
    "unit slides through psi",
    "comultiplication slides through psi",
    "counit slides through psi",
}


def twisted_entwining(field):
    """A non-flip entwining: the comatrix coalgebra over K x K where the
    off diagonal cells thread through the swap automorphism."""
    K = field_algebra(field)
    prod = product_algebra(K, K)
    com = dict(fixture_corings(field))["comatrix-2"]
    swap = Matrix(field, [[0, 1], [1, 0]])
    iden = Matrix.identity(field, 2)
    taus = [iden, swap, swap, iden]  # cells (1,1), (1,2), (2,1), (2,2)
    z = field.zero
    data = [[z] * 8 for _ in range(8)]
    for c in range(4):
        t = taus[c]
        for a in range(2):
            for ap in range(2):
                if t.data[ap][a]:
                    data[ap * 4 + c][c * 2 + a] = t.data[ap][a]
    return Entwining(prod, com, Matrix(field, data))


@pytest.mark.parametrize("field", FIELDS)
def test_trivial_entwinings_validate(field):
    K = field_algebra(field)
    fx = dict(fixture_corings(field))
    algebras = [K, product_algebra(K, K), upper_triangular_algebra(field)]
    coalgebras = [fx["grouplike"], fx["comatrix-2"]]
    for a in algebras:
        for c in coalgebras:
            assert validate_entwining(trivial_entwining(a, c)).ok


@pytest.mark.parametrize("field", FIELDS)
def test_compile_reproduces_base_extension(field):
    K = field_algebra(field)
    fx = dict(fixture_corings(field))
    for name in ("grouplike", "comatrix-2"):
        compiled = coring_from_entwining(trivial_entwining(K, fx[name]))
        assert compiled == fx[name]
    prod = product_algebra(K, K)
    compiled = coring_from_entwining(trivial_entwining(prod, fx["grouplike"]))
    assert compiled == Coring.trivial(prod)
    assert compiled == fx["trivial-product"]


@pytest.mark.parametrize("field", FIELDS)
def test_compiled_corings_pass_axioms(field):
    fx = dict(fixture_corings(field))
    dual = truncated_polynomial_algebra(field, 2)
    ut = upper_triangular_algebra(field)
    for a, c in [(dual, fx["grouplike"]), (ut, fx["comatrix-2"])]:
        compiled = coring_from_entwining(trivial_entwining(a, c))
        assert compiled.dim == a.dim * c.dim
        assert validate_coring(compiled).ok


@pytest.mark.parametrize("field", FIELDS)
def test_twisted_entwining(field):
    ent = twisted_entwining(field)
    assert validate_entwining(ent).ok
    compiled = coring_from_entwining(ent)
    assert validate_coring(compiled).ok
    flip = coring_from_entwining(trivial_entwining(ent.algebra, ent.coalgebra))
    assert compiled != flip


def test_counit_axiom_pins_one_dimensional_coalgebras():
    # on a one dimensional coalgebra the counit axiom forces psi to be the
    # identity, so the unital endomorphism killing x is not an entwining
    dual = truncated_polynomial_algebra(QQ, 2)
    grouplike = dict(fixture_corings(QQ))["grouplike"]
    ent = Entwining(dual, grouplike, Matrix(QQ, [[1, 0], [0, 0]]))
    rep = validate_entwining(ent)
    assert not rep.ok
    assert {v.axiom for v in rep.violations} == {"counit slides through psi"}


def test_psi_perturbations_break_named_axioms():
    ent = trivial_entwining(
        product_algebra(field_algebra(QQ), field_algebra(QQ)),
        dict(fixture_corings(QQ))["comatrix-2"],
    )
    data = [list(r) for r in ent.psi.data]
    data[0][0] = data[0][0] + QQ.one
    bad = Entwining(ent.algebra, ent.coalgebra, Matrix(QQ, data))
    rep = validate_entwining(bad)
    assert not rep.ok
    assert {v.axiom for v in rep.violations} <= ENTWINING_AXIOMS
    with pytest.raises(ValidationFailed):
        coring_from_entwining(bad)


def test_entwining_construction_guards():
    K = field_algebra(QQ)
    fx = dict(fixture_corings(QQ))
    with pytest.raises(ShapeError):
        Entwining(K, fx["comatrix-2"], Matrix.identity(QQ, 3))
    # the coalgebra part must live over the ground field
    with pytest.raises(AlgebraMismatch):
        Entwining(K, fx["sweedler-product"], Matrix.identity(QQ, 8))


def _morphism_chain(field):
    K = field_algebra(field)
    prod = product_algebra(K, K)
    fx = dict(fixture_corings(field))
    e1 = trivial_entwining(K, fx["comatrix-2"])
    e2 = trivial_entwining(prod, fx["comatrix-2"])
    e3 = trivial_entwining(prod, fx["grouplike"])
    m1 = EntwiningMorphism(
        e1, e2, AlgebraHom(K, prod, prod.unit),
        fx["comatrix-2"].carrier.identity_matrix(),
    )
    m2 = EntwiningMorphism(e2, e3, AlgebraHom.identity(prod), fx["comatrix-2"].epsilon)
    return m1, m2


@pytest.mark.parametrize("field", FIELDS)
def test_morphisms_validate_and_compile(field):
    m1, m2 = _morphism_chain(field)
    assert validate_entwining_morphism(m1).ok
    assert validate_entwining_morphism(m2).ok
    h1 = hom_from_entwining_morphism(m1)
    h2 = hom_from_entwining_morphism(m2)
    assert validate_coring_hom(h1).ok
    assert validate_coring_hom(h2).ok


@pytest.mark.parametrize("field", FIELDS)
def test_compilation_respects_composition(field):
    m1, m2 = _morphism_chain(field)
    lhs = hom_from_entwining_morphism(m2.compose(m1))
    rhs = hom_from_entwining_morphism(m2).compose(hom_from_entwining_morphism(m1))
    assert lhs == rhs


def test_identity_morphism_compiles_to_identity_hom():
    ent = twisted_entwining(QQ)
    h = hom_from_entwining_morphism(EntwiningMorphism.identity(ent))
    assert h == identity_hom(coring_from_entwining(ent))


def test_swap_is_an_automorphism_of_the_twisted_entwining():
    ent = twisted_entwining(QQ)
    swap = AlgebraHom(ent.algebra, ent.algebra, Matrix(QQ, [[0, 1], [1, 0]]))
    mor = EntwiningMorphism(
        ent, ent, swap, ent.coalgebra.carrier.identity_matrix()
    )
    h = hom_from_entwining_morphism(mor)
    assert validate_coring_hom(h).ok
    sq = hom_from_entwining_morphism(mor.compose(mor))
    assert sq == identity_hom(coring_from_entwining(ent))


def test_morphism_rejects_broken_square():
    flip = trivial_entwining(
        twisted_entwining(QQ).algebra, twisted_entwining(QQ).coalgebra
    )
    twisted = twisted_entwining(QQ)
    with pytest.raises(ValidationFailed):
        EntwiningMorphism(
            twisted, flip,
            AlgebraHom.identity(twisted.algebra),
            twisted.coalgebra.carrier.identity_matrix(),
        )
    rep = validate_entwining_morphism(
        EntwiningMorphism(
            twisted, flip,
            AlgebraHom.identity(twisted.algebra),
            twisted.coalgebra.carrier.identity_matrix(),
            check=False,
        )
    )
    assert [v.axiom for v in rep.violations] == ["entwining square commutes"]
