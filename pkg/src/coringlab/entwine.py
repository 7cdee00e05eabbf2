"""Entwining structures and their compilation to corings.

An entwining is an algebra A, a coalgebra C over the ground field, and a
map psi: C (x) A -> A (x) C that lets multiplication slide past the
comultiplication coherently. Every entwining compiles to an A-coring on
A (x) C whose right action threads through psi, and every morphism of
entwinings compiles to a coring homomorphism, compatibly with composition.
The trivial entwining (the plain flip) recovers the base extension of a
coalgebra to a coring over A.
"""

from .algebra import field_algebra, validate_algebra, validate_algebra_hom
from .algebra import Bimodule, ValidationReport, _check_equal
from .coring import Coring, validate_coring
from .errors import (
    AlgebraMismatch,
    FieldMismatch,
    InternalAxiomError,
    ShapeError,
    ValidationFailed,
)
from .functors import CoringHom, validate_coring_hom
from .matrix import Matrix, kron, perm_swap
from .tensor import tensor_chain


class Entwining:
    """A coalgebra C over the ground field entwined with an algebra A.

    psi maps C (x) A into A (x) C and must satisfy the four compatibility
    axioms checked by validate_entwining; construction only checks shapes.
    """

    def __init__(self, algebra, coalgebra, psi):
        if algebra.field != coalgebra.field:
            raise FieldMismatch("entwining parts over different fields")
        if coalgebra.base != field_algebra(algebra.field):
            raise AlgebraMismatch(
                "the coalgebra part must be a coring over the ground field"
            )
        da, dc = algebra.dim, coalgebra.dim
        if (psi.rows, psi.cols) != (da * dc, dc * da):
            raise ShapeError("psi must map C (x) A into A (x) C")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.psi = psi

    def __eq__(self, other):
        if not isinstance(other, Entwining):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.coalgebra == other.coalgebra
            and self.psi == other.psi
        )

    def __hash__(self):
        return hash(("Entwining", self.psi))

    def __repr__(self):
        return "<Entwining A dim=%d, C dim=%d>" % (self.algebra.dim, self.coalgebra.dim)


def trivial_entwining(algebra, coalgebra):
    """The flip c (x) a -> a (x) c; always an entwining."""
    return Entwining(
        algebra,
        coalgebra,
        perm_swap(algebra.field, coalgebra.dim, algebra.dim),
    )


def validate_entwining(ent):
    report = ValidationReport("entwining")
    for v in validate_algebra(ent.algebra).violations:
        report.add("algebra " + v.axiom, v.witness)
    for v in validate_coring(ent.coalgebra).violations:
        report.add("coalgebra " + v.axiom, v.witness)
    if not report.ok:
        return report
    a, c, psi = ent.algebra, ent.coalgebra, ent.psi
    ia = a.identity_matrix()
    ic = c.carrier.identity_matrix()
    dc_amb = c.lift_delta
    _check_equal(
        report,
        "multiplication slides through psi",
        psi @ kron(ic, a.mult),
        kron(a.mult, ic) @ kron(ia, psi) @ kron(psi, ia),
    )
    _check_equal(
        report,
        "unit slides through psi",
        psi @ kron(ic, a.unit),
        kron(a.unit, ic),
    )
    _check_equal(
        report,
        "comultiplication slides through psi",
        kron(ia, dc_amb) @ psi,
        kron(psi, ic) @ kron(ic, psi) @ kron(dc_amb, ia),
    )
    _check_equal(
        report,
        "counit slides through psi",
        kron(ia, c.epsilon) @ psi,
        kron(c.epsilon, ia),
    )
    return report


def coring_from_entwining(ent):
    """The A-coring on A (x) C induced by the entwining.

    The left action is multiplication on the first leg; the right action
    threads the incoming algebra element through psi before multiplying.
    Raises ValidationFailed with the named violations if ent fails its
    axioms.
    """
    rep = validate_entwining(ent)
    if not rep.ok:
        raise ValidationFailed("entwining fails its axioms: %r" % rep, rep)
    a, c = ent.algebra, ent.coalgebra
    ia = a.identity_matrix()
    ic = c.carrier.identity_matrix()
    left = kron(a.mult, ic)
    right = kron(a.mult, ic) @ kron(ia, ent.psi)
    carrier = Bimodule(a, a, a.dim * c.dim, left, right)
    cc = tensor_chain((carrier, carrier))
    # a (x) c -> a (x) c1 (x) 1 (x) c2 in ambient coordinates, then project
    thread = kron(ic, kron(a.unit, ic)) @ c.lift_delta
    delta = cc.proj @ kron(ia, thread)
    epsilon = kron(ia, c.epsilon)
    out = Coring(a, carrier, delta, epsilon)
    check = validate_coring(out)
    if not check.ok:
        raise InternalAxiomError(
            "a valid entwining compiled to an invalid coring: %r" % check
        )
    return out


class EntwiningMorphism:
    """An algebra hom and a coalgebra map forming a map of entwinings."""

    def __init__(self, source, target, algebra_map, coalgebra_map, check=True):
        if algebra_map.source != source.algebra or algebra_map.target != target.algebra:
            raise AlgebraMismatch("algebra map endpoints do not match the entwinings")
        shape = (target.coalgebra.dim, source.coalgebra.dim)
        if (coalgebra_map.rows, coalgebra_map.cols) != shape:
            raise ShapeError("coalgebra map must be target.dim x source.dim")
        self.source = source
        self.target = target
        self.algebra_map = algebra_map
        self.coalgebra_map = coalgebra_map
        if check:
            report = validate_entwining_morphism(self)
            if not report.ok:
                raise ValidationFailed(
                    "entwining morphism fails its axioms: %r" % report, report
                )

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise AlgebraMismatch("entwining morphism composition endpoint mismatch")
        return EntwiningMorphism(
            other.source,
            self.target,
            self.algebra_map.compose(other.algebra_map),
            self.coalgebra_map @ other.coalgebra_map,
            check=False,
        )

    @classmethod
    def identity(cls, ent):
        from .algebra import AlgebraHom

        return cls(
            ent, ent,
            AlgebraHom.identity(ent.algebra),
            ent.coalgebra.carrier.identity_matrix(),
            check=False,
        )

    def __eq__(self, other):
        if not isinstance(other, EntwiningMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.algebra_map == other.algebra_map
            and self.coalgebra_map == other.coalgebra_map
        )

    def __hash__(self):
        return hash(("EntwiningMorphism", self.algebra_map, self.coalgebra_map))

    def __repr__(self):
        return "<EntwiningMorphism %r -> %r>" % (self.source, self.target)


def validate_entwining_morphism(mor):
    report = ValidationReport("entwining morphism")
    for v in validate_algebra_hom(mor.algebra_map).violations:
        report.add("algebra map not " + v.axiom, v.witness)
    g = mor.coalgebra_map
    c1, c2 = mor.source.coalgebra, mor.target.coalgebra
    _check_equal(
        report,
        "coalgebra map comultiplicative",
        c2.lift_delta @ g,
        kron(g, g) @ c1.lift_delta,
    )
    _check_equal(report, "coalgebra map counital", c2.epsilon @ g, c1.epsilon)
    _check_equal(
        report,
        "entwining square commutes",
        kron(mor.algebra_map.matrix, g) @ mor.source.psi,
        mor.target.psi @ kron(g, mor.algebra_map.matrix),
    )
    return report


def hom_from_entwining_morphism(mor):
    """Compile a morphism of entwinings to a hom of the induced corings.

    Compilation is functorial: composing morphisms first or homs first gives
    the same answer, since the carrier map is the tensor of the two legs.
    """
    rep = validate_entwining_morphism(mor)
    if not rep.ok:
        raise ValidationFailed(
            "entwining morphism fails its axioms: %r" % rep, rep
        )
    src = coring_from_entwining(mor.source)
    tgt = coring_from_entwining(mor.target)
    phi = kron(mor.algebra_map.matrix, mor.coalgebra_map)
    h = CoringHom(src, tgt, mor.algebra_map, phi)
    check = validate_coring_hom(h)
    if not check.ok:
        raise InternalAxiomError(
            "a valid entwining morphism compiled to an invalid coring hom: %r" % check
        )
    return h
