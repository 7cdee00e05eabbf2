"""Corings over an algebra A, and their comodules.

A coring is an (A, A)-bimodule C with a comultiplication into C (x)_A C and a
counit into A, both A-bilinear, satisfying coassociativity and the counit
laws. All structure maps are stored in the quotient coordinates produced by
tensor_chain, so matrices compose directly.

Validation returns reports instead of raising so the CLI can print every
named violation of a broken input.
"""

from .algebra import (
    AlgebraHom,
    Bimodule,
    BimoduleMap,
    ValidationReport,
    field_algebra,
    first_difference,
    validate_algebra,
    validate_bimodule,
    validate_bimodule_map,
)
from .errors import AlgebraMismatch, FieldMismatch, NotBalanced, ShapeError
from .matrix import Matrix, direct_sum, kron
from .tensor import induced, regroup, tensor_chain, unit_left, unit_right


class Coring:
    """An A-coring: comultiplication delta and counit epsilon over base A."""

    def __init__(self, base, carrier, delta, epsilon):
        if carrier.left_algebra != base or carrier.right_algebra != base:
            raise AlgebraMismatch("coring carrier must be an (A, A)-bimodule")
        if delta.field != base.field or epsilon.field != base.field:
            raise FieldMismatch("structure maps over the wrong field")
        self.base = base
        self.carrier = carrier
        self.cc = tensor_chain((carrier, carrier))
        if (delta.rows, delta.cols) != (self.cc.dim, carrier.dim):
            raise ShapeError("delta must map the carrier into C (x)_A C")
        if (epsilon.rows, epsilon.cols) != (base.dim, carrier.dim):
            raise ShapeError("epsilon must map the carrier into the base")
        self.delta = delta
        self.epsilon = epsilon
        self.lift_delta = self.cc.section @ delta

    @property
    def field(self):
        return self.base.field

    @property
    def dim(self):
        return self.carrier.dim

    def ccc(self):
        return tensor_chain((self.carrier, self.carrier, self.carrier))

    @classmethod
    def trivial(cls, algebra):
        """A itself as an A-coring: delta is a (x) 1, epsilon the identity."""
        reg = Bimodule.regular(algebra)
        delta = unit_right(reg).bwd
        return cls(algebra, reg, delta, Matrix.identity(algebra.field, algebra.dim))

    def __eq__(self, other):
        if not isinstance(other, Coring):
            return NotImplemented
        return (
            self.base == other.base
            and self.carrier == other.carrier
            and self.delta == other.delta
            and self.epsilon == other.epsilon
        )

    def __hash__(self):
        return hash(("Coring", self.carrier, self.delta, self.epsilon))

    def __repr__(self):
        return "<Coring dim=%d over base dim=%d>" % (self.dim, self.base.dim)


def validate_coring(c):
    report = ValidationReport("coring")
    base_report = validate_algebra(c.base)
    for v in base_report.violations:
        report.add("base " + v.axiom, v.witness)
    carrier_report = validate_bimodule(c.carrier)
    for v in carrier_report.violations:
        report.add("carrier " + v.axiom, v.witness)
    if not report.ok:
        return report

    bilinear_ok = True
    for label, matrix, target in [
        ("comultiplication", c.delta, c.cc),
        ("counit", c.epsilon, Bimodule.regular(c.base)),
    ]:
        sub = validate_bimodule_map(
            BimoduleMap(c.carrier, target, matrix, check=False)
        )
        for v in sub.violations:
            report.add("%s not %s" % (label, v.axiom), v.witness)
            bilinear_ok = False
    if not bilinear_ok:
        return report

    ident = c.carrier.identity_matrix()
    ccc = c.ccc()
    try:
        lhs = induced(kron(c.lift_delta, ident), c.cc, ccc) @ c.delta
        rhs = induced(kron(ident, c.lift_delta), c.cc, ccc) @ c.delta
        if lhs != rhs:
            report.add("coassociativity", first_difference(lhs, rhs))
    except NotBalanced:
        report.add("coassociativity", detail="comparison map not balanced")

    reg = Bimodule.regular(c.base)
    try:
        left = (
            unit_left(c.carrier).fwd
            @ induced(kron(c.epsilon, ident), c.cc, tensor_chain((reg, c.carrier)))
            @ c.delta
        )
        if left != ident:
            report.add("left counit", first_difference(left, ident))
        right = (
            unit_right(c.carrier).fwd
            @ induced(kron(ident, c.epsilon), c.cc, tensor_chain((c.carrier, reg)))
            @ c.delta
        )
        if right != ident:
            report.add("right counit", first_difference(right, ident))
    except NotBalanced:
        report.add("counit law", detail="comparison map not balanced")
    return report


def unit_algebra_hom(alg):
    """The unit map of alg, as a hom from the ground field algebra."""
    return AlgebraHom(field_algebra(alg.field), alg, alg.unit)


class RightComodule:
    """A right C-comodule: carrier an (X, A)-bimodule, rho into M (x)_A C."""

    def __init__(self, coring, carrier, rho):
        if carrier.right_algebra != coring.base:
            raise AlgebraMismatch("right comodule carrier must be a right module over the base")
        self.coring = coring
        self.carrier = carrier
        self.chain = tensor_chain((carrier, coring.carrier))
        if (rho.rows, rho.cols) != (self.chain.dim, carrier.dim):
            raise ShapeError("rho must map the carrier into M (x)_A C")
        self.rho = rho
        self.lift_rho = self.chain.section @ rho

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self):
        return self.carrier.dim

    def direct_sum(self, other):
        if other.coring != self.coring:
            raise AlgebraMismatch("direct sum of comodules over different corings")
        s = self.carrier.direct_sum(other.carrier)
        chain = tensor_chain((s, self.coring.carrier))
        rho = chain.proj @ direct_sum(self.lift_rho, other.lift_rho)
        return RightComodule(self.coring, s, rho)

    def __eq__(self, other):
        if not isinstance(other, RightComodule):
            return NotImplemented
        return (
            self.coring == other.coring
            and self.carrier == other.carrier
            and self.rho == other.rho
        )

    def __hash__(self):
        return hash(("RightComodule", self.carrier, self.rho))

    def __repr__(self):
        return "<RightComodule dim=%d>" % self.dim


class LeftComodule:
    """A left C-comodule: carrier an (A, Y)-bimodule, lam into C (x)_A M."""

    def __init__(self, coring, carrier, lam):
        if carrier.left_algebra != coring.base:
            raise AlgebraMismatch("left comodule carrier must be a left module over the base")
        self.coring = coring
        self.carrier = carrier
        self.chain = tensor_chain((coring.carrier, carrier))
        if (lam.rows, lam.cols) != (self.chain.dim, carrier.dim):
            raise ShapeError("lam must map the carrier into C (x)_A M")
        self.lam = lam
        self.lift_lam = self.chain.section @ lam

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self):
        return self.carrier.dim

    def direct_sum(self, other):
        if other.coring != self.coring:
            raise AlgebraMismatch("direct sum of comodules over different corings")
        s = self.carrier.direct_sum(other.carrier)
        chain = tensor_chain((self.coring.carrier, s))
        # C (x) (M + N) flattens with the sum in the inner slot, so the block
        # structure of the lifted coactions interleaves; rebuild by columns
        dc = self.coring.dim
        dm, dn = self.dim, other.dim
        field = self.field
        z = field.zero
        cols = []
        for j in range(dm):
            src = self.lift_lam.col_list(j)
            col = [z] * (dc * (dm + dn))
            for c in range(dc):
                for m in range(dm):
                    col[c * (dm + dn) + m] = src[c * dm + m]
            cols.append(col)
        for j in range(dn):
            src = other.lift_lam.col_list(j)
            col = [z] * (dc * (dm + dn))
            for c in range(dc):
                for n in range(dn):
                    col[c * (dm + dn) + dm + n] = src[c * dn + n]
            cols.append(col)
        amb = Matrix.from_columns(field, cols, rows=dc * (dm + dn))
        lam = chain.proj @ amb
        return LeftComodule(self.coring, s, lam)

    def __eq__(self, other):
        if not isinstance(other, LeftComodule):
            return NotImplemented
        return (
            self.coring == other.coring
            and self.carrier == other.carrier
            and self.lam == other.lam
        )

    def __hash__(self):
        return hash(("LeftComodule", self.carrier, self.lam))

    def __repr__(self):
        return "<LeftComodule dim=%d>" % self.dim


class Bicomodule:
    """A (C', C)-bicomodule: left coaction lam, right coaction rho."""

    def __init__(self, left_coring, right_coring, carrier, lam, rho):
        self.left_coring = left_coring
        self.right_coring = right_coring
        self.carrier = carrier
        self._left = LeftComodule(left_coring, carrier, lam)
        self._right = RightComodule(right_coring, carrier, rho)

    @property
    def lam(self):
        return self._left.lam

    @property
    def rho(self):
        return self._right.rho

    @property
    def lift_lam(self):
        return self._left.lift_lam

    @property
    def lift_rho(self):
        return self._right.lift_rho

    @property
    def left_chain(self):
        return self._left.chain

    @property
    def right_chain(self):
        return self._right.chain

    @property
    def field(self):
        return self.carrier.field

    @property
    def dim(self):
        return self.carrier.dim

    def as_right(self):
        return self._right

    def as_left(self):
        return self._left

    @classmethod
    def regular(cls, coring):
        """C as a (C, C)-bicomodule with both coactions delta."""
        return cls(coring, coring, coring.carrier, coring.delta, coring.delta)

    def __eq__(self, other):
        if not isinstance(other, Bicomodule):
            return NotImplemented
        return (
            self.left_coring == other.left_coring
            and self.right_coring == other.right_coring
            and self.carrier == other.carrier
            and self.lam == other.lam
            and self.rho == other.rho
        )

    def __hash__(self):
        return hash(("Bicomodule", self.carrier, self.lam, self.rho))

    def __repr__(self):
        return "<Bicomodule dim=%d>" % self.dim


def as_bicomodule(x):
    """View a one-sided comodule as a bicomodule over a trivial coring.

    The missing coaction is the canonical unit iso into X (x)_X M
    (or M (x)_X X), which satisfies the comodule axioms on the nose.
    """
    if isinstance(x, Bicomodule):
        return x
    if isinstance(x, RightComodule):
        triv = Coring.trivial(x.carrier.left_algebra)
        lam = unit_left(x.carrier).bwd
        return Bicomodule(triv, x.coring, x.carrier, lam, x.rho)
    if isinstance(x, LeftComodule):
        triv = Coring.trivial(x.carrier.right_algebra)
        rho = unit_right(x.carrier).bwd
        return Bicomodule(x.coring, triv, x.carrier, x.lam, rho)
    raise TypeError("cannot view %r as a bicomodule" % (x,))


def _validate_right(m, report, prefix=""):
    carrier_report = validate_bimodule(m.carrier)
    for v in carrier_report.violations:
        report.add(prefix + "carrier " + v.axiom, v.witness)
    sub = validate_bimodule_map(BimoduleMap(m.carrier, m.chain, m.rho, check=False))
    if sub.violations:
        for v in sub.violations:
            report.add(prefix + "coaction not " + v.axiom, v.witness)
        return
    C = m.coring
    ident = m.carrier.identity_matrix()
    ic = Matrix.identity(m.field, C.dim)
    mcc = tensor_chain((m.carrier, C.carrier, C.carrier))
    try:
        lhs = induced(kron(m.lift_rho, ic), m.chain, mcc) @ m.rho
        rhs = induced(kron(ident, C.lift_delta), m.chain, mcc) @ m.rho
        if lhs != rhs:
            report.add(prefix + "coaction coassociativity", first_difference(lhs, rhs))
        reg = Bimodule.regular(C.base)
        counit = (
            unit_right(m.carrier).fwd
            @ induced(kron(ident, C.epsilon), m.chain, tensor_chain((m.carrier, reg)))
            @ m.rho
        )
        if counit != ident:
            report.add(prefix + "coaction counit law", first_difference(counit, ident))
    except NotBalanced:
        report.add(prefix + "coaction coassociativity", detail="comparison not balanced")


def _validate_left(m, report, prefix=""):
    carrier_report = validate_bimodule(m.carrier)
    for v in carrier_report.violations:
        report.add(prefix + "carrier " + v.axiom, v.witness)
    sub = validate_bimodule_map(BimoduleMap(m.carrier, m.chain, m.lam, check=False))
    if sub.violations:
        for v in sub.violations:
            report.add(prefix + "coaction not " + v.axiom, v.witness)
        return
    C = m.coring
    ident = m.carrier.identity_matrix()
    ic = Matrix.identity(m.field, C.dim)
    ccm = tensor_chain((C.carrier, C.carrier, m.carrier))
    try:
        lhs = induced(kron(ic, m.lift_lam), m.chain, ccm) @ m.lam
        rhs = induced(kron(C.lift_delta, ident), m.chain, ccm) @ m.lam
        if lhs != rhs:
            report.add(prefix + "coaction coassociativity", first_difference(lhs, rhs))
        reg = Bimodule.regular(C.base)
        counit = (
            unit_left(m.carrier).fwd
            @ induced(kron(C.epsilon, ident), m.chain, tensor_chain((reg, m.carrier)))
            @ m.lam
        )
        if counit != ident:
            report.add(prefix + "coaction counit law", first_difference(counit, ident))
    except NotBalanced:
        report.add(prefix + "coaction coassociativity", detail="comparison not balanced")


def validate_comodule(m):
    """Axiom suite for right, left, or bicomodules."""
    report = ValidationReport("comodule")
    if isinstance(m, RightComodule):
        _validate_right(m, report)
        return report
    if isinstance(m, LeftComodule):
        _validate_left(m, report)
        return report
    if isinstance(m, Bicomodule):
        _validate_right(m.as_right(), report, prefix="right ")
        _validate_left(m.as_left(), report, prefix="left ")
        if not report.ok:
            return report
        # compatibility: coacting left then right equals right then left
        Cl = m.left_coring
        Cr = m.right_coring
        flat = tensor_chain((Cl.carrier, m.carrier, Cr.carrier))
        icl = Matrix.identity(m.field, Cl.dim)
        icr = Matrix.identity(m.field, Cr.dim)
        try:
            lhs = induced(kron(m.lift_lam, icr), m.right_chain, flat) @ m.rho
            rhs = induced(kron(icl, m.lift_rho), m.left_chain, flat) @ m.lam
            if lhs != rhs:
                report.add("coaction compatibility", first_difference(lhs, rhs))
        except NotBalanced:
            report.add("coaction compatibility", detail="comparison not balanced")
        return report
    raise TypeError("validate_comodule expects a comodule, got %r" % (m,))


class ComoduleMap:
    """A bilinear, bicolinear map between comodules of the same kind."""

    def __init__(self, source, target, matrix, check=True):
        if type(source) is not type(target):
            raise AlgebraMismatch("comodule map between different kinds")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            report = validate_comodule_map(self)
            if not report.ok:
                from .errors import ValidationFailed

                raise ValidationFailed("map is not colinear: %r" % report, report)

    def __repr__(self):
        return "<ComoduleMap %d -> %d>" % (self.source.dim, self.target.dim)


def validate_comodule_map(f):
    report = ValidationReport("comodule map")
    src, tgt = f.source, f.target
    sub = validate_bimodule_map(
        BimoduleMap(src.carrier, tgt.carrier, f.matrix, check=False)
    )
    for v in sub.violations:
        report.add("not " + v.axiom, v.witness)

    def check_right(ms, mt):
        if ms.coring != mt.coring:
            report.add("right corings differ")
            return
        ic = Matrix.identity(ms.field, ms.coring.dim)
        try:
            pushed = induced(kron(f.matrix, ic), ms.chain, mt.chain)
        except NotBalanced:
            report.add("right colinearity", detail="comparison not balanced")
            return
        lhs = mt.rho @ f.matrix
        rhs = pushed @ ms.rho
        if lhs != rhs:
            report.add("right colinearity", first_difference(lhs, rhs))

    def check_left(ms, mt):
        if ms.coring != mt.coring:
            report.add("left corings differ")
            return
        ic = Matrix.identity(ms.field, ms.coring.dim)
        try:
            pushed = induced(kron(ic, f.matrix), ms.chain, mt.chain)
        except NotBalanced:
            report.add("left colinearity", detail="comparison not balanced")
            return
        lhs = mt.lam @ f.matrix
        rhs = pushed @ ms.lam
        if lhs != rhs:
            report.add("left colinearity", first_difference(lhs, rhs))

    if isinstance(src, RightComodule):
        check_right(src, tgt)
    elif isinstance(src, LeftComodule):
        check_left(src, tgt)
    elif isinstance(src, Bicomodule):
        check_right(src.as_right(), tgt.as_right())
        check_left(src.as_left(), tgt.as_left())
    else:
        raise TypeError("unsupported comodule kind")
    return report


def cofree_right(coring, v):
    """The cofree right comodule V (x)_A C with coaction V (x) delta."""
    if v.right_algebra != coring.base:
        raise AlgebraMismatch("cofree needs a right module over the base")
    carrier = tensor_chain((v, coring.carrier))
    iv = Matrix.identity(v.field, v.dim)
    flat = tensor_chain((v, coring.carrier, coring.carrier))
    rg = regroup((v, coring.carrier, coring.carrier), (2, 1))
    rho = rg.fwd @ induced(kron(iv, coring.lift_delta), carrier, flat)
    return RightComodule(coring, carrier, rho)


def zero_right_comodule(coring, left_algebra=None):
    if left_algebra is None:
        left_algebra = field_algebra(coring.field)
    carrier = Bimodule.zero(left_algebra, coring.base)
    return RightComodule(coring, carrier, Matrix.zero(coring.field, 0, 0))


def regular_right_comodule(coring):
    """C itself as a right comodule, with the left action restricted to K."""
    carrier = coring.carrier.restrict_left(unit_algebra_hom(coring.base))
    return RightComodule(coring, carrier, coring.delta)


def sample_right_comodules(coring):
    """A small standard family of right comodules used for runtime checks."""
    a_reg = Bimodule.regular(coring.base).restrict_left(
        unit_algebra_hom(coring.base)
    )
    c_sample = regular_right_comodule(coring)
    samples = [
        c_sample,
        cofree_right(coring, a_reg),
        cofree_right(coring, a_reg.direct_sum(a_reg)),
        c_sample.direct_sum(c_sample),
        zero_right_comodule(coring),
    ]
    return samples
