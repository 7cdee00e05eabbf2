"""Base change for corings: induction, ad-induction, and their adjunction.

A coring morphism pairs an algebra hom between the bases with a compatible
map of carriers. Induction extends scalars on a comodule and pushes the
coaction forward; ad-induction cotensors against the bimodule built on
B (x)_A C. When the cotensor coactions descend, the two functors form an
adjoint pair, and the unit and counit are computed here as explicit
matrices with the triangle identities verified.
"""

from .algebra import (
    AlgebraHom,
    Bimodule,
    BimoduleMap,
    ValidationReport,
    _check_equal,
    is_projective,
    validate_algebra_hom,
    validate_bimodule_map,
)
from .coring import (
    Bicomodule,
    Coring,
    RightComodule,
    as_bicomodule,
    regular_right_comodule,
    sample_right_comodules,
    validate_comodule,
)
from .cotensor import cotensor
from .errors import (
    AlgebraMismatch,
    HypothesisFailed,
    InternalAxiomError,
    NotQuasiFinite,
    ShapeError,
    TriangleFailure,
)
from .linsys import MatrixSystem
from .matrix import Matrix, kron, solve_matrix, vec
from .tensor import as_plain, induced, regroup, tensor_chain


class CoringHom:
    """A morphism of corings over a change of base algebras.

    rho is an algebra hom between the base algebras. phi maps the source
    carrier into the target carrier viewed as a bimodule over the source
    base through rho, and has to respect counits and comultiplications;
    validate_coring_hom checks all of that.
    """

    def __init__(self, source, target, rho, phi):
        if rho.source != source.base or rho.target != target.base:
            raise AlgebraMismatch("base hom endpoints do not match the corings")
        if phi.rows != target.dim or phi.cols != source.dim:
            raise ShapeError("carrier map has the wrong shape")
        self.source = source
        self.target = target
        self.rho = rho
        self.phi = phi

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise AlgebraMismatch("coring hom composition endpoint mismatch")
        return CoringHom(
            other.source, self.target,
            self.rho.compose(other.rho), self.phi @ other.phi,
        )

    def __eq__(self, other):
        if not isinstance(other, CoringHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.rho == other.rho
            and self.phi == other.phi
        )

    def __repr__(self):
        return "<CoringHom dim %d -> dim %d>" % (self.source.dim, self.target.dim)


def identity_hom(coring):
    return CoringHom(
        coring, coring,
        AlgebraHom.identity(coring.base),
        coring.carrier.identity_matrix(),
    )


def counit_hom(coring):
    """The counit as a coring hom onto the trivial coring over the base."""
    return CoringHom(
        coring, Coring.trivial(coring.base),
        AlgebraHom.identity(coring.base), coring.epsilon,
    )


def validate_coring_hom(h):
    report = ValidationReport("coring hom")
    base_rep = validate_algebra_hom(h.rho)
    for v in base_rep.violations:
        report.add("base map " + v.axiom, v.witness, v.detail)
    restricted = h.target.carrier.restrict_left(h.rho).restrict_right(h.rho)
    carrier_rep = validate_bimodule_map(
        BimoduleMap(h.source.carrier, restricted, h.phi, check=False)
    )
    for v in carrier_rep.violations:
        report.add("carrier map " + v.axiom, v.witness, v.detail)
    if not report.ok:
        return report
    _check_equal(
        report, "counit square",
        h.target.epsilon @ h.phi, h.rho.matrix @ h.source.epsilon,
    )
    # phi (x) phi lands in the tensor square over the source base; merging
    # the source-base relations into the target-base ones is always legal
    chain_r = tensor_chain((restricted, restricted))
    merge = induced(
        Matrix.identity(h.phi.field, h.target.dim * h.target.dim),
        chain_r, h.target.cc,
    )
    pair = induced(kron(h.phi, h.phi), h.source.cc, chain_r)
    _check_equal(
        report, "comultiplication square",
        h.target.delta @ h.phi, merge @ pair @ h.source.delta,
    )
    return report


def extended_scalars(h):
    """The target base as a (source-base, target-base)-bimodule."""
    return Bimodule.regular(h.rho.target).restrict_left(h.rho)


def coextended_scalars(h):
    """The target base as a (target-base, source-base)-bimodule."""
    return Bimodule.regular(h.rho.target).restrict_right(h.rho)


def induce(m, h):
    """Extend scalars along h and push the coaction to the target coring.

    Takes a right comodule over h.source (or a bicomodule whose right coring
    is h.source, in which case the left structure is carried along) and
    returns the induced comodule over h.target on the carrier M (x)_A B.
    """
    keep_left = isinstance(m, Bicomodule)
    src = m.as_right() if keep_left else m
    if not isinstance(src, RightComodule):
        raise TypeError("induction wants a right comodule or bicomodule")
    if src.coring != h.source:
        raise AlgebraMismatch("comodule does not live over the source coring")
    bl = extended_scalars(h)
    mcar = src.carrier
    mb = tensor_chain((mcar, bl))
    im = mcar.identity_matrix()
    ib = bl.identity_matrix()
    dc = h.target.carrier
    # m (x) b -> m0 (x) 1 (x) phi(m1) b at the ambient level
    push = kron(im, kron(h.rho.target.unit, dc.identity_matrix()) @ dc.right_action)
    spread = kron(kron(im, h.phi) @ src.lift_rho, ib)
    rg = regroup((mcar, bl, dc), (2, 1))
    rho_new = rg.fwd @ induced(push @ spread, mb, rg.src)
    if not keep_left:
        out = RightComodule(h.target, mb, rho_new)
        rep = validate_comodule(out)
        if not rep.ok:
            raise InternalAxiomError("induced coaction failed validation: %r" % rep)
        return out
    lcor = m.left_coring
    rg_l = regroup((lcor.carrier, mcar, bl), (1, 2))
    lam_new = rg_l.fwd @ induced(kron(m.lift_lam, ib), mb, rg_l.src)
    out = Bicomodule(lcor, h.target, mb, lam_new, rho_new)
    rep = validate_comodule(out)
    if not rep.ok:
        raise InternalAxiomError("induced bicomodule failed validation: %r" % rep)
    return out


def induce_map(f, h):
    """Apply induction to a comodule map: f (x) identity on the extension."""
    bl = extended_scalars(h)
    src_chain = tensor_chain((f.source.carrier, bl))
    tgt_chain = tensor_chain((f.target.carrier, bl))
    return induced(
        kron(f.matrix, bl.identity_matrix()), src_chain, tgt_chain
    )


def build_adinduction(h):
    """The bicomodule on B (x)_A C that represents ad-induction along h.

    The left coaction over the target coring sends b (x) c to
    b phi(c1) (x) 1 (x) c2; the right coaction over the source coring is
    B (x) delta.
    """
    src = h.source
    tgt = h.target
    br = coextended_scalars(h)
    cc = src.carrier
    bc = tensor_chain((br, cc))
    ib = br.identity_matrix()
    ic = cc.identity_matrix()
    idd = tgt.carrier.identity_matrix()
    # c -> phi(c1) (x) c2 at the ambient level
    lam_tilde = kron(h.phi, ic) @ src.lift_delta
    # b (x) d -> b d (x) 1 at the ambient level
    absorb = kron(idd, h.rho.target.unit) @ tgt.carrier.left_action
    t_lam = kron(absorb, ic) @ kron(ib, lam_tilde)
    rg_l = regroup((tgt.carrier, br, cc), (1, 2))
    lam = rg_l.fwd @ induced(t_lam, bc, rg_l.src)
    rg_r = regroup((br, cc, cc), (2, 1))
    rho = rg_r.fwd @ induced(kron(ib, src.lift_delta), bc, rg_r.src)
    out = Bicomodule(tgt, src, bc, lam, rho)
    rep = validate_comodule(out)
    if not rep.ok:
        raise InternalAxiomError("ad-induction bicomodule failed validation: %r" % rep)
    return out


def ad_induce(y, h, adinduction=None):
    """Cotensor a right comodule over the target coring against B (x)_A C.

    Returns the CotensorSpace; its .bicomodule carries the right comodule
    structure over the source coring. Raises HypothesisFailed when the
    cotensor coactions do not descend, which is the runtime form of the
    flatness hypothesis this construction needs.
    """
    if adinduction is None:
        adinduction = build_adinduction(h)
    if isinstance(y, RightComodule) and y.coring != h.target:
        raise AlgebraMismatch("comodule does not live over the target coring")
    cot = cotensor(as_bicomodule(y), adinduction, deep_checks=False)
    if cot.bicomodule is None:
        raise HypothesisFailed(
            "ad-induction coactions do not descend to the cotensor",
            list(cot.flags.items()),
        )
    return cot


def counit_collapse_ambient(h):
    """Ambient matrix (B (x) C (x) B) -> B: b (x) c (x) b' -> b rho(eps(c)) b'."""
    bmult = h.rho.target.mult
    ib = Matrix.identity(h.phi.field, h.rho.target.dim)
    middle = kron(ib, kron(h.rho.matrix @ h.source.epsilon, ib))
    return bmult @ kron(bmult, ib) @ middle


def sandwich_chain(h):
    """B (x)_A C (x)_A B as a (B, B)-bimodule chain."""
    return tensor_chain(
        (coextended_scalars(h), h.source.carrier, extended_scalars(h))
    )


def sandwich_collapse(h):
    """The map B (x)_A C (x)_A B -> D sending b (x) c (x) b' to b phi(c) b'."""
    field = h.phi.field
    dcar = h.target.carrier
    ib = Matrix.identity(field, h.rho.target.dim)
    amb = (
        dcar.right_action
        @ kron(dcar.left_action, ib)
        @ kron(ib, kron(h.phi, ib))
    )
    return induced(amb, sandwich_chain(h), as_plain(dcar))


def sandwich_bicomodule(h):
    """B (x)_A C (x)_A B as a bicomodule over the target coring on both sides.

    Left coaction: b (x) c (x) b' -> b phi(c1) (x) 1 (x) c2 (x) b'.
    Right coaction: b (x) c (x) b' -> b (x) c1 (x) 1 (x) phi(c2) b'.
    """
    field = h.phi.field
    src, tgt = h.source, h.target
    br = coextended_scalars(h)
    bl = extended_scalars(h)
    cc = src.carrier
    bcb = tensor_chain((br, cc, bl))
    ib = Matrix.identity(field, h.rho.target.dim)
    ic = cc.identity_matrix()
    idd = tgt.carrier.identity_matrix()
    lam_tilde = kron(h.phi, ic) @ src.lift_delta
    absorb = kron(idd, h.rho.target.unit) @ tgt.carrier.left_action
    t_lam = kron(kron(absorb, ic) @ kron(ib, lam_tilde), ib)
    rg_l = regroup((tgt.carrier, br, cc, bl), (1, 3))
    lam = rg_l.fwd @ induced(t_lam, bcb, rg_l.src)
    # c (x) b' -> c1 (x) 1 (x) phi(c2) b'
    spread = kron(kron(ic, h.phi) @ src.lift_delta, ib)
    push = kron(ic, kron(h.rho.target.unit, idd) @ tgt.carrier.right_action)
    t_rho = kron(ib, push @ spread)
    rg_r = regroup((br, cc, bl, tgt.carrier), (3, 1))
    rho = rg_r.fwd @ induced(t_rho, bcb, rg_r.src)
    out = Bicomodule(tgt, tgt, bcb, lam, rho)
    rep = validate_comodule(out)
    if not rep.ok:
        raise InternalAxiomError("sandwich bicomodule failed validation: %r" % rep)
    return out


def unit_map(m, h, adinduction=None, induced_m=None, round_trip=None):
    """The adjunction unit at a right comodule M: M -> (M (x) B) box (B (x) C).

    Returns (theta, round_trip) where round_trip is the CotensorSpace of the
    ad-induced induction of M and theta lands in its subspace coordinates.
    """
    if adinduction is None:
        adinduction = build_adinduction(h)
    if induced_m is None:
        induced_m = induce(m, h)
    if round_trip is None:
        round_trip = ad_induce(induced_m, h, adinduction)
    mcar = m.carrier
    bl = extended_scalars(h)
    br = coextended_scalars(h)
    cc = h.source.carrier
    unit_b = h.rho.target.unit
    send = kron(
        mcar.identity_matrix(),
        kron(unit_b, kron(unit_b, cc.identity_matrix())),
    ) @ m.lift_rho
    rg = regroup((mcar, bl, br, cc), (2, 2))
    emb = rg.fwd @ induced(send, as_plain(mcar), rg.src)
    theta = solve_matrix(round_trip.inclusion, emb)
    if theta is None:
        raise InternalAxiomError("adjunction unit does not land in the cotensor")
    return theta, round_trip


def counit_map(y, h, adinduction=None, ad_induced_y=None):
    """The adjunction counit at a right comodule Y over the target coring.

    Returns (chi, ad_induced_y) with chi a matrix from the carrier of the
    induced ad-induction of Y back to the carrier of Y.
    """
    if adinduction is None:
        adinduction = build_adinduction(h)
    if ad_induced_y is None:
        ad_induced_y = ad_induce(y, h, adinduction)
    field = h.phi.field
    bl = extended_scalars(h)
    bc = adinduction.carrier
    iy = y.carrier.identity_matrix()
    ib = Matrix.identity(field, h.rho.target.dim)
    fgy_chain = tensor_chain((ad_induced_y.space, bl))
    collapse = counit_collapse_ambient(h)
    amb = (
        y.carrier.right_action
        @ kron(iy, collapse)
        @ kron(iy, kron(bc.section, ib))
        @ kron(ad_induced_y.chain.section, ib)
        @ kron(ad_induced_y.inclusion, ib)
    )
    chi = induced(amb, fgy_chain, as_plain(y.carrier))
    return chi, ad_induced_y


def ad_induce_map(g, h, src_cot, tgt_cot):
    """Apply ad-induction to a comodule map between two prepared cotensors."""
    bc = src_cot.right.carrier
    lifted = induced(
        kron(g, bc.identity_matrix()),
        tensor_chain((src_cot.left.carrier, bc)),
        tensor_chain((tgt_cot.left.carrier, bc)),
    )
    out = solve_matrix(tgt_cot.inclusion, lifted @ src_cot.inclusion)
    if out is None:
        raise InternalAxiomError("ad-induced map does not preserve the subspace")
    return out


class AdjunctionData:
    """Verified unit and counit data for induction along a coring hom."""

    def __init__(self, hom, adinduction, units, counits,
                 regular_unit, collapse, counit_ambient):
        self.hom = hom
        self.adinduction = adinduction
        self.units = units
        self.counits = counits
        self.regular_unit = regular_unit
        self.collapse = collapse
        self.counit_ambient = counit_ambient


def _check_first_triangle(m, h, adinduction):
    fm = induce(m, h)
    theta, round_trip = unit_map(m, h, adinduction, induced_m=fm)
    bl = extended_scalars(h)
    f_theta = induced(
        kron(theta, bl.identity_matrix()),
        tensor_chain((m.carrier, bl)),
        tensor_chain((round_trip.space, bl)),
    )
    chi, _ = counit_map(fm, h, adinduction, ad_induced_y=round_trip)
    if chi @ f_theta != Matrix.identity(h.phi.field, fm.carrier.dim):
        raise TriangleFailure("counit after induced unit is not the identity")
    return fm, theta, chi, round_trip


def _check_second_triangle(y, h, adinduction, ad_induced_y=None):
    if ad_induced_y is None:
        ad_induced_y = ad_induce(y, h, adinduction)
    gy = ad_induced_y.bicomodule.as_right()
    chi, _ = counit_map(y, h, adinduction, ad_induced_y=ad_induced_y)
    fgy = induce(gy, h)
    round_trip = ad_induce(fgy, h, adinduction)
    theta_gy, _ = unit_map(gy, h, adinduction, induced_m=fgy, round_trip=round_trip)
    g_chi = ad_induce_map(chi, h, round_trip, ad_induced_y)
    if g_chi @ theta_gy != Matrix.identity(h.phi.field, ad_induced_y.space.dim):
        raise TriangleFailure("ad-induced counit after unit is not the identity")
    return chi


def adjunction_data(h, samples=None):
    """Compute unit and counit components and verify both triangle laws.

    samples defaults to the standard right comodules over the source coring;
    the counit is additionally checked on their inductions and on the
    regular comodule of the target coring.
    """
    if samples is None:
        samples = sample_right_comodules(h.source)
    adinduction = build_adinduction(h)
    units = []
    counits = []
    for m in samples:
        fm, theta, chi, round_trip = _check_first_triangle(m, h, adinduction)
        units.append((m, theta))
        counits.append((fm, chi))
        _check_second_triangle(fm, h, adinduction, ad_induced_y=round_trip)
    y = regular_right_comodule(h.target)
    chi_reg = _check_second_triangle(y, h, adinduction)
    counits.append((y, chi_reg))
    regular_unit, _ = unit_map(regular_right_comodule(h.source), h, adinduction)
    return AdjunctionData(
        h, adinduction, units, counits,
        regular_unit, sandwich_collapse(h), counit_collapse_ambient(h),
    )


def left_dual_basis(carrier):
    """Basis of the left-linear dual Hom(N, A) together with a dual basis.

    Returns (functionals, split) where functionals is a list of matrices
    N -> A spanning the dual and split is the projective splitting used to
    build a finite dual basis. Raises NotQuasiFinite when the carrier is
    not projective as a left module.
    """
    split = is_projective(carrier, side="left")
    if not split:
        raise NotQuasiFinite("carrier is not finitely generated projective on the left")
    alg = carrier.left_algebra
    field = carrier.field
    system = MatrixSystem(field, (alg.dim, carrier.dim))
    ia = alg.identity_matrix()
    system.require_zero(
        lambda f: f @ carrier.left_action - alg.mult @ kron(ia, f),
        (alg.dim, alg.dim * carrier.dim),
    )
    sol = system.solve()
    functionals = [sol.homogeneous(j) for j in range(sol.dim)]
    return functionals, split


class CohomData:
    """The finite dual of a left comodule, with its right coaction."""

    def __init__(self, source, dual, coevaluation, functionals):
        self.source = source
        self.dual = dual
        self.coevaluation = coevaluation
        self.functionals = functionals


def cohom_finite(n):
    """Finite-dual model of the cohom functor at a left comodule N.

    Needs the carrier to be finitely generated projective as a left module
    over the base (NotQuasiFinite otherwise). The dual carries a right
    comodule structure determined by the coevaluation element; it is solved
    for and validated here.
    """
    carrier = n.carrier
    coring = n.coring
    field = carrier.field
    functionals, split = left_dual_basis(carrier)
    r = len(functionals)
    alg = carrier.left_algebra
    basis_mat = Matrix.from_columns(
        field, [vec(f).col_list(0) for f in functionals],
        rows=alg.dim * carrier.dim,
    )

    def coords_of(f):
        out = solve_matrix(basis_mat, vec(f))
        if out is None:
            raise InternalAxiomError("functional escaped the dual basis")
        return out

    # dual bimodule structure: (b . f . a)(x) = f(x b) a
    other = carrier.right_algebra
    left_cols = []
    for b in range(other.dim):
        eb = Matrix.elementary(field, other.dim, 1, b, 0)
        act = carrier.right_action @ kron(carrier.identity_matrix(), eb)
        for j in range(r):
            left_cols.append(coords_of(functionals[j] @ act).col_list(0))
    left_action = Matrix.from_columns(field, left_cols, rows=r)
    right_cols = []
    for j in range(r):
        for a in range(alg.dim):
            ea = Matrix.elementary(field, alg.dim, 1, a, 0)
            post = alg.mult @ kron(alg.identity_matrix(), ea)
            right_cols.append(coords_of(post @ functionals[j]).col_list(0))
    right_action = Matrix.from_columns(field, right_cols, rows=r)
    dual = Bimodule(other, alg, r, left_action, right_action)

    # coevaluation from the projective splitting: the section rows slice
    # into one functional per free generator
    chain = tensor_chain((dual, carrier))
    amb = Matrix.zero(field, r * carrier.dim, 1)
    for i in range(carrier.dim):
        rows = []
        for a in range(alg.dim):
            rows.append(
                [split.section[(a * carrier.dim + i, k)] for k in range(carrier.dim)]
            )
        ci = coords_of(Matrix(field, rows))
        ei = Matrix.elementary(field, carrier.dim, 1, i, 0)
        amb = amb + kron(ci, ei)
    coev = chain.proj @ amb

    # right coaction on the dual: a bimodule map determined by the
    # coevaluation. The linearity constraints make the solution unique.
    dual_chain = tensor_chain((dual, coring.carrier))
    flat3 = tensor_chain((dual, coring.carrier, carrier))
    rhs = induced(
        kron(Matrix.identity(field, r), n.lift_lam), chain, flat3
    ) @ coev
    system = MatrixSystem(field, (dual_chain.dim, r))
    system.require(
        lambda rho: induced(
            kron(dual_chain.section @ rho, carrier.identity_matrix()),
            chain, flat3, check=False,
        ) @ coev,
        rhs,
    )
    ia = alg.identity_matrix()
    iother = other.identity_matrix()
    system.require_zero(
        lambda rho: rho @ dual.right_action
        - dual_chain.right_action @ kron(rho, ia),
        (dual_chain.dim, r * alg.dim),
    )
    system.require_zero(
        lambda rho: rho @ dual.left_action
        - dual_chain.left_action @ kron(iother, rho),
        (dual_chain.dim, other.dim * r),
    )
    sol = system.solve()
    if not getattr(sol, "feasible", False):
        raise InternalAxiomError("dual coaction system is infeasible")
    if sol.dim != 0:
        raise InternalAxiomError("dual coaction is not unique")
    dual_com = RightComodule(coring, dual, sol.x0)
    rep = validate_comodule(dual_com)
    if not rep.ok:
        raise InternalAxiomError("dual coaction failed validation: %r" % rep)
    return CohomData(n, dual_com, coev, functionals)


def cohom_apply(data, x):
    """The cohom value X (x)_B N^* as a plain bimodule chain."""
    return tensor_chain((x, data.dual.carrier))


def cohom_unit(data, x):
    """theta_X: X -> (X (x) N^*) (x) N built from the coevaluation."""
    carrier = data.source.carrier
    ix = x.identity_matrix()
    rg = regroup((x, data.dual.carrier, carrier), (2, 1))
    lifted_coev = tensor_chain((data.dual.carrier, carrier)).section @ data.coevaluation
    return rg.fwd @ induced(kron(ix, lifted_coev), as_plain(x), rg.src)


def right_linear_hom_basis(src, tgt):
    """Basis of right-linear module maps src -> tgt over src.right_algebra."""
    if src.right_algebra != tgt.right_algebra:
        raise AlgebraMismatch("hom basis needs a shared right algebra")
    field = src.field
    system = MatrixSystem(field, (tgt.dim, src.dim))
    ib = Matrix.identity(field, src.right_algebra.dim)
    system.require_zero(
        lambda f: f @ src.right_action - tgt.right_action @ kron(f, ib),
        (tgt.dim, src.dim * src.right_algebra.dim),
    )
    sol = system.solve()
    return [sol.homogeneous(j) for j in range(sol.dim)]


def cohom_adjunction_matrix(data, x, y):
    """The map Hom_A(X (x) N^*, Y) -> Hom_B(X, Y (x) N) on chosen bases.

    Returns (matrix, dom_basis, cod_basis); the adjunction holds exactly
    when the matrix is square and invertible.
    """
    carrier = data.source.carrier
    field = carrier.field
    left = cohom_apply(data, x)
    dom = right_linear_hom_basis(left, y)
    yn = tensor_chain((y, carrier))
    cod = right_linear_hom_basis(x, yn)
    theta = cohom_unit(data, x)
    xn_chain = tensor_chain((left, carrier))
    cod_mat = Matrix.from_columns(
        field, [vec(g).col_list(0) for g in cod], rows=yn.dim * x.dim
    )
    cols = []
    for f in dom:
        img = induced(kron(f, carrier.identity_matrix()), xn_chain, yn) @ theta
        coords = solve_matrix(cod_mat, vec(img))
        if coords is None:
            raise InternalAxiomError("adjoint image escaped the codomain basis")
        cols.append(coords.col_list(0))
    mat = Matrix.from_columns(field, cols, rows=len(cod))
    return mat, dom, cod
