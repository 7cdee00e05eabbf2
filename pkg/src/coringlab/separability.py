"""Separability certificates for induction and ad-induction functors.

Whether induction along a coring homomorphism is a separable functor comes
down to the existence of one finite splitting datum, and the same holds for
its right adjoint and for the two classical special cases obtained along the
counit (the forgetful functor, and base extension by the coring). Each route
is therefore an exact affine feasibility problem over the unknown entries of
the splitting map. Feasible solves emit a Certificate that re-verifies
independently of the solver; infeasible solves report the rank deficit of
the contradiction.

Routes:
  * omega: a bicolinear retraction of the comparison map from the source
    carrier into (C (x) B) box_D (B (x) C) splits induction along h.
  * nu_hat: a bicolinear section of the collapse B (x) C (x) B -> D splits
    ad-induction along h.
  * gamma: a bimodule map C (x)_A C -> A through which the comultiplication
    recovers the counit splits the forgetful functor; this is the omega
    route along the counit hom, unfolded into base coordinates.
  * invariant: a central element of C with counit 1 splits base extension
    by C; this is the nu_hat route along the counit hom, unfolded.
"""

from .algebra import (
    Bimodule,
    BimoduleMap,
    ValidationReport,
    _check_equal,
    validate_bimodule_map,
)
from .coring import (
    Bicomodule,
    ComoduleMap,
    Coring,
    RightComodule,
    as_bicomodule,
    regular_right_comodule,
    sample_right_comodules,
    validate_comodule_map,
)
from .cotensor import cotensor
from .errors import (
    CertificateMismatch,
    HypothesisFailed,
    InternalAxiomError,
    ShapeError,
    ValidationFailed,
)
from .functors import (
    build_adinduction,
    counit_hom,
    extended_scalars,
    induce,
    sandwich_bicomodule,
    sandwich_collapse,
    unit_map,
    validate_coring_hom,
)
from .linsys import MatrixSystem
from .matrix import Matrix, kron
from .tensor import induced, preserves_equalizer, tensor_chain, unit_left, unit_right

KINDS = ("omega", "nu_hat", "gamma", "invariant")


class Certificate:
    """One splitting datum for a separability decision.

    omega and nu_hat certificates reference the coring hom whose functor
    they split; gamma and invariant certificates reference the coring.
    payload is the splitting matrix (a single column for invariant).
    """

    def __init__(self, kind, payload, hom=None, coring=None, solution_space_dim=0):
        if kind not in KINDS:
            raise ValueError("unknown certificate kind %r" % (kind,))
        if kind in ("omega", "nu_hat"):
            if hom is None or coring is not None:
                raise ValueError("%s certificates reference a coring hom" % kind)
        else:
            if coring is None or hom is not None:
                raise ValueError("%s certificates reference a coring" % kind)
        self.kind = kind
        self.payload = payload
        self.hom = hom
        self.coring = coring
        self.solution_space_dim = solution_space_dim

    def __repr__(self):
        return "<Certificate %s %dx%d>" % (
            self.kind, self.payload.rows, self.payload.cols,
        )

    def __eq__(self, other):
        if not isinstance(other, Certificate):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.payload == other.payload
            and self.hom == other.hom
            and self.coring == other.coring
            and self.solution_space_dim == other.solution_space_dim
        )

    def __hash__(self):
        return hash((self.kind, self.payload, self.solution_space_dim))


class SeparabilityReport:
    """Outcome of one certification: feasibility plus the evidence."""

    def __init__(self, feasible, certificate, solution_space_dim,
                 infeasibility_rank_deficit, hypothesis_checks):
        assert feasible == (certificate is not None)
        self.feasible = feasible
        self.certificate = certificate
        self.solution_space_dim = solution_space_dim
        self.infeasibility_rank_deficit = infeasibility_rank_deficit
        self.hypothesis_checks = list(hypothesis_checks)

    def __repr__(self):
        if self.feasible:
            return "<SeparabilityReport feasible, solution space dim %d>" % (
                self.solution_space_dim,
            )
        return "<SeparabilityReport infeasible, rank deficit %d>" % (
            self.infeasibility_rank_deficit,
        )


def _finish(system, make_certificate, checks):
    sol = system.solve()
    if not sol.feasible:
        return SeparabilityReport(False, None, None, sol.rank_deficit, checks)
    cert = make_certificate(sol)
    report = verify_certificate(cert)
    if not report.ok:
        raise InternalAxiomError(
            "solver emitted a certificate that fails verification: %r" % report
        )
    return SeparabilityReport(True, cert, sol.dim, None, checks)


def _require_valid_hom(h):
    report = validate_coring_hom(h)
    if not report.ok:
        raise ValidationFailed("coring hom fails its axioms: %r" % report, report)


# -- induction: the omega route ----------------------------------------------


def _omega_context(h):
    """The splitting domain (C (x) B) box_D (B (x) C) and the comparison map.

    Returns (adinduction, induced_regular, cotensor_space, comparison) where
    comparison embeds the source carrier into the cotensor subspace by
    c -> c1 (x) 1 (x) 1 (x) c2.
    """
    ad = build_adinduction(h)
    fc = induce(Bicomodule.regular(h.source), h)
    cot = cotensor(fc, ad, deep_checks=False)
    if cot.bicomodule is None:
        raise HypothesisFailed(
            "coactions do not descend to the splitting domain",
            list(cot.flags.items()),
        )
    comparison, _ = unit_map(
        regular_right_comodule(h.source), h,
        adinduction=ad, induced_m=fc, round_trip=cot,
    )
    return ad, fc, cot, comparison


def _induction_hypotheses(h, ad, cot):
    """Equalizer-preservation checks the omega characterization rests on."""
    checks = []
    f1, f2, k0 = cot.equalizer_maps()
    for idx, x in enumerate(sample_right_comodules(h.source)):
        ok = preserves_equalizer(x.carrier, f1, f2, k0, side="left")
        checks.append(
            ("source sample %d tensors the splitting-domain equalizer exactly" % idx, ok)
        )
    for idx, y in enumerate(sample_right_comodules(h.target)):
        cy = cotensor(as_bicomodule(y), ad, deep_checks=False)
        g1, g2, kk = cy.equalizer_maps()
        ok = preserves_equalizer(h.source.carrier, g1, g2, kk, side="right")
        checks.append(
            ("source coring tensors the target-sample-%d equalizer exactly" % idx, ok)
        )
    return checks


def _omega_system(h, cot, comparison):
    src = h.source
    ccar = src.carrier
    espace = cot.space
    field = ccar.field
    ic = ccar.identity_matrix()
    ia = Matrix.identity(field, src.base.dim)
    chain_ce = tensor_chain((ccar, espace))
    chain_ec = tensor_chain((espace, ccar))
    system = MatrixSystem(field, (ccar.dim, espace.dim))
    system.require_zero(
        lambda X: X @ espace.left_action - ccar.left_action @ kron(ia, X),
        (ccar.dim, src.base.dim * espace.dim),
    )
    system.require_zero(
        lambda X: X @ espace.right_action - ccar.right_action @ kron(X, ia),
        (ccar.dim, espace.dim * src.base.dim),
    )
    system.require_zero(
        lambda X: src.delta @ X
        - induced(kron(ic, X), chain_ce, src.cc, check=False) @ cot.lam,
        (src.cc.dim, espace.dim),
    )
    system.require_zero(
        lambda X: src.delta @ X
        - induced(kron(X, ic), chain_ec, src.cc, check=False) @ cot.rho,
        (src.cc.dim, espace.dim),
    )
    system.require(lambda X: X @ comparison, ic)
    return system


def certify_induction(h):
    """Decide whether extension of scalars along h is a separable functor.

    Solves for a bicolinear retraction omega of the comparison map from the
    source carrier into (C (x) B) box_D (B (x) C). The equalizer-preservation
    hypotheses the characterization needs are checked on sample comodules
    first; HypothesisFailed carries the failing labels.
    """
    _require_valid_hom(h)
    ad, fc, cot, comparison = _omega_context(h)
    checks = _induction_hypotheses(h, ad, cot)
    if not all(ok for _, ok in checks):
        raise HypothesisFailed("equalizer preservation failed", checks)
    system = _omega_system(h, cot, comparison)
    return _finish(
        system,
        lambda sol: Certificate("omega", sol.x0, hom=h, solution_space_dim=sol.dim),
        checks,
    )


# -- ad-induction: the nu_hat route -------------------------------------------


def _adinduction_hypotheses(h, ad):
    """The cotensor functor is only well behaved when scalars and the source
    coring both tensor its defining equalizers exactly; check that on the
    standard samples over the target coring."""
    checks = []
    bl = extended_scalars(h)
    for idx, m in enumerate(sample_right_comodules(h.target)):
        cm = cotensor(as_bicomodule(m), ad, deep_checks=False)
        g1, g2, kk = cm.equalizer_maps()
        ok_b = preserves_equalizer(bl, g1, g2, kk, side="right")
        checks.append(
            ("extended scalars tensor the sample-%d equalizer exactly" % idx, ok_b)
        )
        ok_c = preserves_equalizer(h.source.carrier, g1, g2, kk, side="right")
        checks.append(
            ("source carrier tensors the sample-%d equalizer exactly" % idx, ok_c)
        )
    return checks


def _nu_hat_system(h, sandwich, collapse):
    tgt = h.target
    dcar = tgt.carrier
    scar = sandwich.carrier
    field = dcar.field
    idd = dcar.identity_matrix()
    ib = Matrix.identity(field, tgt.base.dim)
    chain_ds = tensor_chain((dcar, scar))
    chain_sd = tensor_chain((scar, dcar))
    system = MatrixSystem(field, (scar.dim, dcar.dim))
    system.require_zero(
        lambda X: X @ dcar.left_action - scar.left_action @ kron(ib, X),
        (scar.dim, tgt.base.dim * dcar.dim),
    )
    system.require_zero(
        lambda X: X @ dcar.right_action - scar.right_action @ kron(X, ib),
        (scar.dim, dcar.dim * tgt.base.dim),
    )
    system.require_zero(
        lambda X: sandwich.lam @ X
        - induced(kron(idd, X), tgt.cc, chain_ds, check=False) @ tgt.delta,
        (chain_ds.dim, dcar.dim),
    )
    system.require_zero(
        lambda X: sandwich.rho @ X
        - induced(kron(X, idd), tgt.cc, chain_sd, check=False) @ tgt.delta,
        (chain_sd.dim, dcar.dim),
    )
    system.require(lambda X: collapse @ X, idd)
    return system


def certify_adinduction(h):
    """Decide whether the right adjoint of induction along h is separable.

    Solves for a bicolinear section nu_hat of the collapse map
    B (x) C (x) B -> D, after checking the equalizer hypotheses on samples.
    """
    _require_valid_hom(h)
    ad = build_adinduction(h)
    checks = _adinduction_hypotheses(h, ad)
    if not all(ok for _, ok in checks):
        raise HypothesisFailed("equalizer preservation failed", checks)
    sandwich = sandwich_bicomodule(h)
    collapse = sandwich_collapse(h)
    system = _nu_hat_system(h, sandwich, collapse)
    return _finish(
        system,
        lambda sol: Certificate("nu_hat", sol.x0, hom=h, solution_space_dim=sol.dim),
        checks,
    )


# -- forgetful functor: the gamma route ---------------------------------------


def _cointegral_gap(c, payload):
    """How far payload is from the averaging identity.

    For gamma: C (x)_A C -> A the requirement beyond gamma delta = epsilon is
    that contracting the left factor through delta equals contracting the
    right factor: (C (x) gamma)(delta (x) C) = (gamma (x) C)(C (x) delta) as
    maps from C (x)_A C to C. Returns the difference of the two sides.
    """
    ccar = c.carrier
    ic = ccar.identity_matrix()
    reg = Bimodule.regular(c.base)
    ccc = c.ccc()
    ca = tensor_chain((ccar, reg))
    ac = tensor_chain((reg, ccar))
    dl = induced(kron(c.lift_delta, ic), c.cc, ccc)
    dr = induced(kron(ic, c.lift_delta), c.cc, ccc)
    amb = payload @ c.cc.proj
    lhs = unit_right(ccar).fwd @ induced(kron(ic, amb), ccc, ca, check=False) @ dl
    rhs = unit_left(ccar).fwd @ induced(kron(amb, ic), ccc, ac, check=False) @ dr
    return lhs - rhs


def _gamma_system(c):
    base = c.base
    ccar = c.carrier
    field = c.field
    ia = Matrix.identity(field, base.dim)
    reg = Bimodule.regular(base)
    system = MatrixSystem(field, (base.dim, c.cc.dim))
    system.require_zero(
        lambda X: X @ c.cc.left_action - reg.left_action @ kron(ia, X),
        (base.dim, base.dim * c.cc.dim),
    )
    system.require_zero(
        lambda X: X @ c.cc.right_action - reg.right_action @ kron(X, ia),
        (base.dim, c.cc.dim * base.dim),
    )
    system.require(lambda X: X @ c.delta, c.epsilon)
    system.require_zero(
        lambda X: _cointegral_gap(c, X),
        (ccar.dim, c.cc.dim),
    )
    return system


def certify_forgetful(c):
    """Decide whether forgetting the coaction over c is a separable functor.

    Solves for a bimodule map gamma: C (x)_A C -> A with gamma delta =
    epsilon satisfying the averaging identity. This is the omega route along
    the counit hom with the trivial-coring layer stripped off, so no
    hypothesis checks are needed.
    """
    system = _gamma_system(c)
    return _finish(
        system,
        lambda sol: Certificate("gamma", sol.x0, coring=c, solution_space_dim=sol.dim),
        [],
    )


# -- base extension: the invariant route ---------------------------------------


def _invariant_system(c):
    ccar = c.carrier
    field = c.field
    ia = Matrix.identity(field, c.base.dim)
    system = MatrixSystem(field, (ccar.dim, 1))
    system.require_zero(
        lambda X: ccar.left_action @ kron(ia, X) - ccar.right_action @ kron(X, ia),
        (ccar.dim, c.base.dim),
    )
    system.require(lambda X: c.epsilon @ X, c.base.unit)
    return system


def certify_base_extension(c):
    """Decide whether tensoring with the coring itself is separable.

    Solves for an invariant element e of C (one commuting with every base
    element) whose counit is 1. This is the nu_hat route along the counit
    hom collapsed to a single column, so no hypothesis checks are needed.
    """
    system = _invariant_system(c)
    return _finish(
        system,
        lambda sol: Certificate(
            "invariant", sol.x0, coring=c, solution_space_dim=sol.dim
        ),
        [],
    )


# -- verification --------------------------------------------------------------


def verify_certificate(cert):
    """Re-derive every defining constraint of the certificate and check the
    payload exactly; independent of how the payload was found."""
    report = ValidationReport("certificate " + cert.kind)
    if cert.kind == "omega":
        h = cert.hom
        _, _, cot, comparison = _omega_context(h)
        dc = h.source.dim
        if (cert.payload.rows, cert.payload.cols) != (dc, cot.space.dim):
            report.add("payload shape")
            return report
        sub = validate_comodule_map(ComoduleMap(
            cot.bicomodule, Bicomodule.regular(h.source), cert.payload, check=False,
        ))
        for v in sub.violations:
            report.add(v.axiom, v.witness, v.detail)
        _check_equal(
            report, "retraction of the comparison map",
            cert.payload @ comparison, Matrix.identity(cert.payload.field, dc),
        )
    elif cert.kind == "nu_hat":
        h = cert.hom
        sandwich = sandwich_bicomodule(h)
        dd = h.target.dim
        if (cert.payload.rows, cert.payload.cols) != (sandwich.dim, dd):
            report.add("payload shape")
            return report
        sub = validate_comodule_map(ComoduleMap(
            Bicomodule.regular(h.target), sandwich, cert.payload, check=False,
        ))
        for v in sub.violations:
            report.add(v.axiom, v.witness, v.detail)
        _check_equal(
            report, "section of the collapse map",
            sandwich_collapse(h) @ cert.payload,
            Matrix.identity(cert.payload.field, dd),
        )
    elif cert.kind == "gamma":
        c = cert.coring
        if (cert.payload.rows, cert.payload.cols) != (c.base.dim, c.cc.dim):
            report.add("payload shape")
            return report
        sub = validate_bimodule_map(BimoduleMap(
            c.cc, Bimodule.regular(c.base), cert.payload, check=False,
        ))
        for v in sub.violations:
            report.add("not " + v.axiom, v.witness)
        _check_equal(
            report, "counit recovery", cert.payload @ c.delta, c.epsilon,
        )
        gap = _cointegral_gap(c, cert.payload)
        if not gap.is_zero():
            report.add("averaging identity")
    elif cert.kind == "invariant":
        c = cert.coring
        if (cert.payload.rows, cert.payload.cols) != (c.dim, 1):
            report.add("payload shape")
            return report
        ia = Matrix.identity(c.field, c.base.dim)
        _check_equal(
            report, "invariance",
            c.carrier.left_action @ kron(ia, cert.payload),
            c.carrier.right_action @ kron(cert.payload, ia),
        )
        _check_equal(
            report, "counit is one", c.epsilon @ cert.payload, c.base.unit,
        )
    else:
        report.add("unknown kind")
    return report


# -- the Maschke consequence ----------------------------------------------------


def colinear_section(f, cert, s):
    """Upgrade a module-level section of a comodule epimorphism to a colinear one.

    f must be a surjective map of right comodules over a coring whose
    forgetful functor the certificate proves separable (a gamma certificate
    for that coring, or an omega certificate along its counit hom); s must
    be a right-linear section of f.matrix, which is the Maschke hypothesis.
    Solves for a full comodule-map section and returns it as a validated
    ComoduleMap; infeasibility means the certificate does not match f and
    raises CertificateMismatch.
    """
    if cert.kind == "gamma":
        coring = cert.coring
    elif cert.kind == "omega":
        if cert.hom != counit_hom(cert.hom.source):
            raise CertificateMismatch(
                "only an omega certificate along the counit splits the forgetful functor"
            )
        coring = cert.hom.source
    else:
        raise CertificateMismatch(
            "certificate kind %r does not certify the forgetful functor" % cert.kind
        )
    cert_report = verify_certificate(cert)
    if not cert_report.ok:
        raise CertificateMismatch("certificate fails verification: %r" % cert_report)
    src, tgt = f.source, f.target
    if not isinstance(src, RightComodule):
        raise TypeError("colinear_section wants a map of right comodules")
    if src.coring != coring or tgt.coring != coring:
        raise CertificateMismatch("certificate is for a different coring")
    f_report = validate_comodule_map(f)
    if not f_report.ok:
        raise ValidationFailed("f is not a comodule map: %r" % f_report, f_report)
    if f.matrix.rank() != tgt.dim:
        raise ValidationFailed("f is not surjective")
    if (s.rows, s.cols) != (src.dim, tgt.dim):
        raise ShapeError("section has the wrong shape")
    if f.matrix @ s != Matrix.identity(f.matrix.field, tgt.dim):
        raise ValidationFailed("s is not a section of f")
    ia = Matrix.identity(src.field, coring.base.dim)
    right_gap = (
        s @ tgt.carrier.right_action
        - src.carrier.right_action @ kron(s, ia)
    )
    if not right_gap.is_zero():
        raise ValidationFailed("s is not right linear over the base")

    ic = coring.carrier.identity_matrix()
    left_alg = src.carrier.left_algebra
    il = Matrix.identity(src.field, left_alg.dim)
    system = MatrixSystem(src.field, (src.dim, tgt.dim))
    system.require(lambda X: f.matrix @ X, Matrix.identity(src.field, tgt.dim))
    system.require_zero(
        lambda X: X @ tgt.carrier.left_action - src.carrier.left_action @ kron(il, X),
        (src.dim, left_alg.dim * tgt.dim),
    )
    system.require_zero(
        lambda X: X @ tgt.carrier.right_action - src.carrier.right_action @ kron(X, ia),
        (src.dim, tgt.dim * coring.base.dim),
    )
    system.require_zero(
        lambda X: src.rho @ X
        - induced(kron(X, ic), tgt.chain, src.chain, check=False) @ tgt.rho,
        (src.chain.dim, tgt.dim),
    )
    sol = system.solve()
    if not sol.feasible:
        raise CertificateMismatch(
            "no colinear section exists although the certificate promises one"
        )
    return ComoduleMap(tgt, src, sol.x0, check=True)
