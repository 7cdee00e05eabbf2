"""Cotensor products of bicomodules.

M box_C N is the equalizer of rho_M (x) N and M (x) lam_N inside M (x)_A N.
The subspace always exists; its left and right coactions only descend when
the outer coring carriers are flat enough against this particular equalizer,
so those conditions are checked at runtime and reported as flags. Nothing
here raises on a failed flag: callers that need the full bicomodule
structure (such as cotensor_assoc) turn missing flags into HypothesisFailed.
"""

from .algebra import Bimodule, BimoduleMap, validate_bimodule
from .coring import Bicomodule, Coring, as_bicomodule, validate_comodule, validate_comodule_map
from .coring import ComoduleMap, RightComodule
from .errors import AlgebraMismatch, HypothesisFailed, InternalAxiomError
from .matrix import Matrix, kron, solve_matrix
from .tensor import Iso, induced, preserves_equalizer, regroup, tensor_chain, unit_left, unit_right


class CotensorSpace:
    """The cotensor subspace together with everything used to build it."""

    def __init__(self, left, right, space, inclusion, retraction, chain,
                 target_chain, f_rho, f_lam, flags, lam, rho, bicomodule):
        self.left = left
        self.right = right
        self.space = space
        self.inclusion = inclusion
        self.retraction = retraction
        self.chain = chain
        self.target_chain = target_chain
        self.f_rho = f_rho
        self.f_lam = f_lam
        self.flags = flags
        self.lam = lam
        self.rho = rho
        self.bicomodule = bicomodule

    @property
    def dim(self):
        return self.space.dim

    def equalizer_maps(self):
        """(f, g, k) as bimodule maps, for flatness checks."""
        f = BimoduleMap(self.chain, self.target_chain, self.f_rho, check=False)
        g = BimoduleMap(self.chain, self.target_chain, self.f_lam, check=False)
        k = BimoduleMap(self.space, self.chain, self.inclusion, check=False)
        return f, g, k

    def __repr__(self):
        return "<CotensorSpace dim=%d>" % self.dim


def cotensor(m, n, deep_checks=True):
    """M box_C N for a (C', C)-bicomodule and a (C, C'')-bicomodule.

    One-sided comodules are promoted with trivial corings first. Returns a
    CotensorSpace; inspect .flags and .bicomodule for the coaction status.
    deep_checks=False skips the two outer-coring flatness diagnostics (the
    other flags are still computed); callers that run their own hypothesis
    battery use this to avoid paying for the checks twice.
    """
    m = as_bicomodule(m)
    n = as_bicomodule(n)
    if m.right_coring != n.left_coring:
        raise AlgebraMismatch("cotensor needs matching middle coring")
    C = m.right_coring
    M, N = m.carrier, n.carrier
    field = M.field
    MN = tensor_chain((M, N))
    MCN = tensor_chain((M, C.carrier, N))
    im = M.identity_matrix()
    inn = N.identity_matrix()
    f_rho = induced(kron(m.lift_rho, inn), MN, MCN)
    f_lam = induced(kron(im, n.lift_lam), MN, MCN)
    iota, retraction = (f_rho - f_lam).kernel_and_retraction()

    Al = M.left_algebra
    Ar = N.right_algebra
    il = Matrix.identity(field, Al.dim)
    ir = Matrix.identity(field, Ar.dim)
    l_sub = solve_matrix(iota, MN.left_action @ kron(il, iota))
    r_sub = solve_matrix(iota, MN.right_action @ kron(iota, ir))
    if l_sub is None or r_sub is None:
        raise InternalAxiomError("cotensor subspace is not action stable")
    space = Bimodule(Al, Ar, iota.cols, l_sub, r_sub)
    rep = validate_bimodule(space)
    if not rep.ok:
        raise InternalAxiomError("cotensor subspace fails module axioms: %r" % rep)

    Cl = m.left_coring
    Cr = n.right_coring
    flags = {}
    if deep_checks:
        fmap = BimoduleMap(MN, MCN, f_rho, check=False)
        gmap = BimoduleMap(MN, MCN, f_lam, check=False)
        kmap = BimoduleMap(space, MN, iota, check=False)
        flags["left coring flat"] = preserves_equalizer(
            Cl.carrier, fmap, gmap, kmap, side="left"
        )
        flags["right coring flat"] = preserves_equalizer(
            Cr.carrier, fmap, gmap, kmap, side="right"
        )

    icl = Matrix.identity(field, Cl.dim)
    icr = Matrix.identity(field, Cr.dim)
    chain_cl_e = tensor_chain((Cl.carrier, space))
    chain_cl_mn = tensor_chain((Cl.carrier, MN))
    jl = induced(kron(icl, iota), chain_cl_e, chain_cl_mn)
    flags["left inclusion mono"] = jl.rank() == chain_cl_e.dim
    chain_e_cr = tensor_chain((space, Cr.carrier))
    chain_mn_cr = tensor_chain((MN, Cr.carrier))
    jr = induced(kron(iota, icr), chain_e_cr, chain_mn_cr)
    flags["right inclusion mono"] = jr.rank() == chain_e_cr.dim

    # left coaction: restrict lam_M (x) N to the subspace
    rg_l = regroup((Cl.carrier, M, N), (1, 2))
    big_lam = rg_l.fwd @ induced(kron(m.lift_lam, inn), MN, rg_l.src)
    lam = solve_matrix(jl, big_lam @ iota)
    flags["left coaction solvable"] = lam is not None

    rg_r = regroup((M, N, Cr.carrier), (2, 1))
    big_rho = rg_r.fwd @ induced(kron(im, n.lift_rho), MN, rg_r.src)
    rho = solve_matrix(jr, big_rho @ iota)
    flags["right coaction solvable"] = rho is not None

    bicomodule = None
    if lam is not None and rho is not None:
        candidate = Bicomodule(Cl, Cr, space, lam, rho)
        crep = validate_comodule(candidate)
        flags["coactions valid"] = crep.ok
        if crep.ok:
            bicomodule = candidate
    else:
        flags["coactions valid"] = False

    return CotensorSpace(
        m, n, space, iota, retraction, MN, MCN,
        f_rho, f_lam, flags, lam, rho, bicomodule,
    )


def cotensor_counit_iso(mcom):
    """For a right comodule M, the canonical iso M box_C C ~ M.

    Returns (cotensor_space, iso). The forward map applies the counit; the
    backward map is the coaction, which lands in the equalizer by
    coassociativity.
    """
    if not isinstance(mcom, RightComodule):
        raise TypeError("counit comparison wants a right comodule")
    C = mcom.coring
    cot = cotensor(as_bicomodule(mcom), Bicomodule.regular(C))
    M = mcom.carrier
    im = M.identity_matrix()
    reg = Bimodule.regular(C.base)
    fwd = (
        unit_right(M).fwd
        @ induced(kron(im, C.epsilon), cot.chain, tensor_chain((M, reg)))
        @ cot.inclusion
    )
    bwd = solve_matrix(cot.inclusion, mcom.rho)
    if bwd is None:
        raise InternalAxiomError("coaction does not land in the cotensor subspace")
    return cot, Iso(cot.space, M, fwd, bwd)


class PsiComparison:
    """The canonical map W (x) (M box N) -> (W (x) M) box N and its status."""

    def __init__(self, matrix, invertible, hypothesis_ok):
        self.matrix = matrix
        self.invertible = invertible
        self.hypothesis_ok = hypothesis_ok

    def __repr__(self):
        return "PsiComparison(invertible=%r, hypothesis_ok=%r)" % (
            self.invertible,
            self.hypothesis_ok,
        )


def psi_compat(w, m, n):
    """Compare W (x) (M box N) with (W (x) M) box N for a right module W.

    The comparison map always exists; it is recorded along with whether it
    is invertible and whether W preserves the defining equalizer (the
    sufficient condition for invertibility).
    """
    m = as_bicomodule(m)
    n = as_bicomodule(n)
    if w.right_algebra != m.carrier.left_algebra:
        raise AlgebraMismatch("W must be a right module over the left base of M")
    field = w.field
    C = m.right_coring
    cot1 = cotensor(m, n, deep_checks=False)
    iw = Matrix.identity(field, w.dim)

    we1 = tensor_chain((w, cot1.space))
    wm = tensor_chain((w, m.carrier))
    flat_wmc = regroup((w, m.carrier, C.carrier), (2, 1))
    rho_wm = flat_wmc.fwd @ induced(kron(iw, m.lift_rho), wm, flat_wmc.src)
    triv = Coring.trivial(w.left_algebra)
    wm_bico = Bicomodule(triv, C, wm, unit_left(wm).bwd, rho_wm)
    cot2 = cotensor(wm_bico, n, deep_checks=False)

    rg_a = regroup((w, m.carrier, n.carrier), (1, 2))
    rg_b = regroup((w, m.carrier, n.carrier), (2, 1))
    emb1 = rg_a.bwd @ induced(kron(iw, cot1.inclusion), we1, rg_a.tgt)
    emb2 = rg_b.bwd @ cot2.inclusion
    psi = solve_matrix(emb2, emb1)
    if psi is None:
        raise InternalAxiomError("comparison into the cotensor failed to factor")
    invertible = psi.rows == psi.cols and psi.rank() == psi.rows
    fmap, gmap, kmap = cot1.equalizer_maps()
    hypothesis_ok = preserves_equalizer(w, fmap, gmap, kmap, side="left")
    return PsiComparison(psi, invertible, hypothesis_ok)


def cotensor_assoc(l, m, n):
    """The associativity iso L box (M box N) -> (L box M) box N.

    Runs the eight runtime flatness hypotheses first and raises
    HypothesisFailed when any of them does not hold; under the hypotheses
    the iso exists, is verified invertible and bicolinear, and its matrix is
    returned.
    """
    l = as_bicomodule(l)
    m = as_bicomodule(m)
    n = as_bicomodule(n)
    if l.right_coring != m.left_coring or m.right_coring != n.left_coring:
        raise AlgebraMismatch("cotensor associativity needs composable bicomodules")
    c_prime = m.left_coring
    c_mid = m.right_coring
    c_outer_left = l.left_coring
    c_outer_right = n.right_coring

    cot_mn = cotensor(m, n, deep_checks=False)
    cot_lm = cotensor(l, m, deep_checks=False)
    f1, f2, k1 = cot_mn.equalizer_maps()
    g1, g2, k2 = cot_lm.equalizer_maps()
    lcp = tensor_chain((l.carrier, c_prime.carrier))
    cn = tensor_chain((c_mid.carrier, n.carrier))
    checks = [
        ("C' (x) - on the M,N equalizer",
         preserves_equalizer(c_prime.carrier, f1, f2, k1, side="left")),
        ("L (x) - on the M,N equalizer",
         preserves_equalizer(l.carrier, f1, f2, k1, side="left")),
        ("(L (x) C') (x) - on the M,N equalizer",
         preserves_equalizer(lcp, f1, f2, k1, side="left")),
        ("- (x) C'' on the M,N equalizer",
         preserves_equalizer(c_outer_right.carrier, f1, f2, k1, side="right")),
        ("- (x) C on the L,M equalizer",
         preserves_equalizer(c_mid.carrier, g1, g2, k2, side="right")),
        ("- (x) N on the L,M equalizer",
         preserves_equalizer(n.carrier, g1, g2, k2, side="right")),
        ("- (x) (C (x) N) on the L,M equalizer",
         preserves_equalizer(cn, g1, g2, k2, side="right")),
        ("C''' (x) - on the L,M equalizer",
         preserves_equalizer(c_outer_left.carrier, g1, g2, k2, side="left")),
    ]
    if not all(ok for _, ok in checks):
        raise HypothesisFailed("cotensor associativity hypotheses failed", checks)
    if cot_mn.bicomodule is None or cot_lm.bicomodule is None:
        raise HypothesisFailed(
            "inner cotensor coactions unavailable",
            list(cot_mn.flags.items()) + list(cot_lm.flags.items()),
        )

    outer_r = cotensor(l, cot_mn.bicomodule, deep_checks=False)
    outer_l = cotensor(cot_lm.bicomodule, n, deep_checks=False)
    field = l.field
    il = Matrix.identity(field, l.dim)
    inn = Matrix.identity(field, n.dim)
    rg12 = regroup((l.carrier, m.carrier, n.carrier), (1, 2))
    rg21 = regroup((l.carrier, m.carrier, n.carrier), (2, 1))
    emb_r = (
        rg12.bwd
        @ induced(kron(il, cot_mn.inclusion), outer_r.chain, rg12.tgt)
        @ outer_r.inclusion
    )
    emb_l = (
        rg21.bwd
        @ induced(kron(cot_lm.inclusion, inn), outer_l.chain, rg21.tgt)
        @ outer_l.inclusion
    )
    psi1 = solve_matrix(emb_l, emb_r)
    if psi1 is None:
        raise InternalAxiomError("associativity comparison failed to factor")
    if not (psi1.rows == psi1.cols and psi1.rank() == psi1.rows):
        raise InternalAxiomError("associativity comparison is not invertible")
    if outer_r.bicomodule is None or outer_l.bicomodule is None:
        raise HypothesisFailed(
            "outer cotensor coactions unavailable",
            list(outer_r.flags.items()) + list(outer_l.flags.items()),
        )
    rep = validate_comodule_map(
        ComoduleMap(outer_r.bicomodule, outer_l.bicomodule, psi1, check=False)
    )
    if not rep.ok:
        raise InternalAxiomError("associativity comparison is not bicolinear: %r" % rep)
    return psi1
