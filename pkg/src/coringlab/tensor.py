"""Tensor products over algebras as explicit quotients of Kronecker products.

M (x)_A N is K^(dim M * dim N) modulo the balance relations
(m.a)(x)n - m(x)(a.n). A TensorSpace remembers the projection onto the
chosen quotient basis (the RREF-free coordinates) and a linear section of it.
Longer chains are built by iterated two-factor quotients, but the stored
projection and section always refer to the full flat Kronecker ambient of the
factor list, so maps between chains can be written in ambient coordinates
and pushed down with `induced`.

Factors that are themselves TensorSpaces are treated as atoms (their own
quotient coordinates); `regroup` provides the verified isomorphisms between
different bracketings.
"""

from functools import lru_cache

from .algebra import Bimodule, BimoduleMap
from .errors import (
    AlgebraMismatch,
    CoringlabError,
    InternalAxiomError,
    NotBalanced,
    ShapeError,
)
from .matrix import Matrix, kron, kron_all, same_column_space


def _quotient_of_columns(field, ambient, rel):
    """Quotient of K^ambient by the column space of rel.

    Returns (proj, section): proj kills rel's columns, proj @ section = 1,
    and the quotient basis is the set of RREF-free coordinates.
    """
    S, pivots = rel.transpose().rref()
    pivotset = set(pivots)
    free = [c for c in range(ambient) if c not in pivotset]
    z, o = field.zero, field.one
    p = field.modulus
    proj_rows = []
    for f in free:
        row = [z] * ambient
        row[f] = o
        proj_rows.append(row)
    for i, pc in enumerate(pivots):
        for alpha, f in enumerate(free):
            val = S.data[i][f]
            if val:
                proj_rows[alpha][pc] = -val if p is None else (-val) % p
    proj = Matrix._make(field, tuple(tuple(r) for r in proj_rows), ambient)
    sec_data = tuple(
        tuple(o if (free[alpha] == r) else z for alpha in range(len(free)))
        for r in range(ambient)
    )
    section = Matrix._make(field, sec_data, len(free))
    return proj, section


class TensorSpace(Bimodule):
    """A chain tensor product in its quotient coordinates."""

    def __init__(self, left_algebra, right_algebra, dim, left_action,
                 right_action, factors, proj, section):
        super().__init__(left_algebra, right_algebra, dim, left_action, right_action)
        self.factors = tuple(factors)
        self.proj = proj
        self.section = section

    @property
    def ambient_dim(self):
        d = 1
        for f in self.factors:
            d *= f.dim
        return d

    def __repr__(self):
        return "<TensorSpace dim=%d of %d factors>" % (self.dim, len(self.factors))


def as_plain(b):
    """Forget any tensor presentation; the result is its own atom."""
    return Bimodule(b.left_algebra, b.right_algebra, b.dim, b.left_action, b.right_action)


def presentation(b):
    """(proj, section) onto quotient coordinates; identity for plain atoms."""
    if isinstance(b, TensorSpace):
        return b.proj, b.section
    ident = Matrix.identity(b.field, b.dim)
    return ident, ident


def balance_relations(m, n):
    """Columns spanning the balancing subspace of the ambient M (x) N."""
    if m.right_algebra != n.left_algebra:
        raise AlgebraMismatch("tensor product needs matching middle algebra")
    im = Matrix.identity(m.field, m.dim)
    inn = Matrix.identity(n.field, n.dim)
    return kron(m.right_action, inn) - kron(im, n.left_action)


def _pair_quotient(m, n, factors):
    field = m.field
    dm, dn = m.dim, n.dim
    rel = balance_relations(m, n)
    proj, section = _quotient_of_columns(field, dm * dn, rel)
    im = Matrix.identity(field, dm)
    inn = Matrix.identity(field, dn)

    X, Y = m.left_algebra, n.right_algebra
    ix = Matrix.identity(field, X.dim)
    iy = Matrix.identity(field, Y.dim)
    l_amb = kron(m.left_action, inn)
    r_amb = kron(im, n.right_action)
    left = proj @ l_amb @ kron(ix, section)
    right = proj @ r_amb @ kron(section, iy)
    if left @ kron(ix, proj) != proj @ l_amb:
        raise NotBalanced("left action does not descend to the quotient")
    if right @ kron(proj, iy) != proj @ r_amb:
        raise NotBalanced("right action does not descend to the quotient")
    return TensorSpace(X, Y, proj.rows, left, right, factors, proj, section)


@lru_cache(maxsize=None)
def tensor_chain(factors):
    """The iterated tensor product of a tuple of composable bimodules.

    Cached by content: equal factor tuples share one TensorSpace, so
    quotient coordinates agree across call sites.
    """
    factors = tuple(factors)
    if len(factors) < 2:
        raise ShapeError("tensor_chain needs at least two factors")
    if len(factors) == 2:
        return _pair_quotient(factors[0], factors[1], factors)
    prev = tensor_chain(factors[:-1])
    last = factors[-1]
    pair = _pair_quotient(prev, last, (prev, last))
    ilast = Matrix.identity(prev.field, last.dim)
    proj = pair.proj @ kron(prev.proj, ilast)
    section = kron(prev.section, ilast) @ pair.section
    return TensorSpace(
        pair.left_algebra,
        pair.right_algebra,
        pair.dim,
        pair.left_action,
        pair.right_action,
        factors,
        proj,
        section,
    )


def tensor_over(m, n):
    """M (x)_A N for an (X, A)-bimodule and an (A, Y)-bimodule."""
    return tensor_chain((m, n))


def induced(F, src, tgt, check=True):
    """Push an ambient-coordinates map down to quotient coordinates.

    F maps the flat ambient of src to the flat ambient of tgt (for plain
    bimodules the ambient is the space itself). With check=True, verify that
    F respects the balance relations, i.e. the result is well defined.
    """
    ps, ss = presentation(src)
    pt, _ = presentation(tgt)
    if F.cols != ps.cols or F.rows != pt.cols:
        raise ShapeError(
            "ambient map is %dx%d, expected %dx%d"
            % (F.rows, F.cols, pt.cols, ps.cols)
        )
    h = pt @ F @ ss
    if check and h @ ps != pt @ F:
        raise NotBalanced("map does not descend to the tensor quotient")
    return h


def induced_map(f, g, check=True):
    """The map f (x) g between two-factor tensor products, as a BimoduleMap."""
    src = tensor_chain((f.source, g.source))
    tgt = tensor_chain((f.target, g.target))
    h = induced(kron(f.matrix, g.matrix), src, tgt, check=check)
    return BimoduleMap(src, tgt, h, check=check)


class Iso:
    """A verified invertible comparison map between two bimodules."""

    def __init__(self, src, tgt, fwd, bwd):
        if fwd @ bwd != Matrix.identity(fwd.field, tgt.dim):
            raise InternalAxiomError("claimed iso fails fwd . bwd = 1")
        if bwd @ fwd != Matrix.identity(fwd.field, src.dim):
            raise InternalAxiomError("claimed iso fails bwd . fwd = 1")
        self.src = src
        self.tgt = tgt
        self.fwd = fwd
        self.bwd = bwd

    def __repr__(self):
        return "<Iso %d ~ %d>" % (self.src.dim, self.tgt.dim)


def regroup(factors, sizes):
    """Iso between tensor_chain(factors) and the chain of grouped subchains.

    sizes lists the group lengths in order, e.g. (2, 1) regroups
    (M, B, D) into ((M (x) B), D). Groups of size one stay atomic.
    """
    factors = tuple(factors)
    sizes = tuple(sizes)
    if sum(sizes) != len(factors) or any(s < 1 for s in sizes):
        raise ShapeError("group sizes must partition the factor list")
    flat = tensor_chain(factors)
    groups = []
    start = 0
    for s in sizes:
        groups.append(factors[start:start + s])
        start += s
    outer_factors = tuple(
        tensor_chain(g) if len(g) > 1 else g[0] for g in groups
    )
    if len(outer_factors) == 1:
        ident = Matrix.identity(flat.field, flat.dim)
        return Iso(flat, outer_factors[0], ident, ident)
    outer = tensor_chain(outer_factors)
    projs = []
    sections = []
    for of in outer_factors:
        p, s = presentation(of)
        projs.append(p)
        sections.append(s)
    fwd = outer.proj @ kron_all(projs) @ flat.section
    bwd = flat.proj @ kron_all(sections) @ outer.section
    return Iso(flat, outer, fwd, bwd)


@lru_cache(maxsize=None)
def unit_right(m):
    """The canonical iso M (x)_A A ~ M."""
    reg = Bimodule.regular(m.right_algebra)
    chain = tensor_chain((m, reg))
    fwd = m.right_action @ chain.section
    bwd = chain.proj @ kron(m.identity_matrix(), m.right_algebra.unit)
    return Iso(chain, m, fwd, bwd)


@lru_cache(maxsize=None)
def unit_left(m):
    """The canonical iso A (x)_A M ~ M."""
    reg = Bimodule.regular(m.left_algebra)
    chain = tensor_chain((reg, m))
    fwd = m.left_action @ chain.section
    bwd = chain.proj @ kron(m.left_algebra.unit, m.identity_matrix())
    return Iso(chain, m, fwd, bwd)


def preserves_equalizer(z, f, g, k, side="right"):
    """Does tensoring with z preserve the equalizer of (f, g)?

    f, g are parallel bimodule maps M -> N, and k: E -> M must be their
    equalizer inclusion (checked). side="right" forms M (x) z and asks
    whether the kernel of (f - g) (x) z equals the image of k (x) z;
    side="left" mirrors with z (x) M. The comparison is exact, by column
    spaces in the quotient coordinates.
    """
    M, N = f.source, f.target
    if g.source != M or g.target != N:
        raise AlgebraMismatch("parallel maps must share endpoints")
    E = k.source
    if k.target != M:
        raise AlgebraMismatch("equalizer inclusion must land in the source")
    d = f.matrix - g.matrix
    if not (d @ k.matrix).is_zero():
        raise CoringlabError("k does not equalize (f, g)")
    if k.matrix.rank() != E.dim or not same_column_space(d.kernel_basis(), k.matrix):
        raise CoringlabError("k is not the equalizer of (f, g)")
    iz = Matrix.identity(z.field, z.dim)
    if side == "right":
        ch_m = tensor_chain((M, z))
        ch_n = tensor_chain((N, z))
        ch_e = tensor_chain((E, z))
        dz = induced(kron(d, iz), ch_m, ch_n)
        kz = induced(kron(k.matrix, iz), ch_e, ch_m)
    elif side == "left":
        ch_m = tensor_chain((z, M))
        ch_n = tensor_chain((z, N))
        ch_e = tensor_chain((z, E))
        dz = induced(kron(iz, d), ch_m, ch_n)
        kz = induced(kron(iz, k.matrix), ch_e, ch_m)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return same_column_space(dz.kernel_basis(), kz)
