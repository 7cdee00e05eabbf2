"""Built-in example corings and homomorphisms.

These are the structures the test suite exercises end to end: trivial
corings, the one dimensional grouplike coring, canonical corings of algebra
extensions, and comatrix corings over the ground field.
"""

from .algebra import (
    Bimodule,
    field_algebra,
    product_algebra,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
)
from .coring import Coring, unit_algebra_hom
from .matrix import Matrix, kron
from .tensor import induced, tensor_chain


def trivial_coring(field):
    """The ground field as a coring over itself."""
    return Coring.trivial(field_algebra(field))


def trivial_coring_product(field):
    """K x K as a coring over itself."""
    K = field_algebra(field)
    return Coring.trivial(product_algebra(K, K))


def grouplike_coring(field):
    """One dimensional coring spanned by a grouplike element."""
    K = field_algebra(field)
    carrier = Bimodule.regular(K)
    one = Matrix.identity(field, 1)
    return Coring(K, carrier, one, one)


def canonical_coring(hom):
    """The canonical coring R (x)_S R of an algebra extension S -> R.

    Comultiplication sends [x (x) y] to [x (x) 1] (x)_R [1 (x) y]; the counit
    is multiplication.
    """
    S, R = hom.source, hom.target
    field = R.field
    reg = Bimodule.regular(R)
    left_leg = reg.restrict_right(hom)   # R as an (R, S)-bimodule
    right_leg = reg.restrict_left(hom)   # R as an (S, R)-bimodule
    carrier = tensor_chain((left_leg, right_leg))
    cc = tensor_chain((carrier, carrier))
    ir = Matrix.identity(field, R.dim)
    p1 = carrier.proj @ kron(ir, R.unit)  # r -> [r (x) 1]
    p2 = carrier.proj @ kron(R.unit, ir)  # r -> [1 (x) r]
    delta = induced(kron(p1, p2), carrier, cc)
    epsilon = induced(R.mult, carrier, reg)
    return Coring(R, carrier, delta, epsilon)


def sweedler_over_product(field):
    """Canonical coring of K -> K x K, a four dimensional coring over K^2."""
    K = field_algebra(field)
    return canonical_coring(unit_algebra_hom(product_algebra(K, K)))


def sweedler_dual_numbers(field):
    """Canonical coring of K -> K[x]/(x^2)."""
    return canonical_coring(unit_algebra_hom(truncated_polynomial_algebra(field, 2)))


def sweedler_upper_triangular(field):
    """Canonical coring of K -> (2x2 upper triangular matrices)."""
    return canonical_coring(unit_algebra_hom(upper_triangular_algebra(field)))


def comatrix_coring(field, n=2):
    """The n x n comatrix coring over the ground field.

    Basis e_ij (row-major); delta(e_ij) = sum_k e_ik (x) e_kj and
    epsilon(e_ij) = delta_ij.
    """
    K = field_algebra(field)
    dim = n * n
    ident = Matrix.identity(field, dim)
    carrier = Bimodule(K, K, dim, ident, ident)
    z, o = field.zero, field.one
    cols = []
    for p in range(dim):
        i, j = divmod(p, n)
        col = [z] * (dim * dim)
        for k in range(n):
            col[(i * n + k) * dim + (k * n + j)] = o
        cols.append(col)
    delta_amb = Matrix.from_columns(field, cols, rows=dim * dim)
    cc = tensor_chain((carrier, carrier))
    delta = cc.proj @ delta_amb
    eps = Matrix(field, [[o if divmod(p, n)[0] == divmod(p, n)[1] else z for p in range(dim)]])
    return Coring(K, carrier, delta, eps)


def fixture_corings(field):
    """The named coring fixtures, smallest first."""
    return [
        ("trivial", trivial_coring(field)),
        ("trivial-product", trivial_coring_product(field)),
        ("grouplike", grouplike_coring(field)),
        ("sweedler-product", sweedler_over_product(field)),
        ("comatrix-2", comatrix_coring(field, 2)),
    ]


def diagonal_hom(field):
    """K -> K x K, the unit of the product algebra."""
    K = field_algebra(field)
    return unit_algebra_hom(product_algebra(K, K))


def fixture_coring_homs(field):
    """Named coring homs covering identity, counit, and base change cases."""
    from .functors import CoringHom, counit_hom, identity_hom

    homs = []
    for name, coring in fixture_corings(field):
        homs.append(("identity on " + name, identity_hom(coring)))
        homs.append(("counit of " + name, counit_hom(coring)))
    rho = diagonal_hom(field)
    cross = CoringHom(
        trivial_coring(field), Coring.trivial(rho.target), rho, rho.matrix
    )
    homs.append(("diagonal base extension", cross))
    return homs
