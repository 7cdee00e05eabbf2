"""Finite dimensional associative algebras, their homs, and bimodules.

An algebra is stored structurally: mult is a dim x dim^2 matrix whose column
i*dim + j is the product e_i * e_j, unit is a dim x 1 column. A bimodule over
(A, B) carries left_action: dim x (dimA * dim) and right_action:
dim x (dim * dimB), with the same flat row-major column indexing.

Constructors only make cheap shape checks; the validate_* functions run the
full axiom suites and return reports with named violations.
"""

from .errors import AlgebraMismatch, FieldMismatch, ShapeError, ValidationFailed
from .fields import Field
from .linsys import MatrixSystem
from .matrix import Matrix, direct_sum, kron, vstack


class Violation:
    """One named axiom failure. witness locates a differing matrix entry."""

    def __init__(self, axiom, witness=None, detail=""):
        self.axiom = axiom
        self.witness = witness
        self.detail = detail

    def __repr__(self):
        if self.witness is None:
            return "Violation(%s)" % self.axiom
        return "Violation(%s at %r)" % (self.axiom, self.witness)


class ValidationReport:
    def __init__(self, subject, violations=None):
        self.subject = subject
        self.violations = list(violations or [])

    @property
    def ok(self):
        return not self.violations

    def add(self, axiom, witness=None, detail=""):
        self.violations.append(Violation(axiom, witness, detail))

    def extend(self, other):
        self.violations.extend(other.violations)

    def __repr__(self):
        if self.ok:
            return "ValidationReport(%s: ok)" % self.subject
        return "ValidationReport(%s: %r)" % (self.subject, self.violations)


def first_difference(a, b):
    """Position of the first differing entry of two equal-shaped matrices."""
    for i in range(a.rows):
        ra, rb = a.data[i], b.data[i]
        if ra != rb:
            for j in range(a.cols):
                if ra[j] != rb[j]:
                    return (i, j)
    return None


def _check_equal(report, axiom, lhs, rhs):
    if lhs != rhs:
        report.add(axiom, witness=first_difference(lhs, rhs))


class Algebra:
    """Unital associative algebra given by structure matrices."""

    def __init__(self, field, dim, mult, unit):
        if not isinstance(field, Field):
            raise TypeError("field must be a Field")
        if dim < 1:
            raise ShapeError("algebras must have dimension >= 1")
        if mult.field != field or unit.field != field:
            raise FieldMismatch("algebra structure over the wrong field")
        if (mult.rows, mult.cols) != (dim, dim * dim):
            raise ShapeError("mult must be dim x dim^2")
        if (unit.rows, unit.cols) != (dim, 1):
            raise ShapeError("unit must be dim x 1")
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit

    def identity_matrix(self):
        return Matrix.identity(self.field, self.dim)

    def left_mult(self, a):
        """The matrix of x -> a * x for a column a."""
        return self.mult @ kron(a, self.identity_matrix())

    def right_mult(self, a):
        return self.mult @ kron(self.identity_matrix(), a)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash(("Algebra", self.mult, self.unit))

    def __repr__(self):
        return "<Algebra dim=%d over %r>" % (self.dim, self.field)


def validate_algebra(alg):
    report = ValidationReport("algebra")
    ident = alg.identity_matrix()
    m = alg.mult
    _check_equal(
        report,
        "associativity",
        m @ kron(m, ident),
        m @ kron(ident, m),
    )
    _check_equal(report, "left unit", m @ kron(alg.unit, ident), ident)
    _check_equal(report, "right unit", m @ kron(ident, alg.unit), ident)
    return report


def field_algebra(field):
    """The ground field as a one dimensional algebra."""
    one = Matrix.identity(field, 1)
    return Algebra(field, 1, one, one)


def product_algebra(a, b):
    """Direct product A x B with componentwise operations."""
    if a.field != b.field:
        raise FieldMismatch("product of algebras over different fields")
    field = a.field
    da, db = a.dim, b.dim
    dim = da + db
    z = field.zero
    cols = []
    for i in range(dim):
        for j in range(dim):
            col = [z] * dim
            if i < da and j < da:
                src = a.mult.col_list(i * da + j)
                for k in range(da):
                    col[k] = src[k]
            elif i >= da and j >= da:
                src = b.mult.col_list((i - da) * db + (j - da))
                for k in range(db):
                    col[da + k] = src[k]
            cols.append(col)
    mult = Matrix.from_columns(field, cols, rows=dim)
    unit = vstack([a.unit, b.unit])
    return Algebra(field, dim, mult, unit)


def matrix_algebra(field, n):
    """Full matrix algebra M_n, basis e_ij flattened row-major."""
    dim = n * n
    z, o = field.zero, field.one
    cols = []
    for p in range(dim):
        i, j = divmod(p, n)
        for q in range(dim):
            k, l = divmod(q, n)
            col = [z] * dim
            if j == k:
                col[i * n + l] = o
            cols.append(col)
    mult = Matrix.from_columns(field, cols, rows=dim)
    unit = Matrix.column(field, [o if p % (n + 1) == 0 else z for p in range(dim)])
    return Algebra(field, dim, mult, unit)


def upper_triangular_algebra(field):
    """2x2 upper triangular matrices, basis e11, e12, e22."""
    z, o = field.zero, field.one
    # products: e11*e11=e11, e11*e12=e12, e12*e22=e12, e22*e22=e22, rest 0
    table = {
        (0, 0): 0,
        (0, 1): 1,
        (1, 2): 1,
        (2, 2): 2,
    }
    cols = []
    for i in range(3):
        for j in range(3):
            col = [z, z, z]
            if (i, j) in table:
                col[table[(i, j)]] = o
            cols.append(col)
    mult = Matrix.from_columns(field, cols, rows=3)
    unit = Matrix.column(field, [o, z, o])
    return Algebra(field, 3, mult, unit)


def truncated_polynomial_algebra(field, n):
    """K[x] / (x^n), basis 1, x, ..., x^(n-1)."""
    z, o = field.zero, field.one
    cols = []
    for i in range(n):
        for j in range(n):
            col = [z] * n
            if i + j < n:
                col[i + j] = o
            cols.append(col)
    mult = Matrix.from_columns(field, cols, rows=n)
    unit = Matrix.column(field, [o] + [z] * (n - 1))
    return Algebra(field, n, mult, unit)


class AlgebraHom:
    """Unital algebra homomorphism, stored as its matrix."""

    def __init__(self, source, target, matrix):
        if source.field != target.field:
            raise FieldMismatch("hom between algebras over different fields")
        if (matrix.rows, matrix.cols) != (target.dim, source.dim):
            raise ShapeError("hom matrix must be target.dim x source.dim")
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, alg):
        return cls(alg, alg, Matrix.identity(alg.field, alg.dim))

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise AlgebraMismatch("hom composition endpoint mismatch")
        return AlgebraHom(other.source, self.target, self.matrix @ other.matrix)

    def __eq__(self, other):
        if not isinstance(other, AlgebraHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash(("AlgebraHom", self.matrix))

    def __repr__(self):
        return "<AlgebraHom %d -> %d>" % (self.source.dim, self.target.dim)


def validate_algebra_hom(hom):
    report = ValidationReport("algebra hom")
    f = hom.matrix
    _check_equal(report, "preserves unit", f @ hom.source.unit, hom.target.unit)
    _check_equal(
        report,
        "multiplicative",
        f @ hom.source.mult,
        hom.target.mult @ kron(f, f),
    )
    return report


class Bimodule:
    """An (A, B)-bimodule with explicit action matrices.

    left_action:  dim x (A.dim * dim), column a*dim + m  is  e_a . e_m
    right_action: dim x (dim * B.dim), column m*B.dim + b is  e_m . e_b
    Zero dimensional bimodules are allowed.
    """

    def __init__(self, left_algebra, right_algebra, dim, left_action, right_action):
        if left_algebra.field != right_algebra.field:
            raise FieldMismatch("bimodule algebras over different fields")
        field = left_algebra.field
        if left_action.field != field or right_action.field != field:
            raise FieldMismatch("bimodule actions over the wrong field")
        if (left_action.rows, left_action.cols) != (dim, left_algebra.dim * dim):
            raise ShapeError("left action must be dim x (A.dim * dim)")
        if (right_action.rows, right_action.cols) != (dim, dim * right_algebra.dim):
            raise ShapeError("right action must be dim x (dim * B.dim)")
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.dim = dim
        self.left_action = left_action
        self.right_action = right_action

    @property
    def field(self):
        return self.left_algebra.field

    def identity_matrix(self):
        return Matrix.identity(self.field, self.dim)

    @classmethod
    def regular(cls, alg):
        """A as an (A, A)-bimodule. Both actions are mult itself."""
        return cls(alg, alg, alg.dim, alg.mult, alg.mult)

    @classmethod
    def zero(cls, left_algebra, right_algebra):
        field = left_algebra.field
        return cls(
            left_algebra,
            right_algebra,
            0,
            Matrix.zero(field, 0, 0),
            Matrix.zero(field, 0, 0),
        )

    def direct_sum(self, other):
        if self.left_algebra != other.left_algebra or self.right_algebra != other.right_algebra:
            raise AlgebraMismatch("direct sum of bimodules over different algebras")
        da = self.left_algebra.dim
        db = self.right_algebra.dim
        dm, dn = self.dim, other.dim
        # reorder the kron-flattened action inputs into block form by hand
        field = self.field
        z = field.zero
        dim = dm + dn
        lcols = []
        for a in range(da):
            for m in range(dim):
                if m < dm:
                    src = self.left_action.col_list(a * dm + m)
                    lcols.append(list(src) + [z] * dn)
                else:
                    src = other.left_action.col_list(a * dn + (m - dm))
                    lcols.append([z] * dm + list(src))
        rcols = []
        for m in range(dim):
            for b in range(db):
                if m < dm:
                    src = self.right_action.col_list(m * db + b)
                    rcols.append(list(src) + [z] * dn)
                else:
                    src = other.right_action.col_list((m - dm) * db + b)
                    rcols.append([z] * dm + list(src))
        return Bimodule(
            self.left_algebra,
            self.right_algebra,
            dim,
            Matrix.from_columns(field, lcols, rows=dim),
            Matrix.from_columns(field, rcols, rows=dim),
        )

    def restrict_left(self, hom):
        """Pull the left action back along an algebra hom into left_algebra."""
        if hom.target != self.left_algebra:
            raise AlgebraMismatch("restriction hom must land in the left algebra")
        L = self.left_action @ kron(hom.matrix, self.identity_matrix())
        return Bimodule(hom.source, self.right_algebra, self.dim, L, self.right_action)

    def restrict_right(self, hom):
        if hom.target != self.right_algebra:
            raise AlgebraMismatch("restriction hom must land in the right algebra")
        R = self.right_action @ kron(self.identity_matrix(), hom.matrix)
        return Bimodule(self.left_algebra, hom.source, self.dim, self.left_action, R)

    def __eq__(self, other):
        if not isinstance(other, Bimodule):
            return NotImplemented
        return (
            self.left_algebra == other.left_algebra
            and self.right_algebra == other.right_algebra
            and self.dim == other.dim
            and self.left_action == other.left_action
            and self.right_action == other.right_action
        )

    def __hash__(self):
        return hash(("Bimodule", self.left_action, self.right_action))

    def __repr__(self):
        return "<Bimodule dim=%d over (%d, %d)>" % (
            self.dim,
            self.left_algebra.dim,
            self.right_algebra.dim,
        )


def validate_bimodule(m):
    report = ValidationReport("bimodule")
    A, B = m.left_algebra, m.right_algebra
    ia = A.identity_matrix()
    ib = B.identity_matrix()
    im = m.identity_matrix()
    L, R = m.left_action, m.right_action
    _check_equal(report, "left unit", L @ kron(A.unit, im), im)
    _check_equal(
        report,
        "left associativity",
        L @ kron(A.mult, im),
        L @ kron(ia, L),
    )
    _check_equal(report, "right unit", R @ kron(im, B.unit), im)
    _check_equal(
        report,
        "right associativity",
        R @ kron(R, ib),
        R @ kron(im, B.mult),
    )
    _check_equal(
        report,
        "actions commute",
        R @ kron(L, ib),
        L @ kron(ia, R),
    )
    return report


class BimoduleMap:
    """A bilinear map of (A, B)-bimodules, checked on construction."""

    def __init__(self, source, target, matrix, check=True):
        if source.left_algebra != target.left_algebra or source.right_algebra != target.right_algebra:
            raise AlgebraMismatch("bimodule map endpoints over different algebras")
        if (matrix.rows, matrix.cols) != (target.dim, source.dim):
            raise ShapeError("bimodule map matrix must be target.dim x source.dim")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            report = validate_bimodule_map(self)
            if not report.ok:
                raise ValidationFailed("map is not bilinear: %r" % report, report)

    def __repr__(self):
        return "<BimoduleMap %d -> %d>" % (self.source.dim, self.target.dim)


def validate_bimodule_map(f):
    report = ValidationReport("bimodule map")
    A = f.source.left_algebra
    B = f.source.right_algebra
    ia = A.identity_matrix()
    ib = B.identity_matrix()
    _check_equal(
        report,
        "left linear",
        f.matrix @ f.source.left_action,
        f.target.left_action @ kron(ia, f.matrix),
    )
    _check_equal(
        report,
        "right linear",
        f.matrix @ f.source.right_action,
        f.target.right_action @ kron(f.matrix, ib),
    )
    return report


class ProjectiveSplit:
    """Result of a projectivity test: a section of the free cover, if any."""

    def __init__(self, section):
        self.section = section

    def __bool__(self):
        return self.section is not None


def is_projective(m, side="left"):
    """Decide projectivity of the one-sided module underlying m.

    side="left": seek a left A-linear section of the cover A (x) K^dim -> M
    sending a (x) e_i to a . e_i (the cover matrix is exactly left_action).
    side="right" mirrors this. Returns a ProjectiveSplit whose section maps
    M into the free module.
    """
    field = m.field
    dm = m.dim
    if dm == 0:
        return ProjectiveSplit(Matrix.zero(field, 0, 0))
    if side == "left":
        A = m.left_algebra
        da = A.dim
        cover = m.left_action
        free_action = kron(A.mult, Matrix.identity(field, dm))
        sys = MatrixSystem(field, (da * dm, dm))
        sys.require(lambda s: cover @ s, Matrix.identity(field, dm))
        sys.require_zero(
            lambda s: s @ m.left_action
            - free_action @ kron(Matrix.identity(field, da), s),
            (da * dm, da * dm),
        )
    elif side == "right":
        B = m.right_algebra
        db = B.dim
        cover = m.right_action
        free_action = kron(Matrix.identity(field, dm), B.mult)
        sys = MatrixSystem(field, (dm * db, dm))
        sys.require(lambda s: cover @ s, Matrix.identity(field, dm))
        sys.require_zero(
            lambda s: s @ m.right_action
            - free_action @ kron(s, Matrix.identity(field, db)),
            (dm * db, dm * db),
        )
    else:
        raise ValueError("side must be 'left' or 'right'")
    res = sys.solve()
    if not res.feasible:
        return ProjectiveSplit(None)
    return ProjectiveSplit(res.x0)
