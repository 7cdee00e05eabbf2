"""Exact dense matrices over Q and F_p, plus the solvers everything rests on.

Conventions used throughout coringlab:
  * vectors are columns, a linear map is a matrix acting on the left,
  * composition g after f is g @ f,
  * kron(A, B)[i*p + k][j*q + l] = A[i][j] * B[k][l]  (row-major blocks),
  * vec flattens row-major, so vec(A @ X @ B) = kron(A, B^T) @ vec(X).

Matrices are immutable (tuple of row tuples) and hashable, so they can key
caches. RREF results are cached per instance. Zero rows and columns are
fully supported; a 0 x n matrix is a legitimate map from K^n to K^0.
"""

from fractions import Fraction

from .errors import FieldMismatch, ShapeError
from .fields import Field


def _check_same_field(a, b):
    if a.field != b.field:
        raise FieldMismatch("matrices over %r and %r" % (a.field, b.field))


class Matrix:
    __slots__ = ("field", "rows", "cols", "data", "_rref", "_hash", "_support")

    def __init__(self, field, entries):
        assert isinstance(field, Field)
        data = []
        cols = None
        for row in entries:
            row = tuple(field.coerce(x) for x in row)
            if cols is None:
                cols = len(row)
            elif len(row) != cols:
                raise ShapeError("ragged rows")
            data.append(row)
        self.field = field
        self.rows = len(data)
        self.cols = 0 if cols is None else cols
        self.data = tuple(data)
        self._rref = None
        self._hash = None
        self._support = None

    @classmethod
    def _make(cls, field, data, cols):
        """Trusted constructor: data is a tuple of equal-length row tuples."""
        m = object.__new__(cls)
        m.field = field
        m.rows = len(data)
        m.cols = cols
        m.data = data
        m._rref = None
        m._hash = None
        m._support = None
        return m

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero
        row = (z,) * cols
        return cls._make(field, (row,) * rows, cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        data = tuple(
            tuple(o if i == j else z for j in range(n)) for i in range(n)
        )
        return cls._make(field, data, n)

    @classmethod
    def elementary(cls, field, rows, cols, i, j):
        """Matrix unit E_ij: 1 in row i, column j, zero elsewhere."""
        assert 0 <= i < rows and 0 <= j < cols
        z, o = field.zero, field.one
        data = tuple(
            tuple(o if (r == i and c == j) else z for c in range(cols))
            for r in range(rows)
        )
        return cls._make(field, data, cols)

    @classmethod
    def column(cls, field, entries):
        return cls(field, [[x] for x in entries])

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        """Build a matrix whose j-th column is columns[j] (lists of scalars)."""
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ShapeError("from_columns needs rows= when empty")
            rows = len(columns[0])
        for c in columns:
            if len(c) != rows:
                raise ShapeError("ragged columns")
        data = tuple(
            tuple(field.coerce(c[i]) for c in columns) for i in range(rows)
        )
        return cls._make(field, data, len(columns))

    # -- basic structure ---------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row_tuple(self, i):
        return self.data[i]

    def col_list(self, j):
        return [row[j] for row in self.data]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self):
        if self.rows > 8 or self.cols > 8:
            return "<Matrix %dx%d over %r>" % (self.rows, self.cols, self.field)
        body = "; ".join(
            " ".join(self.field.format_scalar(x) for x in row) for row in self.data
        )
        return "Matrix(%r, [%s])" % (self.field, body)

    def is_zero(self):
        return all(not x for row in self.data for x in row)

    def transpose(self):
        data = tuple(
            tuple(self.data[i][j] for i in range(self.rows))
            for j in range(self.cols)
        )
        return Matrix._make(self.field, data, self.rows)

    def take_rows(self, indices):
        data = tuple(self.data[i] for i in indices)
        return Matrix._make(self.field, data, self.cols)

    def take_cols(self, indices):
        indices = list(indices)
        data = tuple(tuple(row[j] for j in indices) for row in self.data)
        return Matrix._make(self.field, data, len(indices))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        _check_same_field(self, other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("add %dx%d to %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        p = self.field.modulus
        if p is None:
            data = tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            )
        else:
            data = tuple(
                tuple((a + b) % p for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            )
        return Matrix._make(self.field, data, self.cols)

    def __sub__(self, other):
        _check_same_field(self, other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(
                "subtract %dx%d from %dx%d" % (other.rows, other.cols, self.rows, self.cols)
            )
        p = self.field.modulus
        if p is None:
            data = tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            )
        else:
            data = tuple(
                tuple((a - b) % p for a, b in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)
            )
        return Matrix._make(self.field, data, self.cols)

    def __neg__(self):
        p = self.field.modulus
        if p is None:
            data = tuple(tuple(-a for a in row) for row in self.data)
        else:
            data = tuple(tuple((-a) % p for a in row) for row in self.data)
        return Matrix._make(self.field, data, self.cols)

    def scale(self, c):
        c = self.field.coerce(c)
        p = self.field.modulus
        if p is None:
            data = tuple(tuple(c * a for a in row) for row in self.data)
        else:
            data = tuple(tuple(c * a % p for a in row) for row in self.data)
        return Matrix._make(self.field, data, self.cols)

    def row_support(self):
        """Per-row tuples of (column, entry) pairs for the nonzero entries.

        Cached; matrices are immutable so the support never changes. This is
        what makes products of the big, mostly-zero structure maps (kron of
        identities with something small) affordable.
        """
        if self._support is None:
            self._support = tuple(
                tuple((j, x) for j, x in enumerate(row) if x)
                for row in self.data
            )
        return self._support

    def __matmul__(self, other):
        _check_same_field(self, other)
        if self.cols != other.rows:
            raise ShapeError(
                "compose %dx%d with %dx%d" % (self.rows, self.cols, other.rows, other.cols)
            )
        p = self.field.modulus
        bsup = other.row_support()
        ocols = other.cols
        zero = self.field.zero
        out = []
        for arow in self.row_support():
            acc = [0] * ocols
            for k, a in arow:
                for j, b in bsup[k]:
                    acc[j] = acc[j] + a * b
            if p is None:
                out.append(tuple(x if x else zero for x in acc))
            else:
                out.append(tuple(x % p if x else zero for x in acc))
        return Matrix._make(self.field, tuple(out), ocols)

    # -- echelon form and friends -------------------------------------------

    def rref(self):
        """Reduced row echelon form. Returns (R, pivot_columns)."""
        if self._rref is not None:
            return self._rref
        p = self.field.modulus
        nr, nc = self.rows, self.cols
        m = [list(row) for row in self.data]
        pivots = []
        r = 0
        for c in range(nc):
            if r == nr:
                break
            pr = None
            for i in range(r, nr):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                m[r], m[pr] = m[pr], m[r]
            prow = m[r]
            pv = prow[c]
            if p is None:
                if pv == -1:
                    for j in range(c, nc):
                        if prow[j]:
                            prow[j] = -prow[j]
                elif pv != 1:
                    inv = 1 / Fraction(pv)
                    for j in range(c, nc):
                        if prow[j]:
                            q = prow[j] * inv
                            prow[j] = q.numerator if q.denominator == 1 else q
                for i in range(nr):
                    if i == r:
                        continue
                    f = m[i][c]
                    if not f:
                        continue
                    row = m[i]
                    for j in range(c, nc):
                        v = prow[j]
                        if v:
                            row[j] = row[j] - f * v
            else:
                if pv != 1:
                    inv = pow(pv, p - 2, p)
                    for j in range(c, nc):
                        if prow[j]:
                            prow[j] = prow[j] * inv % p
                for i in range(nr):
                    if i == r:
                        continue
                    f = m[i][c]
                    if not f:
                        continue
                    row = m[i]
                    for j in range(c, nc):
                        v = prow[j]
                        if v:
                            row[j] = (row[j] - f * v) % p
            pivots.append(c)
            r += 1
        zero = self.field.zero
        R = Matrix._make(
            self.field,
            tuple(tuple(x if x else zero for x in row) for row in m),
            nc,
        )
        result = (R, tuple(pivots))
        R._rref = result
        self._rref = result
        return result

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Columns form a basis of {x : self @ x = 0}.

        Each free column of the RREF contributes one basis vector with a 1 in
        that coordinate; free columns are taken in increasing order.
        """
        R, pivots = self.rref()
        return _kernel_from_rref(self.field, R, pivots, self.cols)

    def kernel_and_retraction(self):
        """Kernel basis K plus a retraction ret with ret @ K = identity."""
        R, pivots = self.rref()
        K = _kernel_from_rref(self.field, R, pivots, self.cols)
        pivotset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivotset]
        z, o = self.field.zero, self.field.one
        data = tuple(
            tuple(o if c == f else z for c in range(self.cols)) for f in free
        )
        ret = Matrix._make(self.field, data, self.cols)
        return K, ret


def _kernel_from_rref(field, R, pivots, ncols):
    pivotset = set(pivots)
    free = [c for c in range(ncols) if c not in pivotset]
    z, o = field.zero, field.one
    p = field.modulus
    cols = []
    for f in free:
        v = [z] * ncols
        v[f] = o
        for i, pc in enumerate(pivots):
            val = R.data[i][f]
            if val:
                v[pc] = -val if p is None else (-val) % p
        cols.append(v)
    data = tuple(tuple(c[i] for c in cols) for i in range(ncols))
    return Matrix._make(field, data, len(free))


# -- module level helpers ---------------------------------------------------


def rref(m):
    return m.rref()


def kernel_basis(m):
    return m.kernel_basis()


def hstack(mats):
    mats = list(mats)
    if not mats:
        raise ShapeError("hstack of nothing")
    rows = mats[0].rows
    field = mats[0].field
    for m in mats[1:]:
        _check_same_field(mats[0], m)
        if m.rows != rows:
            raise ShapeError("hstack with differing row counts")
    data = tuple(
        tuple(x for m in mats for x in m.data[i]) for i in range(rows)
    )
    return Matrix._make(field, data, sum(m.cols for m in mats))


def vstack(mats):
    mats = list(mats)
    if not mats:
        raise ShapeError("vstack of nothing")
    cols = mats[0].cols
    field = mats[0].field
    for m in mats[1:]:
        _check_same_field(mats[0], m)
        if m.cols != cols:
            raise ShapeError("vstack with differing column counts")
    data = tuple(row for m in mats for row in m.data)
    return Matrix._make(field, data, cols)


def kron(a, b):
    """Kronecker product in row-major block convention."""
    _check_same_field(a, b)
    p = a.field.modulus
    z = a.field.zero
    one = a.field.one
    width = a.cols * b.cols
    bcols = b.cols
    out = []
    for arow in a.row_support():
        for brow in b.row_support():
            row = [z] * width
            for j, x in arow:
                base = j * bcols
                if x == one:
                    for l, y in brow:
                        row[base + l] = y
                elif p is None:
                    for l, y in brow:
                        row[base + l] = x * y
                else:
                    for l, y in brow:
                        row[base + l] = x * y % p
            out.append(tuple(row))
    return Matrix._make(a.field, tuple(out), width)


def kron_all(mats):
    mats = list(mats)
    assert mats
    acc = mats[0]
    for m in mats[1:]:
        acc = kron(acc, m)
    return acc


def perm_swap(field, m, n):
    """The flip K^m (x) K^n -> K^n (x) K^m, e_i (x) e_j -> e_j (x) e_i."""
    z, o = field.zero, field.one
    data = [[z] * (m * n) for _ in range(n * m)]
    for i in range(m):
        for j in range(n):
            data[j * m + i][i * n + j] = o
    return Matrix._make(field, tuple(tuple(r) for r in data), m * n)


def direct_sum(a, b):
    _check_same_field(a, b)
    z = a.field.zero
    top = tuple(row + (z,) * b.cols for row in a.data)
    bot = tuple((z,) * a.cols + row for row in b.data)
    return Matrix._make(a.field, top + bot, a.cols + b.cols)


def vec(m):
    """Row-major flattening of m into a column vector."""
    data = tuple((x,) for row in m.data for x in row)
    return Matrix._make(m.field, data, 1)


def unvec(field, v, rows, cols):
    if v.rows != rows * cols or v.cols != 1:
        raise ShapeError("unvec of %dx%d into %dx%d" % (v.rows, v.cols, rows, cols))
    data = tuple(
        tuple(v.data[i * cols + j][0] for j in range(cols)) for i in range(rows)
    )
    return Matrix._make(field, data, cols)


class Feasible:
    """Affine system solved: x0 is one solution, nullspace columns span the
    homogeneous solutions."""

    feasible = True

    def __init__(self, x0, nullspace):
        self.x0 = x0
        self.nullspace = nullspace

    def __repr__(self):
        return "Feasible(dim=%d)" % self.nullspace.cols


class Infeasible:
    feasible = False

    def __init__(self, rank_deficit):
        self.rank_deficit = rank_deficit

    def __repr__(self):
        return "Infeasible(rank_deficit=%d)" % self.rank_deficit


def solve_affine(equations):
    """Solve a joint affine system {L_i @ x = b_i}.

    equations: iterable of (L, b) pairs where L is m_i x n and b is m_i x 1.
    All L share the column count n. Returns Feasible(x0, nullspace) or
    Infeasible(rank_deficit), where rank_deficit counts pivot rows of the
    augmented RREF that are inconsistent.
    """
    equations = list(equations)
    if not equations:
        raise ShapeError("solve_affine with no equations")
    n = equations[0][0].cols
    field = equations[0][0].field
    for L, b in equations:
        if L.cols != n:
            raise ShapeError("mixed unknown counts in solve_affine")
        if b.cols != 1 or b.rows != L.rows:
            raise ShapeError("right hand side shape mismatch")
    A = vstack([L for L, _ in equations])
    bb = vstack([b for _, b in equations])
    R, pivots = hstack([A, bb]).rref()
    bad = [c for c in pivots if c >= n]
    if bad:
        return Infeasible(rank_deficit=len(bad))
    # restricted to the first n columns this is exactly the RREF of A
    z = field.zero
    x = [z] * n
    for i, pc in enumerate(pivots):
        x[pc] = R.data[i][n]
    x0 = Matrix._make(field, tuple((v,) for v in x), 1)
    Rn = R.take_cols(range(n))
    null = _kernel_from_rref(field, Rn, pivots, n)
    return Feasible(x0, null)


def solve_matrix(a, b):
    """One X with a @ X = b, or None. Solves all columns in a single RREF."""
    _check_same_field(a, b)
    if a.rows != b.rows:
        raise ShapeError("solve_matrix row mismatch")
    n = a.cols
    R, pivots = hstack([a, b]).rref()
    if any(c >= n for c in pivots):
        return None
    z = a.field.zero
    data = [[z] * b.cols for _ in range(n)]
    for i, pc in enumerate(pivots):
        for j in range(b.cols):
            data[pc][j] = R.data[i][n + j]
    return Matrix._make(a.field, tuple(tuple(r) for r in data), b.cols)


def left_inverse(m):
    """X with X @ m = identity, or None if m has deficient column rank."""
    xt = solve_matrix(m.transpose(), Matrix.identity(m.field, m.cols))
    return None if xt is None else xt.transpose()


def same_column_space(a, b):
    """Exact test that two matrices have the same column space."""
    _check_same_field(a, b)
    if a.rows != b.rows:
        raise ShapeError("column space comparison needs equal row counts")
    ra = a.rank()
    rb = b.rank()
    if ra != rb:
        return False
    return hstack([a, b]).rank() == ra
