"""Affine systems whose unknown is a matrix.

Constraints are given as callables op(X) -> Matrix that must be affine in X.
They are linearized by evaluating on the zero matrix and on each matrix unit,
which is exact and needs no symbolic machinery. The same pattern serves
projectivity splittings, colinear sections and every separability solve.
"""

from .errors import ShapeError
from .matrix import Matrix, hstack, solve_affine, unvec, vec


class MatrixSystem:
    """Collect affine constraints op(X) == target on one unknown matrix X."""

    def __init__(self, field, shape):
        self.field = field
        self.shape = shape
        self._blocks = []

    def require(self, op, target):
        rows, cols = self.shape
        zero = Matrix.zero(self.field, rows, cols)
        base = vec(op(zero))
        if target.rows * target.cols != base.rows:
            raise ShapeError("constraint target shape mismatch")
        columns = []
        for i in range(rows):
            for j in range(cols):
                e = Matrix.elementary(self.field, rows, cols, i, j)
                columns.append(vec(op(e)) - base)
        if columns:
            L = hstack(columns)
        else:
            L = Matrix.zero(self.field, base.rows, 0)
        self._blocks.append((L, vec(target) - base))

    def require_zero(self, op, out_shape):
        self.require(op, Matrix.zero(self.field, *out_shape))

    def solve(self):
        """Returns MatrixSolution or the raw Infeasible."""
        rows, cols = self.shape
        if not self._blocks:
            # no constraints: everything solves
            return MatrixSolution(
                Matrix.zero(self.field, rows, cols),
                Matrix.identity(self.field, rows * cols),
                self.shape,
                self.field,
            )
        res = solve_affine(self._blocks)
        if not res.feasible:
            return res
        return MatrixSolution(
            unvec(self.field, res.x0, rows, cols), res.nullspace, self.shape, self.field
        )


class MatrixSolution:
    """A feasible matrix system: particular solution plus homogeneous basis."""

    feasible = True

    def __init__(self, x0, nullspace, shape, field):
        self.x0 = x0
        self.nullspace = nullspace
        self.shape = shape
        self.field = field

    @property
    def dim(self):
        return self.nullspace.cols

    def homogeneous(self, j):
        col = self.nullspace.take_cols([j])
        return unvec(self.field, col, *self.shape)

    def __repr__(self):
        return "MatrixSolution(shape=%r, dim=%d)" % (self.shape, self.dim)


def affine_matrix_of(op, shape, field):
    """Matrix L and column c with vec(op(X)) = L @ vec(X) + c."""
    rows, cols = shape
    zero = Matrix.zero(field, rows, cols)
    c = vec(op(zero))
    columns = []
    for i in range(rows):
        for j in range(cols):
            e = Matrix.elementary(field, rows, cols, i, j)
            columns.append(vec(op(e)) - c)
    if columns:
        L = hstack(columns)
    else:
        L = Matrix.zero(field, c.rows, 0)
    return L, c
