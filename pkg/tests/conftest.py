"""Shared hypothesis strategies for exact matrices over Q and F_p."""

from fractions import Fraction

from hypothesis import strategies as st

from coringlab import GF, QQ, Matrix

FIELDS = [QQ, GF(2), GF(3), GF(5), GF(7)]

fields = st.sampled_from(FIELDS)


def scalars(field):
    if field.modulus is None:
        return st.fractions(
            min_value=-5, max_value=5, max_denominator=6
        ).map(Fraction)
    return st.integers(min_value=0, max_value=field.modulus - 1)


def matrices(field, rows, cols):
    if rows == 0:
        # a list of no rows cannot remember its column count
        return st.just(Matrix.zero(field, 0, cols))
    return st.lists(
        st.lists(scalars(field), min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(lambda entries: Matrix(field, entries))


@st.composite
def field_and_matrix(draw, max_dim=4):
    field = draw(fields)
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(0, max_dim))
    return field, draw(matrices(field, rows, cols))


@st.composite
def field_and_square(draw, max_dim=4):
    field = draw(fields)
    n = draw(st.integers(0, max_dim))
    return field, draw(matrices(field, n, n))
