import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ydforge.linalg import (
    DimensionError,
    Field,
    Matrix,
    MatrixMemo,
    apply_on_factor,
    check_ambient,
    identity,
    image_basis,
    inverse,
    kernel_basis,
    linear_operator_matrix,
    multi_index,
    permutation_matrix,
    quotient_by,
    rank,
    solve,
    solve_or_invert,
    swap,
    tensor_of_maps,
    unvec,
    vec,
)

QQ = Field.rationals()
F5 = Field.gf(5)
F7 = Field.gf(7)

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(field, rows, cols, elems=None):
    if elems is None:
        elems = small_q if field.prime is None else st.integers(0, field.prime - 1)
    return st.lists(st.lists(elems, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda rs: Matrix.from_rows(field, rs)
    )


def any_matrix(max_dim=4):
    return st.tuples(st.sampled_from([QQ, F5, F7]), st.integers(1, max_dim), st.integers(1, max_dim)).flatmap(
        lambda t: matrices(*t)
    )


def kron_oracle(f, g):
    a, b = f.entries(), g.entries()
    rows = []
    for i, k in itertools.product(range(f.rows), range(g.rows)):
        rows.append([a[i][j] * b[k][l] for j, l in itertools.product(range(f.cols), range(g.cols))])
    return Matrix.from_rows(f.field, rows)


# fields and scalars


def test_field_rejects_composite_modulus():
    with pytest.raises(ValueError):
        Field.gf(4)
    with pytest.raises(ValueError):
        Field.gf(1)


def test_scalars_parse_exactly():
    assert QQ.scalar("3/2") == Fraction(3, 2)
    assert QQ.scalar(-7) == -7
    assert F7.scalar("3/2") == 5  # 3 * 2^-1 = 3 * 4
    assert F7.scalar(-1) == 6
    assert F7.inv(3) == 5


def test_field_elements():
    assert F5.elements() == [0, 1, 2, 3, 4]


# tensor products


def test_kron_identity_case():
    assert tensor_of_maps(identity(QQ, 2), identity(QQ, 3)) == identity(QQ, 6)


def test_kron_scalar_case():
    f = Matrix.from_rows(QQ, [[2]])
    assert tensor_of_maps(f, identity(QQ, 2)) == Matrix.from_rows(QQ, [[2, 0], [0, 2]])


@given(matrices(F5, 2, 2), matrices(F5, 2, 2))
def test_kron_matches_entrywise_definition_f5(f, g):
    assert tensor_of_maps(f, g) == kron_oracle(f, g)


@given(any_matrix(3), any_matrix(3))
def test_kron_matches_entrywise_definition(f, g):
    if f.field != g.field:
        g = Matrix.from_rows(f.field, [[0] * g.cols] * g.rows)
    assert tensor_of_maps(f, g) == kron_oracle(f, g)


@given(any_matrix(3), st.integers(1, 3), st.integers(1, 3))
def test_apply_on_factor_equals_identity_kron(f, left, right):
    F = f.field
    n = left * f.cols * right
    m = Matrix.from_rows(F, [[(i * 7 + j * 3) % 5 - 2 for j in range(3)] for i in range(n)])
    expected = tensor_of_maps(identity(F, left), f, identity(F, right)) @ m
    assert apply_on_factor(f, m, left, right) == expected


def test_swap_and_permutations():
    v = tensor_of_maps(Matrix.column(QQ, [1, 2]), Matrix.column(QQ, [3, 4, 5]))
    w = tensor_of_maps(Matrix.column(QQ, [3, 4, 5]), Matrix.column(QQ, [1, 2]))
    assert swap(QQ, 2, 3) @ v == w
    p = permutation_matrix(QQ, [2, 3], [1, 0])
    assert p == swap(QQ, 2, 3)
    assert multi_index([2, 3, 4], 1 * 12 + 2 * 4 + 3) == (1, 2, 3)


# kernels, images, inverses


def test_kernel_examples():
    assert kernel_basis(Matrix.zeros(QQ, 3, 3)).basis == identity(QQ, 3)
    assert kernel_basis(identity(QQ, 3)).dim == 0
    k = kernel_basis(Matrix.from_rows(QQ, [[1, 1], [0, 0]]))
    assert k.dim == 1
    assert k.basis == Matrix.column(QQ, [-1, 1])


@given(any_matrix(5))
def test_rank_nullity_and_annihilation(f):
    k = kernel_basis(f)
    assert k.dim == f.cols - rank(f)
    assert (f @ k.basis).is_zero()
    assert image_basis(f).dim == rank(f)


@given(any_matrix(4))
def test_image_contains_columns(f):
    assert image_basis(f).contains(f)


def test_inverse_examples():
    assert inverse(identity(QQ, 4)) == identity(QQ, 4)
    j = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    assert solve_or_invert(j) == j
    assert solve_or_invert(Matrix.zeros(QQ, 2, 3)) is None
    assert inverse(Matrix.from_rows(QQ, [[1, 2], [2, 4]])) is None


@given(st.sampled_from([QQ, F5, F7]).flatmap(lambda F: matrices(F, 3, 3)))
def test_inverse_is_two_sided(f):
    inv = inverse(f)
    if inv is None:
        assert rank(f) < 3
    else:
        assert f @ inv == identity(f.field, 3) and inv @ f == identity(f.field, 3)


@given(any_matrix(4), st.data())
def test_solve_consistent_systems(a, data):
    x = data.draw(matrices(a.field, a.cols, 1))
    b = a @ x
    sol = solve(a, b)
    assert sol is not None and a @ sol == b


def test_solve_inconsistent():
    a = Matrix.from_rows(QQ, [[1, 1], [1, 1]])
    assert solve(a, Matrix.column(QQ, [1, 2])) is None


def test_large_entries_stay_exact():
    big = 2**40
    m = Matrix.from_rows(QQ, [[big, 1], [1, 0]])
    sq = m @ m
    assert sq.entries() == [[big * big + 1, big], [big, 1]]
    inv = inverse(m)
    assert m @ inv == identity(QQ, 2)


def test_rational_entries():
    m = Matrix.from_rows(QQ, [["1/2", "1/3"], ["-2/5", 0]])
    assert m.to_strings() == [["1/2", "1/3"], ["-2/5", "0"]]
    assert m @ inverse(m) == identity(QQ, 2)


# quotients


def test_quotient_examples():
    q = quotient_by(3, Matrix.zeros(QQ, 3, 0))
    assert q.projection == identity(QQ, 3)
    q = quotient_by(2, Matrix.column(QQ, [1, -1]))
    assert q.dim == 1
    e1, e2 = Matrix.unit_vector(QQ, 2, 0), Matrix.unit_vector(QQ, 2, 1)
    assert q.projection @ e1 == q.projection @ e2
    assert quotient_by(2, identity(QQ, 2)).dim == 0


@given(any_matrix(5))
def test_quotient_invariants(rel):
    q = quotient_by(rel.rows, rel)
    F = rel.field
    assert q.dim == rel.rows - rank(rel)
    assert q.projection @ q.section == identity(F, q.dim)
    assert (q.projection @ rel).is_zero()
    # section . projection - id lands in the relations
    diff = q.section @ q.projection - identity(F, rel.rows)
    assert rank(diff.hstack(rel)) == rank(rel)


def test_descend_rejects_unbalanced_maps():
    q = quotient_by(2, Matrix.column(QQ, [1, -1]))
    with pytest.raises(ValueError):
        q.descend(Matrix.row(QQ, [1, 0]))
    assert q.descend(Matrix.row(QQ, [1, 1])) == Matrix.from_rows(QQ, [[1]])


# vec and operators


@given(any_matrix(3))
def test_vec_roundtrip(m):
    assert unvec(vec(m), m.rows, m.cols) == m


def test_linear_operator_matrix_of_left_multiplication():
    a = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    op = linear_operator_matrix(lambda x: a @ x, QQ, 2, 2)
    # row-major vec: vec(a x) = (a (x) I) vec(x)
    assert op == tensor_of_maps(a, identity(QQ, 2))


# ambient cap and memo


def test_ambient_cap(monkeypatch):
    monkeypatch.setenv("YDFORGE_MAX_DIM", "10")
    assert check_ambient(10) == 10
    with pytest.raises(DimensionError):
        check_ambient(11)


def test_memo_keys_by_content():
    memo = MatrixMemo(2)
    a = Matrix.from_rows(QQ, [[1, 2]])
    b = Matrix.from_rows(QQ, [[1, 2]])
    memo.put(MatrixMemo.key(a), "x")
    assert memo.get(MatrixMemo.key(b)) == "x"
    memo.put(MatrixMemo.key(Matrix.from_rows(QQ, [[0]])), "y")
    memo.put(MatrixMemo.key(Matrix.from_rows(QQ, [[1]])), "z")
    assert memo.get(MatrixMemo.key(a)) is None  # evicted
    assert MatrixMemo.key(a) != MatrixMemo.key(Matrix.from_rows(F5, [[1, 2]]))


def test_prime_field_reduces_entries():
    m = Matrix.from_rows(F7, [[8, -1], [14, 3]])
    assert m.entries() == [[1, 6], [0, 3]]
    assert isinstance(m.data, np.ndarray)
