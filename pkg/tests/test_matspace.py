import pytest
from hypothesis import given, settings, strategies as st

from simsim.gfield import make_field
from simsim.matspace import (MatrixFq, mat_from_code, mat_mul, mat_add,
                             mat_rank, mat_inverse, identity, char_poly,
                             apply_poly, centralizer_basis, centralizer_in,
                             full_matrix_algebra, gl_order,
                             gl_conjugacy_classes, unit_count, kernel_basis,
                             rref, block_diag)


def mats(q, n):
    return st.integers(0, q ** (n * n) - 1).map(
        lambda c: mat_from_code(make_field(q), n, c))


@given(mats(2, 3), mats(2, 3), mats(2, 3))
def test_mat_mul_associative(A, B, C):
    assert mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C))


@given(st.sampled_from([2, 3, 5]), st.data())
@settings(max_examples=60)
def test_inverse(q, data):
    n = 3
    A = data.draw(mats(q, n))
    if mat_rank(A) == n:
        assert mat_mul(A, mat_inverse(A)) == identity(make_field(q), n)


@given(mats(3, 3))
def test_cayley_hamilton(A):
    from simsim.matspace import zero_matrix
    assert apply_poly(char_poly(A), A) == zero_matrix(A.ctx, A.n)


def test_rref_idempotent():
    ctx = make_field(3)
    rows = [[1, 2, 0, 1], [2, 1, 1, 0], [0, 0, 1, 1]]
    basis, pivots = rref(ctx, rows)
    again, pivots2 = rref(ctx, basis)
    assert basis == again and pivots == pivots2


def test_kernel_orthogonal_to_rows():
    ctx = make_field(2)
    rows = [[1, 1, 0, 1], [0, 1, 1, 0]]
    for v in kernel_basis(ctx, rows, 4):
        for r in rows:
            assert sum(ctx.mul(a, b) for a, b in zip(r, v)) % 2 == 0


def test_centralizer_of_identity_is_everything():
    ctx = make_field(2)
    Z = centralizer_basis((identity(ctx, 3),))
    assert Z.dim == 9


def test_centralizer_contains_polynomials_of_the_matrix():
    ctx = make_field(3)
    A = mat_from_code(ctx, 3, 7345)
    Z = centralizer_basis((A,))
    assert Z.contains(A)
    assert Z.contains(mat_mul(A, A))
    assert Z.contains(identity(ctx, 3))


def test_centralizer_in_consistent_with_direct():
    ctx = make_field(2)
    A = mat_from_code(ctx, 3, 300)
    Z = centralizer_basis((A,))
    for B in Z.elements():
        inner = centralizer_in(Z, B)
        direct = centralizer_basis((A, B))
        assert inner.key() == direct.key()
        break


@pytest.mark.parametrize("n,q,expect", [
    (1, 2, 1), (2, 2, 6), (3, 2, 168), (2, 3, 48), (4, 2, 20160),
])
def test_gl_order(n, q, expect):
    assert gl_order(n, q) == expect


def test_gl_conjugacy_classes_small():
    ctx = make_field(2)
    classes = gl_conjugacy_classes(2, ctx)
    assert sum(size for _, size in classes) == 6
    assert len(classes) == 3  # identity, unipotent, order-3


def test_unit_count_full_algebra():
    ctx = make_field(2)
    assert unit_count(full_matrix_algebra(ctx, 2)) == 6
    assert unit_count(full_matrix_algebra(ctx, 3)) == 168


def test_block_diag_shape():
    ctx = make_field(2)
    A = identity(ctx, 2)
    B = mat_from_code(ctx, 1, 1)
    M = block_diag(ctx, [A, B])
    assert M.n == 3 and M.entries[2][2] == 1 and M.entries[0][2] == 0
