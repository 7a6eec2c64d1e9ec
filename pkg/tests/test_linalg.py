import random

import pytest
import sympy
from hypothesis import given, strategies as st

from bcinverse import MatrixRing, PrimeField, Rationals
from bcinverse.errors import ShapeError
from bcinverse.linalg import (
    Matrix,
    column_space_contains,
    group_inverse_matrix,
    inner_inverse_matrix,
    inverse,
    rank,
    rank_factorization,
    rref,
    solve_left,
    solve_right,
)

from oracles import all_matrices_mod, fp_span_size, mat_mul_mod, sympy_rank

Q = Rationals()
F2, F5, F7 = PrimeField(2), PrimeField(5), PrimeField(7)


def M(rows, field=Q, ncols=None):
    return Matrix.from_rows(field, rows, ncols)


def matrices(field, max_dim=6, square=False):
    if field == Q:
        entry = st.fractions(min_value=-9, max_value=9, max_denominator=5)
    else:
        entry = st.integers(0, field.p - 1)

    @st.composite
    def build(draw):
        m = draw(st.integers(1, max_dim))
        n = m if square else draw(st.integers(1, max_dim))
        # bias towards rank-deficient inputs by repeating rows
        rows = [draw(st.lists(entry, min_size=n, max_size=n)) for _ in range(m)]
        if m > 1 and draw(st.booleans()):
            rows[-1] = list(rows[0])
        return M(rows, field)

    return build()


any_matrix = st.sampled_from([Q, F2, F5, F7]).flatmap(matrices)
any_square = st.sampled_from([Q, F2, F5, F7]).flatmap(lambda F: matrices(F, square=True))


def test_rref_examples():
    I = Matrix.identity(Q, 3)
    r = rref(I)
    assert r.reduced == I and r.rank == 3 and r.pivots == (0, 1, 2) and r.transform == I
    Z = Matrix.zeros(Q, 2, 3)
    r = rref(Z)
    assert r.reduced == Z and r.rank == 0 and r.pivots == () and r.transform == Matrix.identity(Q, 2)
    assert rank(M([[1, 2], [2, 4]])) == 1


@given(any_matrix)
def test_rref_transform_identity(A):
    r = rref(A)
    assert r.transform @ A == r.reduced
    assert inverse(r.transform) is not None
    # reduced form: pivots are 1 and their columns are unit vectors
    for i, col in enumerate(r.pivots):
        for k in range(A.nrows):
            assert r.reduced[k, col] == (1 if k == i else 0)
    for k in range(r.rank, A.nrows):
        assert all(x == 0 for x in r.reduced.rows[k])


@given(matrices(Q))
def test_rank_over_q_matches_sympy(A):
    assert rank(A) == sympy_rank([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in A.rows])
    assert rref(A).reduced.rows == tuple(
        tuple(sympy.Rational(x) for x in row) for row in sympy.Matrix(A.rows).rref()[0].tolist())


@given(st.sampled_from([F2, PrimeField(3)]).flatmap(lambda F: matrices(F, max_dim=4)))
def test_rank_over_fp_matches_span_count(A):
    cols = [tuple(A[i, j] for i in range(A.nrows)) for j in range(A.ncols)]
    assert A.field.p ** rank(A) == fp_span_size(cols, A.field.p)


def test_solve_examples():
    A = M([[2, 1], [1, 1]])
    B = M([[1, 0], [3, 5]])
    assert solve_right(A, B) == inverse(A) @ B
    assert solve_right(Matrix.zeros(Q, 2, 2), M([[1, 0], [0, 0]])) is None
    P = M([[1, 0], [0, 0]])
    assert solve_right(P, P) == P


@given(st.sampled_from([Q, F5]).flatmap(lambda F: st.tuples(matrices(F, 5), st.integers(1, 4), st.data())))
def test_solve_right_consistency(args):
    A, k, data = args
    F = A.field
    entry = st.integers(-5, 5)
    rows = data.draw(st.lists(st.lists(entry, min_size=k, max_size=k), min_size=A.nrows, max_size=A.nrows))
    B = M(rows, F)
    if data.draw(st.booleans()):
        # force a consistent right-hand side
        X0 = M(data.draw(st.lists(st.lists(entry, min_size=k, max_size=k), min_size=A.ncols,
                                  max_size=A.ncols)), F)
        B = A @ X0
    X = solve_right(A, B)
    consistent = rank(A.hstack(B)) == rank(A)
    assert (X is not None) == consistent
    if X is not None:
        assert A @ X == B
    Y = solve_left(A.T, B.T)
    assert (Y is None) == (X is None)
    if Y is not None:
        assert Y @ A.T == B.T


def test_shape_errors():
    with pytest.raises(ShapeError):
        M([[1, 2]]) @ M([[1, 2]])
    with pytest.raises(ShapeError):
        M([[1, 2], [3]])
    with pytest.raises(ShapeError):
        M([[1]]) @ M([[1]], F5)


def test_rank_factorization_examples():
    f = rank_factorization(M([[1, 2], [2, 4]]))
    assert f.left == M([[1], [2]]) and f.right == M([[1, 2]]) and f.rank == 1
    I = Matrix.identity(Q, 3)
    f = rank_factorization(I)
    assert f.left == I and f.right == I
    f = rank_factorization(Matrix.zeros(Q, 2, 2))
    assert f.rank == 0 and f.left.ncols == 0 and f.right.nrows == 0


@given(any_matrix)
def test_rank_factorization_invariants(A):
    f = rank_factorization(A)
    if f.rank:
        assert f.left @ f.right == A
    assert rank(f.left) == rank(f.right) == f.rank == rank(A)


@given(any_matrix)
def test_inner_inverse_property(A):
    X = inner_inverse_matrix(A)
    assert A @ X @ A == A


def test_group_inverse_examples():
    e = M([[1, 1], [0, 0]])
    assert group_inverse_matrix(e) == e
    assert group_inverse_matrix(M([[0, 1], [0, 0]])) is None
    A = M([[2, 1], [1, 1]])
    assert group_inverse_matrix(A) == inverse(A)


@given(any_square)
def test_group_inverse_iff_rank_condition(A):
    Y = group_inverse_matrix(A)
    assert (Y is not None) == (rank(A) == rank(A @ A))
    if Y is not None:
        assert A @ Y @ A == A and Y @ A @ Y == Y and A @ Y == Y @ A


def test_group_inverse_bruteforce_m2f2():
    for a in all_matrices_mod(2, 2):
        witnesses = [y for y in all_matrices_mod(2, 2)
                     if mat_mul_mod(mat_mul_mod(a, y, 2), a, 2) == a
                     and mat_mul_mod(mat_mul_mod(y, a, 2), y, 2) == y
                     and mat_mul_mod(a, y, 2) == mat_mul_mod(y, a, 2)]
        assert len(witnesses) <= 1
        Y = group_inverse_matrix(Matrix(F2, 2, 2, a))
        assert (Y.rows if Y is not None else None) == (witnesses[0] if witnesses else None)


def _poly(A, coeffs):
    n = A.nrows
    out = Matrix.zeros(A.field, n, n)
    power = Matrix.identity(A.field, n)
    for c in coeffs:
        scaled = Matrix(A.field, n, n, tuple(tuple(A.field.mul(c, x) for x in row) for row in power.rows))
        out = out + scaled
        power = power @ A
    return out


def test_group_inverse_commutes_with_commutant():
    rng = random.Random(1958)
    done = 0
    while done < 500:
        n = rng.randint(1, 4)
        A = Matrix.from_rows(F5, [[rng.randrange(5) for _ in range(n)] for _ in range(n)])
        Y = group_inverse_matrix(A)
        if Y is None:
            continue
        D = _poly(A, [rng.randrange(5) for _ in range(rng.randint(1, 4))])
        assert A @ D == D @ A
        assert Y @ D == D @ Y
        done += 1


def test_column_space_contains():
    A = M([[1, 0], [0, 0]])
    assert column_space_contains(A, M([[5], [0]]))
    assert not column_space_contains(A, M([[0], [1]]))


def test_matrix_ring_bridge():
    R = MatrixRing(F5, 2)
    a = R.element([[1, 2], [3, 4]])
    assert R.to_matrix(a.value) @ R.to_matrix(a.value) == R.to_matrix((a * a).value)
