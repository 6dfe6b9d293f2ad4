"""Exact linear algebra: determinism, correctness against brute force."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from liecert.linalg import (
    charpoly,
    coords_in_basis,
    det,
    extend_basis,
    frac,
    identity,
    in_span,
    intersect_spaces,
    inverse,
    matmul,
    matrix,
    matvec,
    nullspace,
    rank,
    rref,
    row_basis,
    solve,
    spaces_equal,
    sum_spaces,
    symmetric_inertia,
    trace,
    vector,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=7)


def sq(rows):
    return matrix(rows)


def test_frac_rejects_floats():
    with pytest.raises(TypeError):
        frac(0.5)


def test_rref_is_canonical():
    m = sq([[2, 4], [1, 2]])
    r, pivots = rref(m)
    assert r == sq([[1, 2], [0, 0]])
    assert pivots == (0,)


def test_rank_and_nullspace_dimensions():
    m = sq([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    ns = nullspace(m)
    assert len(ns) == 1
    for v in ns:
        assert matvec(m, v) == vector([0, 0, 0])


def test_solve_and_inverse_roundtrip():
    m = sq([[2, 1], [1, 1]])
    b = vector([3, 2])
    x = solve(m, b)
    assert matvec(m, x) == b
    mi = inverse(m)
    assert matmul(m, mi) == identity(2)


def test_solve_inconsistent_returns_none():
    m = sq([[1, 1], [1, 1]])
    assert solve(m, vector([0, 1])) is None


def test_det_via_permutation_expansion():
    m = sq([[1, 2, 0], [3, 1, 1], [0, 2, 2]])
    # brute force over permutations
    import itertools

    n = 3
    total = F(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = F(1)
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    assert det(m) == total


def test_charpoly_matches_trace_and_det():
    m = sq([[1, 2], [3, 4]])
    cp = charpoly(m)  # ascending, det(tI - A)
    assert cp[-1] == 1
    assert cp[1] == -trace(m)
    assert cp[0] == det(m)


def test_charpoly_cayley_hamilton():
    m = sq([[0, 1, 0], [0, 0, 1], [2, -3, 1]])
    cp = charpoly(m)
    acc = [[F(0)] * 3 for _ in range(3)]
    power = identity(3)
    for c in cp:
        for i in range(3):
            for j in range(3):
                acc[i][j] += c * power[i][j]
        power = matmul(power, m)
    assert all(x == 0 for row in acc for x in row)


def test_span_operations():
    a = (vector([1, 0, 0]), vector([0, 1, 0]))
    b = (vector([0, 1, 0]), vector([0, 0, 1]))
    s = sum_spaces(a, b)
    assert len(row_basis(s)) == 3
    i = intersect_spaces(a, b)
    assert len(i) == 1
    assert in_span((vector([0, 1, 0]),), i[0])


def test_coords_in_basis():
    basis = (vector([1, 1]), vector([0, 1]))
    v = vector([2, 3])
    cs = coords_in_basis(basis, v)
    assert cs == (F(2), F(1))


def test_extend_basis_deterministic():
    part = (vector([1, 1, 0]),)
    idx = extend_basis(part, 3)
    # e0 enlarges the span; afterwards e1 = (1,1,0) - (1,0,0) is inside it
    assert idx == (0, 2)


def test_symmetric_inertia_diagonal():
    m = sq([[2, 0, 0], [0, -3, 0], [0, 0, 0]])
    assert symmetric_inertia(m) == (1, 1, 1)


def test_symmetric_inertia_zero_diagonal_pivot():
    # hyperbolic plane: eigenvalues +-1
    m = sq([[0, 1], [1, 0]])
    assert symmetric_inertia(m) == (1, 1, 0)


@given(
    st.lists(
        st.lists(rationals, min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows):
    m = matrix(rows)
    assert rank(m) + len(nullspace(m)) == 3


@given(
    st.lists(
        st.lists(rationals, min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
@settings(max_examples=60, deadline=None)
def test_rref_idempotent(rows):
    m = matrix(rows)
    r1, _ = rref(m)
    r2, _ = rref(r1)
    assert r1 == r2


@given(
    st.lists(
        st.lists(rationals, min_size=2, max_size=2),
        min_size=2,
        max_size=2,
    )
)
@settings(max_examples=60, deadline=None)
def test_spaces_equal_under_row_ops(rows):
    m = matrix(rows)
    doubled = matrix([[2 * x for x in row] for row in rows])
    nonzero_rows = tuple(r for r in m if any(x != 0 for x in r))
    nonzero_doubled = tuple(r for r in doubled if any(x != 0 for x in r))
    assert spaces_equal(nonzero_rows, nonzero_doubled)
