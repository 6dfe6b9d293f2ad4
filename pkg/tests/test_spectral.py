"""Spectral machinery: decompositions, splittings, gaps."""

import random
from fractions import Fraction as F

import numpy as np
import pytest

from liecert.algebra import StructureError
from liecert.linalg import identity, mat_sub, matmul, matrix, vector
from liecert.poly import RationalPolynomial as P, root_sign_counts
from liecert.spectral import (
    axis_factor,
    char_poly,
    counts_at,
    invariant_splitting,
    is_hyperbolic,
    is_partially_hyperbolic,
    jordan_chevalley,
    operator_sign_counts,
    restrict_and_quotient,
    spectral_gap,
)


def test_char_poly_companion():
    # companion matrix of t^3 - 2t - 5
    m = matrix([[0, 0, 5], [1, 0, 2], [0, 1, 0]])
    assert char_poly(m).coeffs == (F(-5), F(-2), F(0), F(1))


def test_hyperbolicity_flags():
    assert is_hyperbolic(matrix([[1, 0], [0, -1]]))
    assert not is_hyperbolic(matrix([[0, -1], [1, 0]]))
    assert is_partially_hyperbolic(matrix([[0, 0], [0, 1]]))
    assert not is_partially_hyperbolic(matrix([[0, 1], [0, 0]]))
    assert is_partially_hyperbolic(matrix([[1, 0], [0, -1]]))


def test_jordan_chevalley_jordan_block():
    m = matrix([[2, 1], [0, 2]])
    jc = jordan_chevalley(m)
    assert jc.semisimple == matrix([[2, 0], [0, 2]])
    assert jc.nilpotent == matrix([[0, 1], [0, 0]])
    assert jc.exact
    assert jc.hyperbolic == jc.semisimple  # real spectrum
    assert jc.elliptic == matrix([[0, 0], [0, 0]])


def test_jordan_chevalley_rotation():
    m = matrix([[0, -1], [1, 0]])
    jc = jordan_chevalley(m)
    assert jc.semisimple == m
    assert jc.exact
    assert jc.hyperbolic == matrix([[0, 0], [0, 0]])
    assert jc.elliptic == m


def test_jordan_chevalley_shifted_rotation():
    # eigenvalues 1 +- i: hyperbolic part is the identity
    m = matrix([[1, -1], [1, 1]])
    jc = jordan_chevalley(m)
    assert jc.exact
    assert jc.hyperbolic == identity(2)
    assert jc.elliptic == matrix([[0, -1], [1, 0]])


def test_jordan_chevalley_honest_inexact():
    # companion of t^4 - 2: real parts 0, +-2^(1/4); no rational refinement
    m = matrix([[0, 0, 0, 2], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    jc = jordan_chevalley(m)
    assert jc.nilpotent == tuple(tuple(F(0) for _ in range(4)) for _ in range(4))
    assert not jc.exact
    assert jc.hyperbolic is None
    hf = np.array(jc.hyperbolic_float)
    ef = np.array(jc.elliptic_float)
    sf = np.array([[float(x) for x in row] for row in jc.semisimple])
    assert np.allclose(hf + ef, sf, atol=1e-8)
    # float parts commute and have the right spectra
    assert np.allclose(hf @ ef, ef @ hf, atol=1e-8)
    assert np.allclose(sorted(np.linalg.eigvals(hf).real),
                       sorted([-2**0.25, 0.0, 0.0, 2**0.25]), atol=1e-8)


def test_jordan_chevalley_mixed_block():
    # diag-ish with both a Jordan block and a rotation
    m = matrix([
        [3, 1, 0, 0],
        [0, 3, 0, 0],
        [0, 0, 0, -2],
        [0, 0, 2, 0],
    ])
    jc = jordan_chevalley(m)
    assert jc.exact
    assert jc.nilpotent == matrix([
        [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]
    ])
    assert jc.hyperbolic == matrix([
        [3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]
    ])


def test_axis_factor_simple():
    # (t^2 + 1)(t - 2): axis factor t^2 + 1
    p = P([1, 0, 1]) * P([-2, 1])
    assert axis_factor(p) == P([1, 0, 1])


def test_axis_factor_with_zero():
    p = P([0, 1]) * P([4, 0, 1]) * P([-1, 1])
    assert axis_factor(p) == P([0, 1]) * P([4, 0, 1])


def test_axis_factor_irrational_returns_none():
    assert axis_factor(P([-2, 0, 0, 0, 1])) is None


def test_invariant_splitting_diagonal():
    m = matrix([[-1, 0, 0], [0, 0, 0], [0, 0, 2]])
    s = invariant_splitting(m)
    assert (s.stable_dim, s.neutral_dim, s.unstable_dim) == (1, 1, 1)
    assert s.neutral_basis == (vector([0, 1, 0]),)
    assert s.degraded is None
    assert s.residual <= 1e-9
    sb = np.array(s.stable_basis)
    assert np.allclose(np.abs(sb), [[1, 0, 0]], atol=1e-8)
    ub = np.array(s.unstable_basis)
    assert np.allclose(np.abs(ub), [[0, 0, 1]], atol=1e-8)


def test_invariant_splitting_nilpotent_block():
    m = matrix([[0, 1], [0, 0]])
    s = invariant_splitting(m)
    assert (s.stable_dim, s.neutral_dim, s.unstable_dim) == (0, 2, 0)
    assert len(s.neutral_basis) == 2
    assert s.stable_basis == () and s.unstable_basis == ()


def test_invariant_splitting_defective_stable():
    # stable Jordan block plus an unstable direction
    m = matrix([[-1, 1, 0], [0, -1, 0], [0, 0, 3]])
    s = invariant_splitting(m)
    assert (s.stable_dim, s.neutral_dim, s.unstable_dim) == (2, 0, 1)
    assert s.degraded is None
    sb = np.array(s.stable_basis)
    # stable subspace is the x-y plane
    assert np.allclose(sb[:, 2], 0, atol=1e-8)
    assert np.linalg.matrix_rank(sb, tol=1e-8) == 2


def test_invariant_splitting_irrational_axis():
    # companion of t^4 - 2: neutral basis is irrational, counts still exact
    m = matrix([[0, 0, 0, 2], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    s = invariant_splitting(m)
    assert (s.stable_dim, s.neutral_dim, s.unstable_dim) == (1, 2, 1)
    assert s.neutral_basis is None
    assert s.degraded is not None
    assert s.stable_basis is not None and len(s.stable_basis) == 1


def test_spectral_gap_exact_dyadic():
    p = P([0, 1]) * P([-4, 0, 1])  # roots 0, +-2
    gap, exact = spectral_gap(p)
    assert gap == F(2) and exact


def test_spectral_gap_certified_bound():
    p = P([-1, -1, 1])  # golden ratio roots, gap = (sqrt5 - 1)/2
    gap, exact = spectral_gap(p)
    assert not exact
    g = (5 ** 0.5 - 1) / 2
    assert float(gap) <= g < float(gap) + 1e-6


def test_spectral_gap_all_axis():
    assert spectral_gap(P([1, 0, 1])) == (None, True)


def test_counts_at_moves_the_line():
    p = P([-1, 0, 1])  # roots +-1
    c = counts_at(p, F(2))
    assert (c.n_neg, c.n_zero_real, c.n_pos) == (2, 0, 0)
    c = counts_at(p, F(1))
    assert (c.n_neg, c.n_zero_real, c.n_pos) == (1, 1, 0)


def test_restrict_and_quotient_block_triangular():
    m = matrix([
        [-1, 0, 7],
        [0, 2, 1],
        [0, 0, 3],
    ])
    basis = (vector([1, 0, 0]), vector([0, 1, 0]))
    rq = restrict_and_quotient(m, basis)
    assert (rq.restricted_counts.n_neg, rq.restricted_counts.n_pos) == (1, 1)
    assert (rq.quotient_counts.n_neg, rq.quotient_counts.n_pos) == (0, 1)
    assert char_poly(rq.quotient).coeffs == (F(-3), F(1))


def test_restrict_and_quotient_rejects_noninvariant():
    m = matrix([[0, -1], [1, 0]])
    with pytest.raises(StructureError):
        restrict_and_quotient(m, (vector([1, 0]),))


def test_random_block_triangular_counts_add():
    rng = random.Random(11)
    for _ in range(25):
        n, k = 4, 2
        rows = []
        for i in range(n):
            rows.append([
                F(rng.randint(-3, 3)) if (j >= k or i < k) else F(0)
                for j in range(n)
            ])
        m = matrix(rows)
        basis = tuple(vector([1 if c == i else 0 for c in range(n)]) for i in range(k))
        rq = restrict_and_quotient(m, basis)  # raises internally on mismatch
        total = operator_sign_counts(m)
        assert rq.restricted_counts.total + rq.quotient_counts.total == total.total


def test_jordan_chevalley_random_consistency():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 4)
        m = matrix([[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        jc = jordan_chevalley(m)
        assert mat_sub(m, jc.semisimple) == jc.nilpotent
        assert matmul(jc.semisimple, jc.nilpotent) == matmul(
            jc.nilpotent, jc.semisimple
        )
        if jc.exact:
            assert mat_sub(jc.semisimple, jc.hyperbolic) == jc.elliptic
            assert matmul(jc.hyperbolic, jc.elliptic) == matmul(
                jc.elliptic, jc.hyperbolic
            )
            hc = root_sign_counts(char_poly(jc.hyperbolic))
            assert hc.n_zero_real >= operator_sign_counts(m).n_zero_real
