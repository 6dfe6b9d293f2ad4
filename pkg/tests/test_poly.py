"""Root counting by half-plane, checked against numpy and hand-built products."""

import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from liecert.poly import (
    RationalPolynomial as P,
    axis_parts,
    cauchy_index,
    count_real_roots,
    count_real_roots_in_interval,
    count_real_roots_squarefree,
    isolate_real_roots,
    poly_gcd,
    root_sign_counts,
    squarefree_decomposition,
    squarefree_part,
)


def counts(p):
    r = root_sign_counts(p)
    return (r.n_neg, r.n_zero_real, r.n_pos)


# -- frozen values -------------------------------------------------------


def test_two_real_roots():
    assert counts(P([-1, 0, 1])) == (1, 0, 1)


def test_pure_imaginary_pair():
    assert counts(P([1, 0, 1])) == (0, 2, 0)


def test_plastic_cubic():
    # one real root near 1.3247, complex pair in the left half plane
    assert counts(P([-1, -1, 0, 1])) == (2, 0, 1)


def test_fourth_roots_of_two():
    # axis roots are irrational here; no rational axis factor exists
    assert counts(P([-2, 0, 0, 0, 1])) == (1, 2, 1)


def test_zero_root_multiplicity():
    assert counts(P([0, 1])) == (0, 1, 0)
    assert counts(P([0, 0, 0, 1])) == (0, 3, 0)


def test_mixed_product_with_multiplicities():
    p = P([1])
    for f, k in [(P([-1, 1]), 3), (P([2, 1]), 2), (P([0, 1]), 1)]:
        for _ in range(k):
            p = p * f
    assert counts(p) == (2, 1, 3)


def test_repeated_axis_pair_with_offaxis_root():
    p = P([1, 0, 1]) * P([1, 0, 1]) * P([-3, 1])
    assert counts(p) == (0, 4, 1)


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        root_sign_counts(P([]))


def test_constant_has_no_roots():
    assert counts(P([5])) == (0, 0, 0)


# -- structural helpers --------------------------------------------------


def test_axis_parts_signs():
    # p(t) = t^4 + t^3 + t^2 + t + 1 at t = iy
    re, im = axis_parts(P([1, 1, 1, 1, 1]))
    assert re.coeffs == (F(1), F(0), F(-1), F(0), F(1))
    assert im.coeffs == (F(0), F(1), F(0), F(-1))


def test_squarefree_decomposition_structure():
    p = P([0, 0, 1]) * P([-1, 1]) * P([-1, 1]) * P([-1, 1])
    parts = squarefree_decomposition(p)
    assert [(tuple(f.coeffs), k) for f, k in parts] == [
        ((F(0), F(1)), 2),
        ((F(-1), F(1)), 3),
    ]


def test_gcd_monic():
    a = P([-1, 0, 1]) * P([2, 1]) * 3
    b = P([-1, 0, 1]) * P([5, 1]) * 7
    g = poly_gcd(a, b)
    assert g == P([-1, 0, 1])


def test_real_root_counts_with_multiplicity():
    p = P([-1, 1]) * P([-1, 1]) * P([4, 0, 1])
    assert count_real_roots(p) == 2


def test_interval_count_excludes_endpoints():
    f = P([0, -2, 0, 1])  # roots -sqrt2, 0, sqrt2
    assert count_real_roots_in_interval(f, F(0), F(2)) == 1
    assert count_real_roots_in_interval(f, F(-2), F(2)) == 3


def test_isolation_separates_and_covers():
    f = P([0, -2, 0, 1])
    ivs = isolate_real_roots(f)
    assert len(ivs) == 3
    assert ivs[1] == (F(0), F(0))
    for a, b in ivs:
        if a == b:
            assert f(a) == 0
        else:
            assert f(a) * f(b) < 0


def test_cauchy_index_simple_pole():
    # 1/t jumps -oo -> +oo at 0: index +1
    assert cauchy_index(P([0, 1]), P([1])) == 1
    # -1/t: index -1
    assert cauchy_index(P([0, 1]), P([-1])) == -1


# -- randomized cross-checks --------------------------------------------


def _np_counts(p, margin=1e-7):
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    if any(0 < abs(z.real) < margin for z in roots):
        return None  # too close to classify in floating point
    nn = sum(1 for z in roots if z.real < -margin)
    npos = sum(1 for z in roots if z.real > margin)
    return (nn, len(roots) - nn - npos, npos)


def test_random_polynomials_against_numpy():
    rng = random.Random(20260816)
    checked = 0
    for _ in range(300):
        deg = rng.randint(1, 9)
        cs = [F(rng.randint(-9, 9)) for _ in range(deg)]
        cs.append(F(rng.choice([1, 2, -1, 3])))
        p = P(cs)
        if p.degree < 1:
            continue
        expected = _np_counts(p)
        if expected is None:
            continue
        assert counts(p) == expected
        checked += 1
    assert checked > 200


def test_random_constructed_products():
    rng = random.Random(99)
    for _ in range(120):
        p = P([F(1)])
        expect = [0, 0, 0]
        for _ in range(rng.randint(1, 4)):
            kind = rng.random()
            k = rng.randint(1, 3)
            if kind < 0.5:
                a = F(rng.randint(-4, 4), rng.randint(1, 3))
                f = P([-a, F(1)])
                slot = 0 if a < 0 else (1 if a == 0 else 2)
                expect[slot] += k
            else:
                a = F(rng.randint(-3, 3), rng.randint(1, 2))
                b = F(rng.randint(1, 6))
                f = P([a * a + b, -2 * a, F(1)])
                slot = 0 if a < 0 else (1 if a == 0 else 2)
                expect[slot] += 2 * k
            for _ in range(k):
                p = p * f
        assert counts(p) == tuple(expect)


coef = st.fractions(min_value=-12, max_value=12, max_denominator=4)


@given(st.lists(coef, min_size=2, max_size=7))
@settings(max_examples=80, deadline=None)
def test_total_count_is_degree(cs):
    p = P(cs)
    if p.degree < 1:
        return
    r = root_sign_counts(p)
    assert r.total == p.degree


@given(st.lists(coef, min_size=2, max_size=6))
@settings(max_examples=60, deadline=None)
def test_reflection_swaps_halves(cs):
    p = P(cs)
    if p.degree < 1:
        return
    r = root_sign_counts(p)
    q = root_sign_counts(p.reflect())
    assert (r.n_neg, r.n_zero_real, r.n_pos) == (q.n_pos, q.n_zero_real, q.n_neg)


@given(st.lists(coef, min_size=2, max_size=6))
@settings(max_examples=60, deadline=None)
def test_squarefree_part_has_same_distinct_roots(cs):
    p = P(cs)
    if p.degree < 1:
        return
    sf = squarefree_part(p)
    total = sum(
        count_real_roots_squarefree(f) for f, _ in squarefree_decomposition(p)
    )
    assert count_real_roots_squarefree(sf) == total
