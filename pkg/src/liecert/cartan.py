"""Cartan subalgebras, Cartan subspaces, restricted roots, chambers.

Cartan subalgebras are found by Engel-kernel descent and certified by an
exact nilpotency plus self-normalizer check, so the search heuristics
never affect soundness.  Restricted-root data is exact whenever the
generic element has rational eigenvalues; otherwise each joint invariant
subspace is still exact and carries the minimal polynomial of its family
of pairings, with float witnesses.  Per-root isolating intervals do not
exist in the merged case (conjugate functionals share one rational
subspace), so the block form is the strongest exact statement available.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    AlgebraError,
    LieAlgebra,
    StructureError,
    Subspace,
    as_subalgebra,
    bracket_space,
    center,
    centralizer,
    full_space,
    is_nilpotent,
    killing_form,
    normalizer,
    quotient_by_ideal,
    radical,
    zero_space,
)
from .linalg import (
    Matrix,
    Vector,
    dot,
    identity,
    is_zero_vector,
    mat_pow,
    matvec,
    nullspace,
    restrict_operator,
    row_basis,
    solve,
    symmetric_inertia,
    trace,
    vec_add,
    vec_scale,
    vec_sub,
    vector,
    zero_vector,
)
from .poly import RationalPolynomial, count_real_roots_squarefree, squarefree_part
from .spectral import apply_poly, char_poly, jordan_chevalley, operator_sign_counts

_ZERO = Fraction(0)
_ONE = Fraction(1)


# -- Engel subalgebras and Cartan subalgebras --------------------------------


def engel_subalgebra(g: LieAlgebra, x: Vector) -> Subspace:
    """Generalized null space of ad(x); always a subalgebra containing x."""
    n = g.dim
    if n == 0:
        return zero_space(g)
    a = g.ad(x)
    m = 1 << max(0, (n - 1).bit_length())
    return Subspace(g, nullspace(mat_pow(a, m)))


def is_csa(g: LieAlgebra, s: Subspace) -> bool:
    """Nilpotent and self-normalizing."""
    if s.dim == 0:
        return g.dim == 0
    try:
        sub, _ = as_subalgebra(s).as_algebra()
    except StructureError:
        return False
    if not is_nilpotent(sub):
        return False
    return normalizer(g, s).basis == s.basis


def _lift_rows(rows: Matrix, basis: Matrix, n: int) -> tuple[Vector, ...]:
    """Rows of coordinates w.r.t. `basis` back to ambient vectors."""
    out = []
    for r in rows:
        v = zero_vector(n)
        for c, b in zip(r, basis):
            v = vec_add(v, vec_scale(c, b))
        out.append(v)
    return tuple(out)


def find_csa(g: LieAlgebra, seed: int = 0, max_attempts: int = 400) -> Subspace:
    """Cartan subalgebra by Engel-kernel descent.

    Samples rational elements of growing coefficient height, takes the
    Engel subalgebra, and recurses inside it whenever the dimension
    strictly drops.  When a level stops shrinking it is checked to be
    nilpotent and self-normalizing in the ambient algebra; failure
    resumes sampling.  Deterministic in (table, seed).
    """
    if g.dim == 0:
        return zero_space(g)
    n = g.dim
    current = full_space(g)
    sub, basis = as_subalgebra(current).as_algebra()
    rng = random.Random(seed)
    for attempt in range(max_attempts):
        d = sub.dim
        if attempt < d:
            x_local = sub.basis_vector(attempt)
        else:
            height = 1 + attempt // 20
            x_local = tuple(
                Fraction(rng.randint(-height, height)) for _ in range(d)
            )
            if is_zero_vector(x_local):
                continue
        e_local = engel_subalgebra(sub, x_local)
        if e_local.dim < d:
            current = Subspace(g, _lift_rows(e_local.basis, basis, n))
            sub, basis = as_subalgebra(current).as_algebra()
            continue
        if is_nilpotent(sub) and normalizer(g, current).basis == current.basis:
            return current
    raise AlgebraError("no Cartan subalgebra found within the attempt budget")


# -- splitting a compact-type algebra ----------------------------------------


@dataclass(frozen=True)
class CompactSplit:
    semisimple: Subspace
    central: Subspace
    reductive: bool


def compact_levi_split(g: LieAlgebra, k: Subspace) -> CompactSplit:
    """k = [k, k] + center(k), checked to be direct and exhaustive."""
    kstar = bracket_space(k, k)
    t1 = centralizer(g, k).intersect(k)
    direct = kstar.intersect(t1).dim == 0
    total = kstar.sum(t1).dim == k.dim
    return CompactSplit(kstar, t1, direct and total)


@dataclass(frozen=True)
class EllipticityReport:
    all_axis: bool
    killing_neg_semidefinite: bool
    kernel_matches_center: bool
    caveat: str

    @property
    def passed(self) -> bool:
        return (
            self.all_axis
            and self.killing_neg_semidefinite
            and self.kernel_matches_center
        )


_ELLIPTIC_CAVEAT = (
    "necessary conditions only: compactness of the isotropy group "
    "cannot be decided from structure constants"
)


def ellipticity_proxy(g: LieAlgebra, k: Subspace) -> EllipticityReport:
    """Necessary conditions for k to integrate to a compact isotropy."""
    all_axis = True
    for v in k.basis:
        c = operator_sign_counts(g.ad(v))
        if c.n_neg or c.n_pos:
            all_axis = False
            break
    if k.dim == 0:
        return EllipticityReport(True, True, True, _ELLIPTIC_CAVEAT)
    try:
        sub, _ = as_subalgebra(k).as_algebra()
    except StructureError:
        return EllipticityReport(all_axis, False, False, _ELLIPTIC_CAVEAT)
    pos, _, zero = symmetric_inertia(killing_form(sub))
    zdim = center(sub).dim
    return EllipticityReport(all_axis, pos == 0, zero == zdim, _ELLIPTIC_CAVEAT)


# -- the Cartan subalgebra attached to an action datum ------------------------


@dataclass(frozen=True)
class ActionCsa:
    csa: Subspace
    flow: Subspace  # acting span, bracket-corrected to commute with [k, k]
    abelian: Subspace  # maximal abelian subalgebra of [k, k]
    central: Subspace  # center of k
    corrected: bool


def _inner_representative(g: LieAlgebra, kstar: Matrix, h: Vector) -> Vector | None:
    """k* in span(kstar) acting on that span exactly as h does, or None."""
    rows = []
    rhs = []
    cols = [[g.bracket(kj, x) for kj in kstar] for x in kstar]
    for x, col in zip(kstar, cols):
        target = g.bracket(h, x)
        for r in range(g.dim):
            rows.append(tuple(c[r] for c in col))
            rhs.append(target[r])
    sol = solve(tuple(rows), tuple(rhs))
    if sol is None:
        return None
    nu = zero_vector(g.dim)
    for c, kj in zip(sol, kstar):
        nu = vec_add(nu, vec_scale(c, kj))
    return nu


def csa_from_action(g: LieAlgebra, h: Subspace, k: Subspace) -> ActionCsa:
    """Assemble flow + maximal abelian of [k, k] + center(k) into a CSA.

    When the flow span fails to commute with [k, k], each flow generator
    is corrected by the inner representative of its action on [k, k].
    The assembled span is verified by is_csa; failure raises, signalling
    an inconsistent input rather than a wrong certificate.
    """
    split = compact_levi_split(g, k)
    if not split.reductive:
        raise StructureError(
            "isotropy span does not split as derived subalgebra plus center"
        )
    kstar, t1 = split.semisimple, split.central
    corrected = False
    flow_vecs = []
    for v in h.basis:
        if all(is_zero_vector(g.bracket(v, x)) for x in kstar.basis):
            flow_vecs.append(v)
            continue
        nu = _inner_representative(g, kstar.basis, v)
        if nu is None:
            raise StructureError(
                "flow generator does not act on the isotropy by an inner derivation"
            )
        corrected = True
        flow_vecs.append(vec_sub(v, nu))
    flow = Subspace(g, flow_vecs)
    a0 = zero_space(g)
    while True:
        c = kstar if a0.dim == 0 else centralizer(g, a0).intersect(kstar)
        grown = False
        for v in c.basis:
            if not a0.contains(v):
                a0 = Subspace(g, a0.basis + (v,))
                grown = True
                break
        if not grown:
            break
    csa = flow.sum(a0).sum(t1)
    if not is_csa(g, csa):
        raise AlgebraError(
            "assembled span is not a Cartan subalgebra; the action datum "
            "is inconsistent"
        )
    return ActionCsa(csa, flow, a0, t1, corrected)


# -- hyperbolic elements and Cartan subspaces --------------------------------


def is_ad_hyperbolic(g: LieAlgebra, x: Vector) -> bool:
    """ad(x) is semisimple with all-real spectrum."""
    a = g.ad(x)
    m = squarefree_part(char_poly(a))
    if count_real_roots_squarefree(m) != m.degree:
        return False
    fx = apply_poly(m, a)
    return all(all(v == 0 for v in row) for row in fx)


def solve_ad(g: LieAlgebra, target: Matrix) -> Vector | None:
    """Some y with ad(y) = target, or None.  Unique up to the center."""
    n = g.dim
    rows = []
    rhs = []
    ads = g.ad_basis
    for i in range(n):
        for j in range(n):
            rows.append(tuple(ads[a][i][j] for a in range(n)))
            rhs.append(target[i][j])
    return solve(tuple(rows), tuple(rhs))


def hyperbolic_part(g: LieAlgebra, x: Vector) -> Vector | None:
    """y with ad(y) = hyperbolic part of ad(x), when exactly available.

    The refinement of ad(x) must be exact and its hyperbolic part must
    itself be an inner derivation; both hold in a semisimple algebra.
    """
    jc = jordan_chevalley(g.ad(x))
    if not jc.exact:
        return None
    return solve_ad(g, jc.hyperbolic)


def cartan_subspace(g: LieAlgebra, hint: Subspace | None = None) -> Subspace:
    """Maximal abelian span of ad-hyperbolic elements, grown greedily.

    Requires a semisimple algebra.  Candidates are scanned in canonical
    basis order of the current centralizer, using each element itself
    when hyperbolic and its exact hyperbolic part otherwise, so the
    result is deterministic.  A hint is verified and then extended.
    """
    if radical(g).dim != 0:
        raise StructureError("Cartan subspaces require a semisimple algebra")
    if hint is None:
        a = zero_space(g)
    else:
        for v in hint.basis:
            if not is_ad_hyperbolic(g, v):
                raise StructureError("hint element is not ad-hyperbolic")
        for i, v in enumerate(hint.basis):
            for w in hint.basis[i + 1:]:
                if not is_zero_vector(g.bracket(v, w)):
                    raise StructureError("hint is not abelian")
        a = Subspace(g, hint.basis)
    while True:
        c = full_space(g) if a.dim == 0 else centralizer(g, a)
        extended = False
        for v in c.basis:
            cand = v if is_ad_hyperbolic(g, v) else hyperbolic_part(g, v)
            if cand is None or is_zero_vector(cand) or a.contains(cand):
                continue
            if any(not is_zero_vector(g.bracket(cand, b)) for b in a.basis):
                continue
            a = Subspace(g, a.basis + (cand,))
            extended = True
            break
        if not extended:
            break
    for v in a.basis:
        if not is_ad_hyperbolic(g, v):
            raise AlgebraError("candidate span contains a non-hyperbolic element")
    return a


@dataclass(frozen=True)
class HyperbolicCsaSplit:
    ok: bool
    hyperbolic: Subspace | None
    elliptic: Subspace | None
    reason: str | None


def split_hyperbolic_csa(g: LieAlgebra, csa: Subspace) -> HyperbolicCsaSplit:
    """Split a Cartan subalgebra as hyperbolic span + elliptic span.

    Requires each basis element to be ad-semisimple with an exact
    hyperbolic/elliptic refinement that stays inner.
    """
    hyp_vecs = []
    ell_vecs = []
    for x in csa.basis:
        jc = jordan_chevalley(g.ad(x))
        if not jc.exact:
            return HyperbolicCsaSplit(
                False, None, None, "refinement of ad is irrational"
            )
        if any(any(v != 0 for v in row) for row in jc.nilpotent):
            return HyperbolicCsaSplit(
                False, None, None, "element is not ad-semisimple"
            )
        h = solve_ad(g, jc.hyperbolic)
        e = solve_ad(g, jc.elliptic)
        if h is None or e is None:
            return HyperbolicCsaSplit(
                False, None, None, "component is not an inner derivation"
            )
        hyp_vecs.append(h)
        ell_vecs.append(e)
    hs = Subspace(g, hyp_vecs)
    es = Subspace(g, ell_vecs)
    if hs.sum(es).dim != csa.dim or hs.intersect(es).dim != 0:
        return HyperbolicCsaSplit(
            False, None, None, "components do not split the subalgebra"
        )
    if not csa.contains_space(hs) or not csa.contains_space(es):
        return HyperbolicCsaSplit(
            False, None, None, "components leave the subalgebra"
        )
    return HyperbolicCsaSplit(True, hs, es, None)


def is_hyperbolic_csa(g: LieAlgebra, csa: Subspace) -> bool:
    """The projection to the Levi quotient contains a Cartan subspace."""
    if not is_csa(g, csa):
        raise StructureError("input is not a Cartan subalgebra")
    rad = radical(g)
    if rad.dim == g.dim:
        return True
    q = quotient_by_ideal(g, rad)
    qg = q.quotient
    proj = q.push_space(csa)
    hint_vecs = []
    for v in proj.basis:
        h = hyperbolic_part(qg, v)
        if h is None:
            return False
        if not is_zero_vector(h):
            hint_vecs.append(h)
    hint = Subspace(qg, hint_vecs)
    if not proj.contains_space(hint):
        return False
    grown = cartan_subspace(qg, hint=hint)
    return proj.contains_space(grown)


# -- restricted roots ---------------------------------------------------------


@dataclass(frozen=True)
class RootInfo:
    """One joint invariant subspace of a commuting ad-family.

    values holds the exact rational functional (per base vector) when
    available.  Otherwise value_minpolys carries the exact minimal
    polynomial of each family of pairings and value_floats one numeric
    witness (re, im) per base vector.
    """

    multiplicity: int
    space: Matrix
    values: tuple[Fraction, ...] | None
    value_minpolys: tuple[RationalPolynomial, ...] | None
    value_floats: tuple[tuple[float, float], ...]
    exact: bool

    @property
    def is_zero(self) -> bool:
        return self.values is not None and all(v == 0 for v in self.values)


@dataclass(frozen=True)
class RootSystem:
    base: Matrix  # basis of the Cartan subspace the functionals pair with
    roots: tuple[RootInfo, ...]
    exact: bool
    zero_complement: Matrix | None  # Killing-perp of the base in the zero space

    @property
    def zero_space(self) -> Matrix | None:
        for r in self.roots:
            if r.is_zero:
                return r.space
        return None

    def nonzero_roots(self) -> tuple[RootInfo, ...]:
        return tuple(r for r in self.roots if not r.is_zero)


def _sympy_factors_with_multiplicity(p: RationalPolynomial):
    import sympy

    x = sympy.Symbol("x")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * x**i
        for i, c in enumerate(p.coeffs)
    )
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    out = []
    for fac, mult in factors:
        cs = fac.all_coeffs()[::-1]
        q = RationalPolynomial(
            [Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in cs]
        )
        out.append((q.monic(), int(mult)))
    return out


def _is_nilpotent_matrix(m: Matrix) -> bool:
    n = len(m)
    if n == 0:
        return True
    p = mat_pow(m, 1 << max(0, (n - 1).bit_length()))
    return all(all(v == 0 for v in row) for row in p)


def _zero_complement(g: LieAlgebra, base: Matrix, zero_rows: Matrix) -> Matrix:
    """Killing-perp of span(base) inside span(zero_rows)."""
    if not zero_rows:
        return ()
    kf = killing_form(g)
    pairings = [matvec(kf, a) for a in base]
    if pairings:
        # rows per base vector, columns per zero-space vector
        m = tuple(tuple(dot(z, w) for z in zero_rows) for w in pairings)
        combos = nullspace(m)
    else:
        combos = tuple(identity(len(zero_rows)))
    out = []
    for c in combos:
        v = zero_vector(g.dim)
        for x, z in zip(c, zero_rows):
            v = vec_add(v, vec_scale(x, z))
        out.append(v)
    comp = row_basis(tuple(out))
    a_space = Subspace(g, base)
    c_space = Subspace(g, comp)
    if a_space.intersect(c_space).dim != 0:
        raise AlgebraError("zero space does not split off the Cartan subspace")
    if a_space.sum(c_space).dim != len(zero_rows):
        raise AlgebraError("zero-space split misses directions")
    return c_space.basis


def restricted_roots(
    g: LieAlgebra, a: Subspace, max_generic_tries: int = 60
) -> RootSystem:
    """Joint spectral decomposition of g under a Cartan subspace.

    A generic element of `a` is chosen deterministically; its primary
    components are the joint invariant subspaces.  Exactness requires
    every eigenvalue of the generic element rational and each restricted
    operator to be scalar plus nilpotent, both verified; otherwise the
    generic element is retried, and finally exact blocks with algebraic
    value descriptors are returned.
    """
    if radical(g).dim != 0:
        raise StructureError("root decomposition requires a semisimple algebra")
    n = g.dim
    if a.dim == 0:
        whole = RootInfo(n, tuple(identity(n)), (), None, (), True)
        return RootSystem((), (whole,), True, whole.space)
    for i, v in enumerate(a.basis):
        for w in a.basis[i + 1:]:
            if not is_zero_vector(g.bracket(v, w)):
                raise StructureError("root decomposition requires an abelian base")
    ads = [g.ad(v) for v in a.basis]
    last_blocks = None
    saw_all_linear = False
    for lam in range(1, max_generic_tries + 1):
        coeffs = [Fraction(lam) ** i for i in range(a.dim)]
        star = zero_vector(n)
        for c, v in zip(coeffs, a.basis):
            star = vec_add(star, vec_scale(c, v))
        a_star = g.ad(star)
        factors = _sympy_factors_with_multiplicity(char_poly(a_star))
        blocks = []
        for phi, _ in factors:
            ker = row_basis(nullspace(mat_pow(apply_poly(phi, a_star), n)))
            blocks.append((phi, ker))
        if sum(len(k) for _, k in blocks) != n:
            continue
        last_blocks = blocks
        if all(phi.degree == 1 for phi, _ in blocks):
            saw_all_linear = True
            infos = []
            good = True
            for phi, ker in blocks:
                vals = []
                for adv in ads:
                    r = restrict_operator(adv, ker)
                    if r is None:
                        good = False
                        break
                    d = len(ker)
                    alpha = trace(r) / d
                    acc = RationalPolynomial([_ONE])
                    lin = RationalPolynomial([-alpha, _ONE])
                    for _ in range(d):
                        acc = acc * lin
                    if char_poly(r) != acc:
                        good = False
                        break
                    vals.append(alpha)
                if not good:
                    break
                infos.append(
                    RootInfo(
                        len(ker),
                        ker,
                        tuple(vals),
                        None,
                        tuple((float(v), 0.0) for v in vals),
                        True,
                    )
                )
            if good:
                zero_rows = next((r.space for r in infos if r.is_zero), ())
                comp = _zero_complement(g, a.basis, zero_rows)
                return RootSystem(a.basis, tuple(infos), True, comp)
        if lam >= 8 and not saw_all_linear:
            break
    if last_blocks is None:
        raise AlgebraError("primary decomposition of the generic element failed")
    import numpy as np

    infos = []
    zero_rows: Matrix = ()
    for phi, ker in last_blocks:
        restrictions = []
        for adv in ads:
            r = restrict_operator(adv, ker)
            if r is None:
                raise AlgebraError("joint invariant subspace lost invariance")
            restrictions.append(r)
        if all(_is_nilpotent_matrix(r) for r in restrictions):
            infos.append(
                RootInfo(
                    len(ker),
                    ker,
                    tuple(_ZERO for _ in ads),
                    None,
                    tuple((0.0, 0.0) for _ in ads),
                    True,
                )
            )
            zero_rows = ker
            continue
        minpolys = []
        floats = []
        for r in restrictions:
            m = squarefree_part(char_poly(r))
            minpolys.append(m)
            rf = np.array([[float(x) for x in row] for row in r])
            ev = np.linalg.eigvals(rf)
            pick = ev[int(np.argmax(np.abs(ev)))]
            floats.append((float(pick.real), float(pick.imag)))
        infos.append(
            RootInfo(len(ker), ker, None, tuple(minpolys), tuple(floats), False)
        )
    comp = _zero_complement(g, a.basis, zero_rows)
    return RootSystem(a.basis, tuple(infos), False, comp)


# -- Weyl chambers ------------------------------------------------------------


@dataclass(frozen=True)
class Chamber:
    signs: tuple[int, ...]
    sample: Vector  # coordinates w.r.t. the root-system base


@dataclass(frozen=True)
class ChamberSet:
    representatives: Matrix  # one functional per +- pair, canonical sign
    chambers: tuple[Chamber, ...]

    @property
    def count(self) -> int:
        return len(self.chambers)


def _fm_split(rows: Sequence[Vector], k: int):
    lows, ups, keep = [], [], []
    for r in rows:
        c = r[k - 1]
        if c > 0:
            lows.append(r)
        elif c < 0:
            ups.append(r)
        else:
            keep.append(r[: k - 1])
    reduced = list(keep)
    for lo in lows:
        for up in ups:
            reduced.append(
                tuple(lo[k - 1] * up[i] - up[k - 1] * lo[i] for i in range(k - 1))
            )
    return lows, ups, tuple(reduced)


def _fm_feasible(rows: Sequence[Vector], k: int) -> bool:
    """Whether {x : r . x > 0 for all rows} is nonempty (exact)."""
    if any(is_zero_vector(r) for r in rows):
        return False
    if k == 0:
        return not rows
    _, _, reduced = _fm_split(rows, k)
    return _fm_feasible(reduced, k - 1)


def _fm_sample(rows: Sequence[Vector], k: int) -> Vector | None:
    """Rational interior point of {x : r . x > 0}, or None if empty."""
    if not _fm_feasible(rows, k):
        return None
    if k == 0:
        return ()
    lows, ups, reduced = _fm_split(rows, k)
    prefix = _fm_sample(reduced, k - 1)
    lo_bound = None
    up_bound = None
    for r in lows:
        val = -sum((r[i] * prefix[i] for i in range(k - 1)), _ZERO) / r[k - 1]
        if lo_bound is None or val > lo_bound:
            lo_bound = val
    for r in ups:
        val = -sum((r[i] * prefix[i] for i in range(k - 1)), _ZERO) / r[k - 1]
        if up_bound is None or val < up_bound:
            up_bound = val
    if lo_bound is not None and up_bound is not None:
        x = (lo_bound + up_bound) / 2
    elif lo_bound is not None:
        x = lo_bound + 1
    elif up_bound is not None:
        x = up_bound - 1
    else:
        x = _ONE
    return prefix + (x,)


def weyl_chambers(rs: RootSystem) -> ChamberSet:
    """Connected components of the base minus the root hyperplanes.

    Each sign vector over the root representatives is decided by exact
    Fourier-Motzkin elimination, and every returned sample point is
    re-verified against its strict inequalities.
    """
    if not rs.exact:
        raise StructureError("chamber enumeration requires exact root values")
    k = len(rs.base)
    if k == 0:
        return ChamberSet((), ())
    reps: list[Vector] = []
    for r in rs.nonzero_roots():
        v = vector(r.values)
        lead = next((x for x in v if x != 0), None)
        if lead is None:
            continue
        if lead < 0:
            v = tuple(-x for x in v)
        if v not in reps:
            reps.append(v)
    chambers = []
    for mask in range(1 << len(reps)):
        signs = tuple(1 if (mask >> i) & 1 == 0 else -1 for i in range(len(reps)))
        rows = tuple(tuple(s * x for x in rep) for s, rep in zip(signs, reps))
        sample = _fm_sample(rows, k)
        if sample is None:
            continue
        for s, rep in zip(signs, reps):
            if s * dot(rep, sample) <= 0:
                raise AlgebraError("chamber sample point fails its inequalities")
        chambers.append(Chamber(signs, sample))
    return ChamberSet(tuple(reps), tuple(chambers))
