"""Anosov criterion, element search, and the classification driver.

The acceptance test is fully exact: a flow element is certified Anosov
when its adjoint operator restricted to the flow-isotropy span has pure
imaginary spectrum while the induced operator on the quotient has none,
which pins the neutral space to exactly that span.  Stable and unstable
data live on an exact rational carrier (the characteristic subspace of
the off-axis part); inside it, bases over the reals are produced
numerically with their invariance defect measured and reported.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .algebra import (
    AlgebraError,
    LieAlgebra,
    StructureError,
    Subspace,
    ValidationError,
    as_subalgebra,
    bracket_space,
    full_space,
    lower_central_series,
    nilradical,
    quotient_by_ideal,
    radical,
    subspace_is_nilpotent,
    zero_space,
)
from .cartan import (
    ActionCsa,
    ChamberSet,
    cartan_subspace,
    compact_levi_split,
    csa_from_action,
    ellipticity_proxy,
    find_csa,
    hyperbolic_part,
    is_csa,
    restricted_roots,
    weyl_chambers,
    _inner_representative,
)
from .linalg import (
    Matrix,
    Vector,
    coords_in_basis,
    is_zero_vector,
    mat_pow,
    nullspace,
    restrict_operator,
    quotient_operator,
    row_basis,
    solve,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vector,
)
from .poly import RationalPolynomial, root_sign_counts
from .spectral import (
    InvariantSplitting,
    apply_poly,
    char_poly,
    invariant_splitting,
    is_hyperbolic,
    spectral_gap,
)

_ONE = Fraction(1)


class Inconclusive(AlgebraError):
    """Search exhausted without a decision; not a negative result."""


_LATTICE_CAVEAT = (
    "cocompactness of the isotropy and existence of a suitable lattice "
    "are assumed, not computed"
)


# -- action data --------------------------------------------------------------


@dataclass(frozen=True)
class ActionCheck:
    flow_nilpotent: bool
    trivial_intersection: bool
    normalizes_isotropy: bool
    isotropy_elliptic: bool

    @property
    def ok(self) -> bool:
        return (
            self.flow_nilpotent
            and self.trivial_intersection
            and self.normalizes_isotropy
            and self.isotropy_elliptic
        )

    def summary(self) -> str:
        if self.ok:
            return "action datum valid"
        bad = []
        if not self.flow_nilpotent:
            bad.append("flow span is not a nilpotent subalgebra")
        if not self.trivial_intersection:
            bad.append("flow span meets the isotropy span")
        if not self.normalizes_isotropy:
            bad.append("flow span does not normalize the isotropy")
        if not self.isotropy_elliptic:
            bad.append("isotropy fails the ellipticity conditions")
        return "; ".join(bad)


class ActionSpec:
    """An algebra-level action datum: ambient algebra, flow span, isotropy."""

    __slots__ = ("ambient", "flow", "isotropy", "name", "_checked")

    def __init__(
        self,
        ambient: LieAlgebra,
        flow: Subspace,
        isotropy: Subspace | None = None,
        name: str | None = None,
    ):
        if isotropy is None:
            isotropy = zero_space(ambient)
        if flow.algebra is not ambient or isotropy.algebra is not ambient:
            raise StructureError("spans must live in the ambient algebra")
        self.ambient = ambient
        self.flow = flow
        self.isotropy = isotropy
        self.name = name
        self._checked: ActionCheck | None = None

    def validate(self) -> ActionCheck:
        if self._checked is not None:
            return self._checked
        g = self.ambient
        h, k = self.flow, self.isotropy
        try:
            flow_nil = subspace_is_nilpotent(h)
        except StructureError:
            flow_nil = False
        try:
            as_subalgebra(k)
            k_closed = True
        except StructureError:
            k_closed = False
        normal = k_closed and k.contains_space(bracket_space(h, k))
        elliptic = k_closed and ellipticity_proxy(g, k).passed
        self._checked = ActionCheck(
            flow_nil, h.intersect(k).dim == 0, normal, elliptic
        )
        return self._checked

    def require_valid(self) -> None:
        chk = self.validate()
        if not chk.ok:
            raise ValidationError(chk.summary())

    @property
    def joint(self) -> Subspace:
        return self.flow.sum(self.isotropy)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return (
            f"ActionSpec(dim={self.ambient.dim}, flow={self.flow.dim}, "
            f"isotropy={self.isotropy.dim}{tag})"
        )


# -- the Anosov check ----------------------------------------------------------


@dataclass(frozen=True)
class InvarianceReport:
    exact_carrier: bool
    exact_stable: bool | None
    exact_unstable: bool | None
    numeric_residual: float | None
    tolerance: float
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class AnosovCertificate:
    h0: Vector
    neutral: Matrix  # exactly the flow + isotropy span
    carrier: Matrix  # exact characteristic space of the off-axis part
    dim_stable: int
    dim_unstable: int
    stable_exact: Matrix | None
    unstable_exact: Matrix | None
    gap: Fraction
    gap_exact: bool
    splitting: InvariantSplitting | None  # numeric bases in carrier coordinates
    invariance: InvarianceReport | None

    accepted = True

    @property
    def codim_u(self) -> int:
        return self.dim_unstable


@dataclass(frozen=True)
class AnosovRefusal:
    h0: Vector
    reason: str
    axis_outside: int  # eigenvalues on the imaginary axis outside flow+isotropy
    off_axis_inside: int  # off-axis eigenvalues inside the flow+isotropy span

    accepted = False


def _signed_factor_split(
    p: RationalPolynomial,
) -> tuple[RationalPolynomial | None, RationalPolynomial | None]:
    """(left factor, right factor) of an axis-free polynomial, if rational.

    Returns (None, None) when some irreducible factor has roots on both
    sides of the axis, in which case no rational splitting exists.
    """
    from .cartan import _sympy_factors_with_multiplicity

    left = RationalPolynomial([_ONE])
    right = RationalPolynomial([_ONE])
    for phi, mult in _sympy_factors_with_multiplicity(p):
        c = root_sign_counts(phi)
        if c.n_neg == phi.degree:
            for _ in range(mult):
                left = left * phi
        elif c.n_pos == phi.degree:
            for _ in range(mult):
                right = right * phi
        else:
            return None, None
    return left, right


def _char_subspace(op: Matrix, p: RationalPolynomial, n: int) -> Matrix:
    return row_basis(nullspace(mat_pow(apply_poly(p, op), max(1, n))))


def check_anosov(
    action: ActionSpec, h0: Vector, tolerance: float = 1e-9
) -> AnosovCertificate | AnosovRefusal:
    """Certify h0 as an Anosov element of the action, or refuse exactly.

    Acceptance means: the adjoint of h0 restricted to flow + isotropy is
    purely imaginary, and the induced operator on the quotient has no
    imaginary-axis eigenvalue.  Both facts are decided by exact root
    counting, which makes the neutral space equal to flow + isotropy by
    an exact dimension argument.
    """
    action.require_valid()
    if not action.flow.contains(h0):
        raise StructureError("candidate element is outside the flow span")
    g = action.ambient
    n = g.dim
    a = g.ad(h0)
    w = action.joint
    restricted = restrict_operator(a, w.basis)
    if restricted is None:
        raise AlgebraError("flow + isotropy span is expected to be invariant")
    counts_in = root_sign_counts(char_poly(restricted))
    off_inside = counts_in.n_neg + counts_in.n_pos
    quotient, _ = quotient_operator(a, w.basis)
    p_q = char_poly(quotient)
    counts_out = root_sign_counts(p_q)
    if off_inside or counts_out.n_zero_real:
        bits = []
        if off_inside:
            bits.append(
                f"{off_inside} eigenvalues off the imaginary axis inside "
                "the flow + isotropy span"
            )
        if counts_out.n_zero_real:
            bits.append(
                f"{counts_out.n_zero_real} eigenvalues on the imaginary "
                "axis outside the flow + isotropy span"
            )
        return AnosovRefusal(h0, "; ".join(bits), counts_out.n_zero_real, off_inside)
    dim_s, dim_u = counts_out.n_neg, counts_out.n_pos
    carrier = _char_subspace(a, p_q, n) if p_q.degree > 0 else ()
    if len(carrier) != dim_s + dim_u:
        raise AlgebraError("off-axis characteristic space has the wrong dimension")
    if Subspace(g, carrier).intersect(w).dim != 0:
        raise AlgebraError("off-axis characteristic space meets the neutral span")
    left, right = _signed_factor_split(p_q)
    stable_exact = None
    unstable_exact = None
    if left is not None:
        stable_exact = _char_subspace(a, left, n) if left.degree else ()
        unstable_exact = _char_subspace(a, right, n) if right.degree else ()
        if len(stable_exact) != dim_s or len(unstable_exact) != dim_u:
            raise AlgebraError("signed characteristic spaces have wrong dimensions")
    gap, gap_exact = spectral_gap(p_q) if p_q.degree > 0 else (None, True)
    if gap is None:
        # no off-axis part at all: every eigenvalue is neutral
        gap, gap_exact = Fraction(0), True
    splitting = None
    if carrier:
        sub = restrict_operator(a, carrier)
        if sub is None:
            raise AlgebraError("carrier lost invariance")
        splitting = invariant_splitting(sub, tolerance=tolerance)
    cert = AnosovCertificate(
        h0,
        w.basis,
        carrier,
        dim_s,
        dim_u,
        stable_exact,
        unstable_exact,
        gap,
        gap_exact,
        splitting,
        None,
    )
    return replace(cert, invariance=splitting_invariance(action, cert, tolerance))


def splitting_invariance(
    action: ActionSpec, cert: AnosovCertificate, tolerance: float = 1e-9
) -> InvarianceReport:
    """Check the stable/unstable data is invariant under the whole flow span.

    The carrier and, when rational, the signed characteristic subspaces
    are tested exactly.  Numeric bases are tested by the least-squares
    invariance residual at the given tolerance.
    """
    import numpy as np

    g = action.ambient
    violations: list[str] = []
    exact_carrier = True
    for i, h in enumerate(action.flow.basis):
        adh = g.ad(h)
        if cert.carrier and restrict_operator(adh, cert.carrier) is None:
            exact_carrier = False
            violations.append(f"carrier not invariant under flow generator {i}")
    exact_stable: bool | None = None
    exact_unstable: bool | None = None
    if cert.stable_exact is not None:
        exact_stable = True
        exact_unstable = True
        for i, h in enumerate(action.flow.basis):
            adh = g.ad(h)
            if cert.stable_exact and restrict_operator(adh, cert.stable_exact) is None:
                exact_stable = False
                violations.append(f"stable space not invariant under generator {i}")
            if cert.unstable_exact and (
                restrict_operator(adh, cert.unstable_exact) is None
            ):
                exact_unstable = False
                violations.append(f"unstable space not invariant under generator {i}")
    residual: float | None = None
    spl = cert.splitting
    if (
        spl is not None
        and spl.stable_basis is not None
        and cert.carrier
        and any(len(rows[0]) != len(cert.carrier) for rows in
                (spl.stable_basis, spl.unstable_basis) if rows)
    ):
        violations.append("splitting bases do not match the carrier dimension")
        spl = None
    if spl is not None and spl.stable_basis is not None and cert.carrier:
        carrier_f = np.array(
            [[float(x) for x in row] for row in cert.carrier]
        )
        worst = 0.0
        for h in action.flow.basis:
            adh = np.array([[float(x) for x in row] for row in g.ad(h)])
            for rows in (spl.stable_basis, spl.unstable_basis):
                if not rows:
                    continue
                b = np.array(rows) @ carrier_f  # ambient coordinates
                img = b @ adh.T
                sol, *_ = np.linalg.lstsq(b.T, img.T, rcond=None)
                defect = float(np.max(np.abs(b.T @ sol - img.T)))
                scale = max(1.0, float(np.max(np.abs(img))))
                worst = max(worst, defect / scale)
        residual = worst
        if worst > tolerance:
            violations.append(
                f"numeric invariance residual {worst:.3e} exceeds {tolerance:.1e}"
            )
    return InvarianceReport(
        exact_carrier,
        exact_stable,
        exact_unstable,
        residual,
        tolerance,
        tuple(violations),
    )


def derived_ideal_check(action: ActionSpec, cert: AnosovCertificate) -> bool:
    """Stable and unstable directions lie in the derived ideal, exactly."""
    g = action.ambient
    derived = bracket_space(full_space(g), full_space(g))
    return derived.contains_space(Subspace(g, cert.carrier))


def action_csa(action: ActionSpec) -> ActionCsa:
    """Cartan subalgebra assembled from a validated action datum."""
    action.require_valid()
    return csa_from_action(action.ambient, action.flow, action.isotropy)


# -- element search ------------------------------------------------------------


def _chamber_samples(action: ActionSpec) -> tuple[Vector, ...] | None:
    """One flow element per Weyl chamber, when the exact theory applies."""
    g = action.ambient
    if radical(g).dim != 0:
        return None
    hyp = []
    for v in action.flow.basis:
        h = hyperbolic_part(g, v)
        if h is None:
            return None
        if not is_zero_vector(h):
            hyp.append(h)
    a_h = Subspace(g, hyp)
    if a_h.dim == 0 or not action.flow.contains_space(a_h):
        return None
    for i, v in enumerate(a_h.basis):
        for w in a_h.basis[i + 1:]:
            if not is_zero_vector(g.bracket(v, w)):
                return None
    rs = restricted_roots(g, a_h)
    if not rs.exact:
        return None
    chambers = weyl_chambers(rs)
    samples = []
    for ch in chambers.chambers:
        v = zero_vector(g.dim)
        for c, b in zip(ch.sample, a_h.basis):
            v = vec_add(v, vec_scale(c, b))
        samples.append(v)
    return tuple(samples)


def _primitive_ray(v: Vector) -> Vector:
    """Integer vector with coprime entries on the same positive ray as v."""
    scale = math.lcm(*(x.denominator for x in v))
    ints = [x.numerator * (scale // x.denominator) for x in v]
    g = math.gcd(*(abs(i) for i in ints))
    return tuple(Fraction(i, g) for i in ints)


def find_anosov_elements(
    action: ActionSpec,
    budget: int = 200,
    seed: int = 0,
    tolerance: float = 1e-9,
    max_found: int = 8,
) -> tuple[tuple[Vector, AnosovCertificate], ...]:
    """Verified Anosov elements of the action.

    When the flow span sits over an exact root system the search is one
    chamber sample each (complete for Weyl-chamber style data);
    otherwise integer grid points in the flow span followed by seeded
    rational samples, up to the budget.  Positive rescalings of a tried
    element are skipped (they certify the same splitting) and the
    grid/random walk stops after max_found verified elements.  Only
    elements whose certificate verifies are returned; an empty result is
    inconclusive, never a proof of non-Anosov.
    """
    action.require_valid()
    d = action.flow.dim
    if d == 0:
        return ()
    found: list[tuple[Vector, AnosovCertificate]] = []
    rays = set()

    def try_candidate(v: Vector) -> None:
        if is_zero_vector(v):
            return
        ray = _primitive_ray(v)
        if ray in rays:
            return
        rays.add(ray)
        res = check_anosov(action, v, tolerance=tolerance)
        if isinstance(res, AnosovCertificate):
            found.append((v, res))

    samples = _chamber_samples(action)
    if samples is not None:
        for v in samples:
            try_candidate(v)
        return tuple(found)
    spent = 0
    for height in range(1, 8):
        for coords in itertools.product(range(-height, height + 1), repeat=d):
            if max((abs(c) for c in coords), default=0) != height:
                continue
            v = zero_vector(action.ambient.dim)
            for c, b in zip(coords, action.flow.basis):
                v = vec_add(v, vec_scale(Fraction(c), b))
            try_candidate(v)
            spent += 1
            if spent >= budget or len(found) >= max_found:
                return tuple(found)
    rng = random.Random(seed)
    while spent < budget and len(found) < max_found:
        v = zero_vector(action.ambient.dim)
        for b in action.flow.basis:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            v = vec_add(v, vec_scale(c, b))
        try_candidate(v)
        spent += 1
    return tuple(found)


def codimension(cert: AnosovCertificate) -> int:
    """Dimension of the unstable space of this certificate."""
    return cert.dim_unstable


def is_codimension_one(
    action: ActionSpec, budget: int = 200, seed: int = 0
) -> bool:
    """Whether some found Anosov element has a one-dimensional unstable space."""
    found = find_anosov_elements(action, budget=budget, seed=seed)
    if not found:
        raise Inconclusive("no Anosov element found within the search budget")
    return min(c.dim_unstable for _, c in found) == 1


# -- simplification ------------------------------------------------------------


def simplification(action: ActionSpec) -> ActionSpec:
    """Absorb the central part of the isotropy into the flow span.

    The isotropy is replaced by its derived (semisimple) part and the
    flow span by its inner-corrected form plus the isotropy center, so
    the new datum has the same flow + isotropy span.  The output is
    validated; a missing inner representative raises.
    """
    action.require_valid()
    g = action.ambient
    split = compact_levi_split(g, action.isotropy)
    if not split.reductive:
        raise StructureError(
            "isotropy does not split as derived subalgebra plus center"
        )
    kstar, t1 = split.semisimple, split.central
    flow_vecs = []
    for v in action.flow.basis:
        if all(is_zero_vector(g.bracket(v, x)) for x in kstar.basis):
            flow_vecs.append(v)
            continue
        nu = _inner_representative(g, kstar.basis, v)
        if nu is None:
            raise StructureError(
                "flow generator does not act on the isotropy by an inner "
                "derivation"
            )
        flow_vecs.append(vec_sub(v, nu))
    new_flow = Subspace(g, flow_vecs).sum(t1)
    name = f"{action.name}-simplified" if action.name else None
    out = ActionSpec(g, new_flow, kstar, name=name)
    out.require_valid()
    if out.joint != action.joint:
        raise AlgebraError("simplification changed the flow + isotropy span")
    return out


# -- classification -------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    case: str  # solvable | semisimple | reductive | mixed
    evidence: dict
    caveats: tuple[str, ...]
    subreport: "ClassificationReport | None" = None


def _classify_solvable(
    action: ActionSpec, cert: AnosovCertificate, caveats: list[str]
) -> ClassificationReport:
    g = action.ambient
    simp = simplification(action)
    flow_is_csa = is_csa(g, simp.flow)
    nil = nilradical(g)
    su_in_nilradical = nil.contains_space(Subspace(g, cert.carrier))
    nil_alg, _ = as_subalgebra(nil).as_algebra()
    tower = tuple(s.dim for s in lower_central_series(nil_alg))
    ref_csa_dim = find_csa(g).dim
    evidence = {
        "flow_is_csa": flow_is_csa,
        "flow_dim": simp.flow.dim,
        "csa_dim": ref_csa_dim,
        "stable_unstable_in_nilradical": su_in_nilradical,
        "nilradical_dim": nil.dim,
        "nilradical_tower": tower,
    }
    if not flow_is_csa:
        caveats.append("flow span is not a Cartan subalgebra; datum is atypical")
    return ClassificationReport("solvable", evidence, tuple(caveats))


def _classify_semisimple(
    action: ActionSpec, cert: AnosovCertificate, caveats: list[str]
) -> ClassificationReport:
    g = action.ambient
    simp = simplification(action)
    hyp = []
    for v in simp.flow.basis:
        h = hyperbolic_part(g, v)
        if h is None:
            raise Inconclusive(
                "flow generator has an irrational semisimple refinement"
            )
        if not is_zero_vector(h):
            hyp.append(h)
    a = cartan_subspace(g, hint=Subspace(g, hyp))
    rs = restricted_roots(g, a)
    k0 = Subspace(g, rs.zero_complement or ())
    chcsa = a.sum(k0) == action.joint
    torus_flow = k0.intersect(action.flow)
    torus_isotropy = k0.intersect(action.isotropy)
    split_clean = torus_flow.sum(torus_isotropy) == k0
    chambers: ChamberSet | None = None
    if rs.exact:
        chambers = weyl_chambers(rs)
    evidence = {
        "cartan_subspace_dim": a.dim,
        "zero_complement_dim": k0.dim,
        "flow_isotropy_equals_cartan_plus_torus": chcsa,
        "torus_in_flow_dim": torus_flow.dim,
        "torus_in_isotropy_dim": torus_isotropy.dim,
        "torus_split_clean": split_clean,
        "modified": torus_flow.dim > 0,
        "root_system": rs,
        "chambers": chambers,
    }
    if not rs.exact:
        caveats.append(
            "root values are irrational; chamber enumeration unavailable"
        )
    return ClassificationReport("semisimple", evidence, tuple(caveats))


def _is_reductive_case(g: LieAlgebra, rad: Subspace) -> bool:
    if rad.dim == 0 or rad.dim == g.dim:
        return False
    return bracket_space(full_space(g), rad).dim == 0


def _classify_reductive(
    action: ActionSpec,
    cert: AnosovCertificate,
    rad: Subspace,
    caveats: list[str],
    budget: int,
    seed: int,
) -> ClassificationReport:
    g = action.ambient
    simp = simplification(action)
    radical_in_flow = simp.flow.contains_space(rad)
    q = quotient_by_ideal(g, rad)
    q_action = ActionSpec(
        q.quotient,
        q.push_space(simp.flow),
        q.push_space(simp.isotropy),
        name=f"{action.name}-mod-center" if action.name else None,
    )
    sub = classify(q_action, budget=budget, seed=seed)
    evidence = {
        "radical_dim": rad.dim,
        "radical_is_central": True,
        "radical_in_flow": radical_in_flow,
        "quotient_dim": q.quotient.dim,
    }
    if not radical_in_flow:
        caveats.append(
            "central radical is not inside the flow span; datum is atypical"
        )
    return ClassificationReport("reductive", evidence, tuple(caveats), sub)


def _classify_mixed(
    action: ActionSpec,
    cert: AnosovCertificate,
    rad: Subspace,
    caveats: list[str],
    budget: int,
    seed: int,
) -> ClassificationReport:
    g = action.ambient
    nil = nilradical(g)
    in_rad = rad.contains(cert.h0)
    if not in_rad and rad.intersect(action.flow).dim > 0:
        inter = rad.intersect(action.flow)
        for coords in itertools.product(range(-2, 3), repeat=inter.dim):
            v = zero_vector(g.dim)
            for c, b in zip(coords, inter.basis):
                v = vec_add(v, vec_scale(Fraction(c), b))
            if is_zero_vector(v):
                continue
            if isinstance(check_anosov(action, v), AnosovCertificate):
                in_rad = True
                break
        if not in_rad:
            caveats.append(
                "no Anosov element found in the radical within the budget; "
                "existence is not excluded"
            )
    q = quotient_by_ideal(g, nil)
    q_action = ActionSpec(
        q.quotient,
        q.push_space(action.flow),
        q.push_space(action.isotropy),
        name=f"{action.name}-mod-nilradical" if action.name else None,
    )
    sub = classify(q_action, budget=budget, seed=seed)
    evidence = {
        "radical_dim": rad.dim,
        "nilradical_dim": nil.dim,
        "anosov_element_in_radical": in_rad,
        "quotient_dim": q.quotient.dim,
    }
    return ClassificationReport("mixed", evidence, tuple(caveats), sub)


def classify(
    action: ActionSpec,
    cert: AnosovCertificate | None = None,
    budget: int = 200,
    seed: int = 0,
) -> ClassificationReport:
    """Structure-based case analysis of a certified action datum.

    Cases: solvable (ambient equals its radical), semisimple (radical
    zero), reductive (central nonzero radical with nonzero Levi part),
    mixed (everything else, classified recursively modulo the
    nilradical).  Raises Inconclusive when no Anosov element is found.
    """
    action.require_valid()
    if cert is None:
        found = find_anosov_elements(action, budget=budget, seed=seed)
        if not found:
            raise Inconclusive(
                "no Anosov element found within the search budget"
            )
        cert = min(found, key=lambda fc: fc[1].dim_unstable)[1]
    g = action.ambient
    caveats = [_LATTICE_CAVEAT]
    if action.isotropy.dim > 0:
        caveats.append(ellipticity_proxy(g, action.isotropy).caveat)
    rad = radical(g)
    if rad.dim == g.dim:
        return _classify_solvable(action, cert, caveats)
    if rad.dim == 0:
        return _classify_semisimple(action, cert, caveats)
    if _is_reductive_case(g, rad):
        return _classify_reductive(action, cert, rad, caveats, budget, seed)
    return _classify_mixed(action, cert, rad, caveats, budget, seed)


# -- nil-suspensions -----------------------------------------------------------


@dataclass(frozen=True)
class NilSuspensionReport:
    structure_ok: bool
    induced_hyperbolic: bool
    anosov: bool
    kind: str  # central | hyperbolic | generic
    fiber_dim: int
    fixed_dim: int  # dimension of flow-cap-fiber


def nil_suspension_check(
    base: ActionSpec,
    total: ActionSpec,
    fiber: Subspace,
    base_cert: AnosovCertificate | None = None,
    budget: int = 200,
    seed: int = 0,
) -> NilSuspensionReport:
    """Verify a nil-suspension structure and decide its Anosov property.

    The fiber must be a nilpotent ideal of the total algebra whose
    quotient reproduces the base algebra's structure constants on the
    computed complement basis, with the flow span projecting onto the
    base flow span.  The decision lifts a base Anosov element and tests
    hyperbolicity of the induced operator on fiber/(flow cap fiber).
    """
    g = total.ambient
    if fiber.algebra is not g:
        raise StructureError("fiber must live in the total algebra")
    if not fiber.is_ideal() or not subspace_is_nilpotent(fiber):
        raise StructureError("fiber is not a nilpotent ideal")
    q = quotient_by_ideal(g, fiber)
    if q.quotient.table != base.ambient.table:
        raise StructureError(
            "quotient structure constants do not match the base algebra"
        )
    if q.push_space(total.flow).basis != base.flow.basis:
        raise StructureError("flow span does not project onto the base flow")
    if q.push_space(total.isotropy).basis != base.isotropy.basis:
        raise StructureError(
            "isotropy span does not project onto the base isotropy"
        )
    if base_cert is None:
        found = find_anosov_elements(base, budget=budget, seed=seed)
        if not found:
            raise Inconclusive("no Anosov element of the base action found")
        base_cert = found[0][1]
    # lift the base element into the total flow span
    pushed = tuple(q.push(v) for v in total.flow.basis)
    expand = solve(tuple(zip(*pushed)), base_cert.h0)
    if expand is None:
        raise StructureError("base Anosov element does not lift to the flow span")
    lift = zero_vector(g.dim)
    for c, b in zip(expand, total.flow.basis):
        lift = vec_add(lift, vec_scale(c, b))
    fixed = total.flow.intersect(fiber)
    adl = g.ad(lift)
    on_fiber = restrict_operator(adl, fiber.basis)
    if on_fiber is None:
        raise AlgebraError("fiber is expected to be invariant")
    if fixed.dim:
        sub_coords = []
        for v in fixed.basis:
            c = coords_in_basis(fiber.basis, v)
            if c is None:
                raise AlgebraError("flow-cap-fiber escaped the fiber")
            sub_coords.append(c)
        induced, _ = quotient_operator(on_fiber, tuple(sub_coords))
    else:
        induced = on_fiber
    hyp = is_hyperbolic(induced)
    central = bracket_space(full_space(g), fiber).dim == 0
    if central:
        kind = "central"
    elif fixed.dim == 0 and hyp:
        kind = "hyperbolic"
    else:
        kind = "generic"
    return NilSuspensionReport(True, hyp, hyp, kind, fiber.dim, fixed.dim)
