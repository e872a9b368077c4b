"""Decision procedures for the structure theorems on flat metric Lie algebras.

Each check computes both sides of its equivalence independently (curvature on
one side, subspace structure on the other) and reports them separately: the
module verifies, it does not assume.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from . import linalg
from .errors import (
    HypothesisNotMetError,
    InvalidSplitError,
    MismatchedAlgebrasError,
    NonCommutingFamilyError,
    NotLorentzianError,
    NotRiemannianError,
    OddDimensionError,
)
from .linalg import Subspace
from .metric import (
    MetricLieAlgebra,
    has_timelike_vector,
    is_flat,
    killing_subalgebra,
    left_mult,
    levi_civita,
)

#: residual / commutator tolerance for the floating-point rotation normal form
ROTATION_TOL = 1e-9


@dataclass(frozen=True)
class SplitData:
    """Killing/derived decomposition with its orthogonality witness."""

    killing: Subspace
    derived: Subspace
    cross_gram: tuple[tuple[Fraction, ...], ...]  # <s_i, d_j>; all zero iff orthogonal


@dataclass(frozen=True)
class Theorem1Report:
    flat: bool
    timelike_killing: bool
    direct_side: bool
    spans_directly: bool
    orthogonal: bool
    killing_abelian: bool
    derived_abelian: bool
    structural_side: bool
    equivalent: bool
    even_dim_derived: bool | None
    eq2_verified: bool | None
    split: SplitData | None


@dataclass(frozen=True)
class RiemannianFlatReport:
    flat: bool
    direct_side: bool
    spans_directly: bool
    orthogonal: bool
    killing_abelian: bool
    derived_abelian: bool
    structural_side: bool
    equivalent: bool
    eq2_verified: bool | None
    split: SplitData | None


def _split_components(m: MetricLieAlgebra) -> tuple[SplitData, bool, bool, bool, bool]:
    """Common structural material: the split data plus the individual
    structural predicates (spans, orthogonal, both abelian)."""
    a = m.algebra
    S = killing_subalgebra(m)
    D = a.derived_subalgebra()
    cross = [
        [m.inner(list(s), list(d)) for d in D.basis] if D.dim else []
        for s in S.basis
    ]
    split = SplitData(S, D, tuple(tuple(row) for row in cross))
    spans = S.dim + D.dim == m.dim and linalg.subspace_sum(S, D).dim == m.dim
    orthogonal = all(x == 0 for row in cross for x in row)
    s_abelian = a.is_abelian_subspace(S)
    d_abelian = a.is_abelian_subspace(D)
    return split, spans, orthogonal, s_abelian, d_abelian


def verify_eq2(m: MetricLieAlgebra, split: SplitData) -> bool:
    """Check the closed-form product on a valid split: L_s = ad_s for s in
    the Killing subalgebra and L_h = 0 on the derived algebra, exactly."""
    if split.killing != killing_subalgebra(m) or split.derived != m.algebra.derived_subalgebra():
        raise InvalidSplitError("split does not match this metric's Killing/derived subspaces")
    if split.killing.dim + split.derived.dim != m.dim or any(
        x != 0 for row in split.cross_gram for x in row
    ):
        raise InvalidSplitError("split is not an orthogonal direct-sum decomposition")
    p = levi_civita(m)
    for s in split.killing.basis:
        if not linalg.mat_eq(left_mult(p, list(s)), m.algebra.ad(list(s))):
            return False
    for h in split.derived.basis:
        if not linalg.is_zero_mat(left_mult(p, list(h))):
            return False
    return True


def theorem1_check(m: MetricLieAlgebra) -> Theorem1Report:
    """Two-sided check of the flat-Lorentzian-with-timelike-Killing
    characterization.

    Direct side: the metric is flat and the Killing subalgebra contains a
    timelike vector.  Structural side: the algebra splits as an orthogonal
    direct sum of the Killing subalgebra and the derived algebra, both
    abelian, with a timelike vector on the Killing side.  The two must agree
    on every valid Lorentzian input; a discrepancy is a bug, not a result.
    """
    if not m.is_lorentzian:
        raise NotLorentzianError(f"signature {tuple(m.signature)} is not Lorentzian")
    split, spans, orthogonal, s_abelian, d_abelian = _split_components(m)
    timelike = has_timelike_vector(m, split.killing)
    direct = is_flat(m).flat and timelike
    structural = spans and orthogonal and s_abelian and d_abelian and timelike
    even = split.derived.dim % 2 == 0 if structural else None
    eq2 = verify_eq2(m, split) if structural else None
    return Theorem1Report(
        flat=is_flat(m).flat,
        timelike_killing=timelike,
        direct_side=direct,
        spans_directly=spans,
        orthogonal=orthogonal,
        killing_abelian=s_abelian,
        derived_abelian=d_abelian,
        structural_side=structural,
        equivalent=direct == structural,
        even_dim_derived=even,
        eq2_verified=eq2,
        split=split if structural else None,
    )


def riemannian_flat_check(m: MetricLieAlgebra) -> RiemannianFlatReport:
    """Same two-sided equivalence for positive definite metrics (no timelike
    condition): flat iff orthogonal split into abelian Killing + derived."""
    if not m.is_riemannian:
        raise NotRiemannianError(f"signature {tuple(m.signature)} is not Riemannian")
    split, spans, orthogonal, s_abelian, d_abelian = _split_components(m)
    direct = is_flat(m).flat
    structural = spans and orthogonal and s_abelian and d_abelian
    eq2 = verify_eq2(m, split) if structural else None
    return RiemannianFlatReport(
        flat=direct,
        direct_side=direct,
        spans_directly=spans,
        orthogonal=orthogonal,
        killing_abelian=s_abelian,
        derived_abelian=d_abelian,
        structural_side=structural,
        equivalent=direct == structural,
        eq2_verified=eq2,
        split=split if structural else None,
    )


@dataclass(frozen=True)
class Corollary1Report:
    two_solvable: bool
    unimodular: bool
    geodesically_complete: bool


def corollary1_check(m: MetricLieAlgebra) -> Corollary1Report:
    """A flat Lorentzian algebra with a timelike Killing vector is 2-solvable
    and unimodular, hence geodesically complete (flat + unimodular)."""
    report = theorem1_check(m)
    if not report.direct_side:
        raise HypothesisNotMetError("requires a flat Lorentzian metric with a timelike Killing vector")
    two_solvable = m.algebra.is_2_solvable()
    unimodular = m.algebra.is_unimodular()
    return Corollary1Report(two_solvable, unimodular, two_solvable and unimodular)


def same_connection(m1: MetricLieAlgebra, m2: MetricLieAlgebra) -> bool:
    """True iff both metrics induce identical Levi-Civita product constants."""
    if m1.algebra != m2.algebra:
        raise MismatchedAlgebrasError("metrics live on different Lie algebras")
    return levi_civita(m1).p == levi_civita(m2).p


def riemannian_companion(m: MetricLieAlgebra) -> MetricLieAlgebra:
    """Positive definite metric with the same Levi-Civita connection.

    On the Killing factor the restricted (Lorentzian) form is diagonalized by
    an exact congruence and its negative entry is flipped; the derived factor
    keeps the original (positive definite) restriction.  The result is
    checked to be positive definite with an identical product before it is
    returned.
    """
    report = theorem1_check(m)
    if not report.direct_side:
        raise HypothesisNotMetError("requires a flat Lorentzian metric with a timelike Killing vector")
    assert report.split is not None
    S, D = report.split.killing, report.split.derived
    n = m.dim
    G = m.gram_rows()

    G_S = linalg.restrict_form(G, S)
    E, diag = linalg.symmetric_diagonalize(G_S)
    if any(d == 0 for d in diag):
        raise HypothesisNotMetError("restriction to the Killing subalgebra is degenerate")
    Einv = linalg.inverse(E)
    abs_diag = [[abs(d) if i == j else linalg.ZERO for j, d in enumerate(diag)] for i in range(len(diag))]
    G_S_pos = linalg.mat_mul(Einv, linalg.mat_mul(abs_diag, linalg.transpose(Einv)))
    G_D = linalg.restrict_form(G, D)

    # columns of T: Killing basis vectors, then derived basis vectors
    T = linalg.transpose(S.basis_rows() + D.basis_rows())
    k = S.dim
    block = linalg.zeros(n, n)
    for i in range(k):
        for j in range(k):
            block[i][j] = G_S_pos[i][j]
    for i in range(D.dim):
        for j in range(D.dim):
            block[k + i][k + j] = G_D[i][j]
    Tinv = linalg.inverse(T)
    new_gram = linalg.mat_mul(linalg.transpose(Tinv), linalg.mat_mul(block, Tinv))

    companion = MetricLieAlgebra.make(m.algebra, new_gram)
    if not companion.is_riemannian:
        raise AssertionError("companion construction produced a non-positive-definite form")
    if not same_connection(m, companion):
        raise AssertionError("companion construction changed the Levi-Civita product")
    return companion


@dataclass(frozen=True)
class Corollary2Report:
    timelike_killing_exists: bool
    companion_exists: bool
    connection_verified: bool | None
    companion: MetricLieAlgebra | None


def corollary2_forward_check(m: MetricLieAlgebra) -> Corollary2Report:
    """On a flat Lorentzian instance: a timelike left-invariant Killing
    vector exists iff a same-connection Riemannian metric does.

    When a timelike vector exists the companion is constructed explicitly;
    when none exists, no companion can exist either (a same-connection
    Riemannian metric would force a timelike direction into the Killing
    subalgebra via the shared split), so both flags come out false.
    """
    if not m.is_lorentzian:
        raise NotLorentzianError(f"signature {tuple(m.signature)} is not Lorentzian")
    if not is_flat(m).flat:
        raise HypothesisNotMetError("requires a flat metric")
    timelike = has_timelike_vector(m, killing_subalgebra(m))
    if not timelike:
        return Corollary2Report(False, False, None, None)
    companion = riemannian_companion(m)
    return Corollary2Report(True, True, same_connection(m, companion), companion)


@dataclass(frozen=True)
class RotationForm:
    """Floating-point normal form of the Killing action on the derived
    algebra: commuting skew operators block-diagonalized into 2-planes.

    Reporting artifact only; nothing exact ever depends on it.
    frequencies[a][i] is the rotation rate of Killing generator a on plane i.
    """

    frequencies: tuple[tuple[float, ...], ...]
    planes: tuple[tuple[tuple[float, ...], tuple[float, ...]], ...]
    residual: float
    tolerance: float = ROTATION_TOL


def rotation_form(m: MetricLieAlgebra, split: SplitData) -> RotationForm:
    """Simultaneously block-diagonalize the restricted adjoint action.

    Requires a valid structural split with positive definite restriction to
    the derived algebra.  Works in floats: the rotation rates are generically
    irrational, so this stays quarantined from every exact verdict.
    """
    S, D = split.killing, split.derived
    G = m.gram_rows()
    if linalg.signature(linalg.restrict_form(G, D)) != linalg.Signature(D.dim, 0, 0):
        raise HypothesisNotMetError("restriction to the derived algebra must be positive definite")
    if D.dim % 2 != 0:
        raise OddDimensionError("derived algebra dimension is odd; split data is inconsistent")
    if D.dim == 0:
        return RotationForm(tuple(() for _ in S.basis), (), 0.0)

    Gf = np.array([[float(x) for x in row] for row in G])
    rows = np.array([[float(x) for x in r] for r in D.basis])
    # Gram-Schmidt the derived basis w.r.t. the (positive definite) restriction
    onb = []
    for r in rows:
        v = r.copy()
        for f in onb:
            v -= (f @ Gf @ v) * f
        v /= np.sqrt(v @ Gf @ v)
        onb.append(v)
    F = np.array(onb)  # rows: orthonormal basis of D

    ops = []
    for s in S.basis:
        ad_s = np.array([[float(x) for x in row] for row in m.algebra.ad(list(s))])
        ops.append(F @ Gf @ ad_s @ F.T)  # A[k][l] = <f_k, ad_s f_l>
    scale = max(1.0, max(np.abs(A).max() for A in ops))
    for a in range(len(ops)):
        for b in range(a + 1, len(ops)):
            if np.abs(ops[a] @ ops[b] - ops[b] @ ops[a]).max() > ROTATION_TOL * scale:
                raise NonCommutingFamilyError("restricted adjoint operators do not commute")

    p = D.dim // 2
    rng = np.random.default_rng(0)
    for _ in range(5):
        combo = sum(c * A for c, A in zip(rng.standard_normal(len(ops)), ops))
        eig, vecs = np.linalg.eig(combo)
        idx = [i for i in range(len(eig)) if eig[i].imag > ROTATION_TOL * scale]
        if len(idx) == p:
            break
    else:
        raise NonCommutingFamilyError("could not pair the derived algebra into rotation planes")
    idx.sort(key=lambda i: -eig[i].imag)

    planes_coords = []
    for i in idx:
        z = vecs[:, i]
        u, w = z.imag.copy(), z.real.copy()
        u /= np.linalg.norm(u)
        w -= (w @ u) * u
        w /= np.linalg.norm(w)
        planes_coords.append((u, w))

    freqs = []
    residual = 0.0
    for A in ops:
        row = []
        for u, w in planes_coords:
            lam = float(w @ (A @ u))
            row.append(lam)
            residual = max(
                residual,
                float(np.abs(A @ u - lam * w).max()),
                float(np.abs(A @ w + lam * u).max()),
            )
        freqs.append(tuple(row))

    planes_ambient = tuple(
        (tuple(float(x) for x in u @ F), tuple(float(x) for x in w @ F)) for u, w in planes_coords
    )
    return RotationForm(tuple(freqs), planes_ambient, residual)
