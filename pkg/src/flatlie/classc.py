"""Scalar-bracket Lie algebras: detection, the degenerate-restriction
flatness criterion, and the explicit flat witness basis.

"Class C" here means non-abelian algebras in which every bracket [x, y] is
a linear combination of x and y; equivalently there is an abelian
codimension-1 ideal U (necessarily the derived algebra) and an element b
outside it acting on U as the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import (
    AbelianInputError,
    InvalidWitnessError,
    NotClassCError,
    NotDegenerateError,
    RadicalDimensionError,
)
from .lie import LieAlgebra
from .linalg import Mat, Subspace, Vec, ZERO, frac
from .metric import LeviCivitaProduct, MetricLieAlgebra, is_flat


@dataclass(frozen=True)
class ClassCStructure:
    """Abelian codimension-1 ideal, the normalized generator b with
    [b, x] = x on the ideal, and the scale of the detection transversal
    (t = alpha b + u0)."""

    ideal: Subspace
    b: tuple[Fraction, ...]
    alpha: Fraction


def scalar_action(a: LieAlgebra, U: Subspace, t: Sequence) -> Fraction | None:
    """alpha such that ad_t restricted to U equals alpha * id, or None.

    The restriction is computed exactly in U's canonical basis; any bracket
    [t, u] falling outside U also returns None.
    """
    rows = U.basis_rows()
    if not rows:
        return None
    alpha = None
    for idx, u in enumerate(rows):
        w = a.bracket(list(t), u)
        if not U.contains(w):
            return None
        coords = _coords_in(rows, w)
        expected = [ZERO] * len(rows)
        if alpha is None:
            alpha = coords[idx]
        expected[idx] = alpha
        if coords != expected:
            return None
    return alpha


def _coords_in(rows: Mat, w: Vec) -> Vec:
    """Coordinates of w in the span of `rows` (assumed to contain w)."""
    # rows are RREF: read coordinates off the pivot positions, then verify.
    coords = []
    residue = list(w)
    for row in rows:
        piv = next(j for j, x in enumerate(row) if x != 0)
        c = residue[piv]
        coords.append(c)
        if c:
            residue = [x - c * y for x, y in zip(residue, row)]
    if not linalg.is_zero_vec(residue):
        raise ValueError("vector not in subspace")
    return coords


def detect(a: LieAlgebra) -> ClassCStructure | None:
    """Structural detection: derived algebra abelian of codimension 1 and a
    transversal acting on it by a nonzero scalar.

    Returns None when any condition fails.  Sampling the span property
    [x, y] in span{x, y} cannot certify membership in the class, so it is
    only used as a cross-check in the tests.
    """
    if a.is_abelian():
        raise AbelianInputError("class-C detection is only defined for non-abelian algebras")
    U = a.derived_subalgebra()
    if U.dim != a.dim - 1 or not a.is_abelian_subspace(U):
        return None
    basis = linalg.identity(a.dim)
    t = next((basis[i] for i in range(a.dim) if not U.contains(basis[i])), None)
    if t is None:
        return None
    alpha = scalar_action(a, U, t)
    if alpha is None or alpha == 0:
        return None
    b = tuple(x / alpha for x in t)
    return ClassCStructure(U, b, alpha)


@dataclass(frozen=True)
class Theorem2Report:
    degenerate_restriction: bool
    radical_dim: int
    flat: bool
    equivalent: bool


def theorem2_check(m: MetricLieAlgebra) -> Theorem2Report:
    """Two-sided flatness criterion for class-C algebras: flat iff the inner
    product restricted to the derived algebra is degenerate.  Both sides are
    computed independently (curvature vs. radical of the restriction)."""
    structure = _require_class_c(m.algebra)
    del structure
    D = m.algebra.derived_subalgebra()
    restricted = linalg.restrict_form(m.gram_rows(), D)
    rad = linalg.radical(restricted, D)
    degenerate = rad.dim > 0
    flat = is_flat(m).flat
    return Theorem2Report(degenerate, rad.dim, flat, degenerate == flat)


def _require_class_c(a: LieAlgebra) -> ClassCStructure:
    try:
        structure = detect(a)
    except AbelianInputError:
        raise NotClassCError("abelian algebras are not in class C") from None
    if structure is None:
        raise NotClassCError("algebra has no abelian codimension-1 ideal with scalar transversal action")
    return structure


@dataclass(frozen=True)
class WitnessBasis:
    """Adapted basis for a flat class-C metric: e spans the radical of the
    restricted form, d is a null transversal with <d, e> = 1, and b_basis
    spans the orthogonal complement of span{e, d} (inside the derived
    algebra).  gram_b is the restriction of the inner product to b_basis."""

    e: tuple[Fraction, ...]
    d: tuple[Fraction, ...]
    b_basis: Subspace
    gram_b: tuple[tuple[Fraction, ...], ...]


def construct_witness(m: MetricLieAlgebra) -> WitnessBasis:
    """Build the witness basis for a degenerate restriction.

    e is the radical generator (leading coordinate 1 in canonical form);
    y is the first basis vector with <y, e> != 0 (one exists because the
    ambient form is nondegenerate); then

        d = y / <y, e> - (1/2) (<y, y> / <y, e>^2) e

    gives <d, e> = 1 and <d, d> = 0.  All postconditions are re-verified
    exactly before returning.
    """
    _require_class_c(m.algebra)
    n = m.dim
    D = m.algebra.derived_subalgebra()
    restricted = linalg.restrict_form(m.gram_rows(), D)
    rad = linalg.radical(restricted, D)
    if rad.dim == 0:
        raise NotDegenerateError("restriction to the derived algebra is nondegenerate")
    if rad.dim > 1:
        # unreachable for a nondegenerate ambient form on a codimension-1
        # ideal, but guarded rather than assumed
        raise RadicalDimensionError(f"restricted-form radical has dimension {rad.dim}")
    e = list(rad.basis[0])

    basis = linalg.identity(n)
    y = next((basis[i] for i in range(n) if m.inner(basis[i], e) != 0), None)
    if y is None:
        raise AssertionError("nondegenerate form pairs e with some basis vector")
    ye = m.inner(y, e)
    yy = m.inner(y, y)
    d = linalg.vec_sub(linalg.vec_scale(y, 1 / ye), linalg.vec_scale(e, yy / (2 * ye * ye)))

    span_ed = Subspace.span(n, [e, d])
    B = linalg.orthogonal_complement(span_ed, m.gram_rows())

    if m.inner(d, e) != 1 or m.inner(d, d) != 0:
        raise InvalidWitnessError("null transversal postconditions failed")
    if any(m.inner(e, list(x)) != 0 for x in D.basis):
        raise InvalidWitnessError("radical vector is not orthogonal to the derived algebra")
    if linalg.subspace_sum(span_ed, B).dim != n or B.dim != n - 2:
        raise InvalidWitnessError("span{e, d} + B does not decompose the algebra")
    if linalg.subspace_sum(Subspace.span(n, [e]), B) != D:
        raise InvalidWitnessError("span{e} + B is not the derived algebra")

    gram_b = linalg.restrict_form(m.gram_rows(), B)
    return WitnessBasis(tuple(e), tuple(d), B, tuple(tuple(r) for r in gram_b))


def witness_change_of_basis(w: WitnessBasis) -> Mat:
    """Columns e, B-basis..., d: the transport from witness coordinates to
    the original basis."""
    rows = [list(w.e)] + w.b_basis.basis_rows() + [list(w.d)]
    return linalg.transpose(rows)


def witness_scale(a: LieAlgebra, w: WitnessBasis) -> Fraction:
    """alpha with [d, u] = alpha u on the derived algebra (d = alpha b + u0)."""
    U = a.derived_subalgebra()
    alpha = scalar_action(a, U, list(w.d))
    if alpha is None or alpha == 0:
        raise InvalidWitnessError("witness transversal does not act by a nonzero scalar")
    return alpha


def closed_form_products(w: WitnessBasis, alpha) -> LeviCivitaProduct:
    """Assemble the flat product table in witness coordinates
    (index 0 = e, 1..n-2 = B, n-1 = d):

        L_e = 0,  de = alpha e,  dd = -alpha d,
        du = ue = 0,  ud = -alpha u,  uu' = alpha <u, u'> e.

    Must equal the metric-defined product after the witness change of basis;
    the tests enforce that equality exactly.
    """
    alpha = frac(alpha)
    if alpha == 0:
        raise InvalidWitnessError("scale alpha must be nonzero")
    nb = w.b_basis.dim
    n = nb + 2
    if len(w.gram_b) != nb:
        raise InvalidWitnessError("gram_b size does not match the B-sector dimension")
    dd = n - 1
    p = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    p[dd][0][0] = alpha          # de = alpha e
    p[dd][dd][dd] = -alpha       # dd = -alpha d
    for j in range(1, nb + 1):
        p[j][dd][j] = -alpha     # ud = -alpha u
        for k in range(1, nb + 1):
            p[j][k][0] = alpha * w.gram_b[j - 1][k - 1]  # uu' = alpha <u,u'> e
    return LeviCivitaProduct(n, tuple(tuple(tuple(r) for r in plane) for plane in p))


def transport_product(p: LeviCivitaProduct, P: Sequence[Sequence]) -> LeviCivitaProduct:
    """Product constants in the basis given by the columns of P."""
    n = p.dim
    Pm = linalg.mat(P)
    Pinv = linalg.inverse(Pm)
    cols = [[Pm[r][a] for r in range(n)] for a in range(n)]
    out = []
    for a in range(n):
        plane = []
        for b in range(n):
            plane.append(tuple(linalg.mat_vec(Pinv, p.product(cols[a], cols[b]))))
        out.append(tuple(plane))
    return LeviCivitaProduct(n, tuple(out))


@dataclass(frozen=True)
class IncompletenessReport:
    unimodular: bool
    b_trace: Fraction
    flat: bool
    verdict: str  # "incomplete" or "criterion inapplicable"


def incompleteness_verdict(m: MetricLieAlgebra) -> IncompletenessReport:
    """Class-C algebras are never unimodular (trace ad_b = dim - 1), so a
    flat class-C metric is geodesically incomplete by the completeness
    criterion (flat complete iff unimodular).  For non-flat metrics that
    criterion does not apply and the verdict says so."""
    structure = _require_class_c(m.algebra)
    ad_b = m.algebra.ad(list(structure.b))
    b_trace = sum((ad_b[i][i] for i in range(m.dim)), ZERO)
    unimodular = m.algebra.is_unimodular()
    flat = theorem2_check(m).flat
    verdict = "incomplete" if flat and not unimodular else "criterion inapplicable"
    return IncompletenessReport(unimodular, b_trace, flat, verdict)
