"""Metric Lie algebras and their Levi-Civita product, curvature and
Killing subalgebra.

The product constants p[i][j][k] (e_i e_j = sum_k p[i][j][k] e_k) are the
unique solution of

    2 <e_i e_j, e_k> = <[e_i,e_j], e_k> - <[e_j,e_k], e_i> + <[e_k,e_i], e_j>

for each pair (i, j); by bilinearity this pins the product on the whole
algebra, and all verdicts below (flatness in particular) are decided on
basis pairs with exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .errors import DegenerateFormError, HypothesisNotMetError, NonSymmetricError
from .lie import LieAlgebra
from .linalg import Mat, Signature, Subspace, Vec, ZERO, frac


@dataclass(frozen=True)
class MetricLieAlgebra:
    """A Lie algebra together with a nondegenerate symmetric inner product."""

    algebra: LieAlgebra
    gram: tuple[tuple[Fraction, ...], ...]
    signature: Signature = None  # type: ignore[assignment]  # computed below

    def __post_init__(self):
        n = self.algebra.dim
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise ValueError("Gram matrix size must match the algebra dimension")
        if not linalg.is_symmetric(self.gram):
            raise NonSymmetricError("inner product matrix must be symmetric")
        sig = linalg.signature(self.gram)
        if sig.n_zero:
            raise DegenerateFormError("inner product must be nondegenerate (ambient radical is nonzero)")
        object.__setattr__(self, "signature", sig)

    @classmethod
    def make(cls, algebra: LieAlgebra, gram: Sequence[Sequence]) -> "MetricLieAlgebra":
        return cls(algebra, tuple(tuple(frac(x) for x in row) for row in gram))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def is_lorentzian(self) -> bool:
        return self.signature.n_minus == 1 and self.signature.n_zero == 0

    @property
    def is_riemannian(self) -> bool:
        return self.signature.n_minus == 0 and self.signature.n_zero == 0

    def gram_rows(self) -> Mat:
        return [list(r) for r in self.gram]

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        return linalg.form_value(self.gram, x, y)

    def scale_gram(self, f) -> "MetricLieAlgebra":
        f = frac(f)
        if f == 0:
            raise ValueError("scale factor must be nonzero")
        return MetricLieAlgebra.make(self.algebra, linalg.mat_scale(self.gram_rows(), f))

    def change_basis(self, P: Sequence[Sequence]) -> "MetricLieAlgebra":
        """Transport algebra and inner product to the basis given by the
        columns of P (gram -> P^T gram P)."""
        Pm = linalg.mat(P)
        new_alg = self.algebra.change_basis(Pm)
        new_gram = linalg.mat_mul(linalg.transpose(Pm), linalg.mat_mul(self.gram_rows(), Pm))
        return MetricLieAlgebra.make(new_alg, new_gram)


@dataclass(frozen=True)
class LeviCivitaProduct:
    """Product constants p[i][j][k] of the Levi-Civita connection."""

    dim: int
    p: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def product(self, u: Sequence, v: Sequence) -> Vec:
        out = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                f = ui * vj
                row = self.p[i][j]
                for k in range(self.dim):
                    if row[k]:
                        out[k] += f * row[k]
        return out


@dataclass(frozen=True)
class CurvatureVerdict:
    flat: bool
    # (i, j, K(e_i, e_j)) for the first basis pair with nonzero curvature
    witness: tuple[int, int, tuple[tuple[Fraction, ...], ...]] | None = None


@lru_cache(maxsize=512)
def levi_civita(m: MetricLieAlgebra) -> LeviCivitaProduct:
    """Solve the defining linear system of the product, pair by pair."""
    n = m.dim
    G = m.gram_rows()
    c = m.algebra.c

    def pair_with_basis(v: Sequence[Fraction], k: int) -> Fraction:
        return sum((v[l] * G[l][k] for l in range(n) if v[l]), ZERO)

    p = []
    for i in range(n):
        plane = []
        for j in range(n):
            rhs = [
                (pair_with_basis(c[i][j], k) - pair_with_basis(c[j][k], i) + pair_with_basis(c[k][i], j))
                / 2
                for k in range(n)
            ]
            plane.append(tuple(linalg.solve(G, rhs)))
        p.append(tuple(plane))
    return LeviCivitaProduct(n, tuple(p))


def left_mult(p: LeviCivitaProduct, u: Sequence) -> Mat:
    """Matrix of v -> u v."""
    n = p.dim
    L = linalg.zeros(n, n)
    for j in range(n):
        for i, ui in enumerate(u):
            if ui:
                row = p.p[i][j]
                for k in range(n):
                    if row[k]:
                        L[k][j] += ui * row[k]
    return L


def right_mult(p: LeviCivitaProduct, u: Sequence) -> Mat:
    """Matrix of v -> v u."""
    n = p.dim
    R = linalg.zeros(n, n)
    for j in range(n):
        for b, ub in enumerate(u):
            if ub:
                row = p.p[j][b]
                for k in range(n):
                    if row[k]:
                        R[k][j] += ub * row[k]
    return R


def curvature(algebra: LieAlgebra, p: LeviCivitaProduct, u: Sequence, v: Sequence) -> Mat:
    """K(u, v) = L_[u,v] - (L_u L_v - L_v L_u), exact."""
    Lu = left_mult(p, [frac(x) for x in u])
    Lv = left_mult(p, [frac(x) for x in v])
    Lbr = left_mult(p, algebra.bracket(u, v))
    return linalg.mat_sub(Lbr, linalg.mat_sub(linalg.mat_mul(Lu, Lv), linalg.mat_mul(Lv, Lu)))


def is_flat(m: MetricLieAlgebra) -> CurvatureVerdict:
    """Check K(e_i, e_j) = 0 on all basis pairs (sufficient by bilinearity)."""
    n = m.dim
    p = levi_civita(m)
    basis = linalg.identity(n)
    for i in range(n):
        for j in range(i + 1, n):
            K = curvature(m.algebra, p, basis[i], basis[j])
            if not linalg.is_zero_mat(K):
                return CurvatureVerdict(False, (i, j, tuple(tuple(r) for r in K)))
    return CurvatureVerdict(True, None)


def killing_subalgebra(m: MetricLieAlgebra) -> Subspace:
    """{u : ad_u + (ad_u)* = 0}: values at the identity of the left-invariant
    Killing fields.  The condition is linear in u, so it is a kernel of an
    n^2 x n constraint matrix."""
    n = m.dim
    basis = linalg.identity(n)
    ops = []
    for a in range(n):
        ad_a = m.algebra.ad(basis[a])
        ops.append(linalg.mat_add(ad_a, linalg.adjoint(ad_a, m.gram_rows())))
    constraints = [[ops[a][i][j] for a in range(n)] for i in range(n) for j in range(n)]
    return Subspace.span(n, linalg.kernel_basis(constraints, ncols=n))


def has_timelike_vector(m: MetricLieAlgebra, V: Subspace) -> bool:
    """True iff the form restricted to V takes a negative value.

    An open condition: one negative diagonal entry after symmetric reduction
    suffices, so degenerate restrictions are fine."""
    if V.dim == 0:
        return False
    return linalg.signature(linalg.restrict_form(m.gram_rows(), V)).n_minus >= 1


def product_span(p: LeviCivitaProduct) -> Subspace:
    """span{e_i e_j : all i, j} (the set g.g)."""
    vectors = [list(p.p[i][j]) for i in range(p.dim) for j in range(p.dim)]
    return Subspace.span(p.dim, vectors)


def right_mult_kernel(p: LeviCivitaProduct) -> Subspace:
    """{u : R_u = 0}, again a kernel since u -> R_u is linear."""
    n = p.dim
    constraints = [[p.p[j][b][k] for b in range(n)] for j in range(n) for k in range(n)]
    return Subspace.span(n, linalg.kernel_basis(constraints, ncols=n))


@dataclass(frozen=True)
class KillingTripleReport:
    """The three flat-case characterizations of the Killing subalgebra."""

    killing: Subspace
    product_span_perp: Subspace
    right_mult_kernel: Subspace
    all_equal: bool
    abelian: bool


def verify_killing_triple_identity(m: MetricLieAlgebra) -> KillingTripleReport:
    """For a flat Riemannian or Lorentzian instance, compute independently
    the Killing subalgebra, (g.g)-perp and ker(u -> R_u) and compare."""
    if not (m.is_riemannian or m.is_lorentzian):
        raise HypothesisNotMetError("triple identity requires a Riemannian or Lorentzian signature")
    if not is_flat(m).flat:
        raise HypothesisNotMetError("triple identity requires a flat metric")
    p = levi_civita(m)
    s1 = killing_subalgebra(m)
    s2 = linalg.orthogonal_complement(product_span(p), m.gram_rows())
    s3 = right_mult_kernel(p)
    equal = s1 == s2 == s3
    return KillingTripleReport(s1, s2, s3, equal, m.algebra.is_abelian_subspace(s1))
