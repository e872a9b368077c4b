"""Exact linear algebra over the rationals.

Vectors are lists/tuples of Fraction, matrices are lists of row lists.
Every operation here is pure and exact: no floating point, no tolerances,
so "equals zero" is a real decision, not a threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateFormError, NonSymmetricError, SingularMatrixError

Vec = list[Fraction]
Mat = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce to Fraction; floats are refused to keep the kernel exact."""
    if isinstance(x, float):
        raise TypeError(f"refusing inexact float {x!r}")
    return Fraction(x)


def vec(entries: Iterable) -> Vec:
    return [frac(x) for x in entries]


def mat(rows: Iterable[Iterable]) -> Mat:
    return [vec(r) for r in rows]


def zeros(r: int, c: int) -> Mat:
    return [[ZERO] * c for _ in range(r)]


def identity(n: int) -> Mat:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[Fraction]]) -> Mat:
    return [list(col) for col in zip(*A)] if A else []


def mat_vec(A: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vec:
    return [sum((a * x for a, x in zip(row, v) if a and x), ZERO) for row in A]


def mat_mul(A: Sequence[Sequence[Fraction]], B: Sequence[Sequence[Fraction]]) -> Mat:
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col) if a and b), ZERO) for col in Bt] for row in A]


def mat_sub(A, B) -> Mat:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_add(A, B) -> Mat:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, f: Fraction) -> Mat:
    return [[f * a for a in row] for row in A]


def mat_eq(A, B) -> bool:
    return [list(r) for r in A] == [list(r) for r in B]


def is_zero_mat(A) -> bool:
    return all(x == 0 for row in A for x in row)


def is_zero_vec(v) -> bool:
    return all(x == 0 for x in v)


def vec_add(u, v) -> Vec:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v) -> Vec:
    return [a - b for a, b in zip(u, v)]


def vec_scale(v, f: Fraction) -> Vec:
    return [f * x for x in v]


def is_symmetric(A) -> bool:
    n = len(A)
    return all(len(r) == n for r in A) and all(
        A[i][j] == A[j][i] for i in range(n) for j in range(i + 1, n)
    )


def form_value(G: Sequence[Sequence[Fraction]], x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    """<x, y> for the bilinear form with Gram matrix G."""
    return sum((xi * gij * yj for xi, row in zip(x, G) if xi for gij, yj in zip(row, y) if gij and yj), ZERO)


def rref(A: Sequence[Sequence[Fraction]]) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (R, pivot_columns)."""
    rows = [list(r) for r in A]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(A: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(A)[1])


def kernel_basis(A: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[Vec]:
    """Basis of the null space {v : A v = 0}.

    `ncols` is only needed when A has no rows (no constraints).
    """
    if not A:
        if ncols is None:
            raise ValueError("kernel of an empty matrix needs an explicit column count")
        return [row[:] for row in identity(ncols)]
    n = len(A[0])
    R, pivots = rref(A)
    pivot_set = set(pivots)
    basis: list[Vec] = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [ZERO] * n
        v[free] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][free]
        basis.append(v)
    return basis


def det(A: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(A)
    M = [list(r) for r in A]
    d = ONE
    for i in range(n):
        p = next((r for r in range(i, n) if M[r][i] != 0), None)
        if p is None:
            return ZERO
        if p != i:
            M[i], M[p] = M[p], M[i]
            d = -d
        d *= M[i][i]
        for r in range(i + 1, n):
            if M[r][i] != 0:
                f = M[r][i] / M[i][i]
                M[r] = [x - f * y for x, y in zip(M[r], M[i])]
    return d


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vec:
    """Unique solution of A x = b for square invertible A."""
    n = len(A)
    M = [list(row) + [bi] for row, bi in zip(A, b)]
    for i in range(n):
        p = next((r for r in range(i, n) if M[r][i] != 0), None)
        if p is None:
            raise SingularMatrixError("linear system has no unique solution")
        if p != i:
            M[i], M[p] = M[p], M[i]
        pv = M[i][i]
        for r in range(i + 1, n):
            if M[r][i] != 0:
                f = M[r][i] / pv
                M[r] = [x - f * y for x, y in zip(M[r], M[i])]
    x = [ZERO] * n
    for i in range(n - 1, -1, -1):
        s = M[i][n] - sum((M[i][j] * x[j] for j in range(i + 1, n) if M[i][j]), ZERO)
        x[i] = s / M[i][i]
    return x


def inverse(A: Sequence[Sequence[Fraction]]) -> Mat:
    n = len(A)
    M = [list(row) + irow for row, irow in zip(A, identity(n))]
    for i in range(n):
        p = next((r for r in range(i, n) if M[r][i] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is not invertible")
        if p != i:
            M[i], M[p] = M[p], M[i]
        pv = M[i][i]
        if pv != 1:
            M[i] = [x / pv for x in M[i]]
        for r in range(n):
            if r != i and M[r][i] != 0:
                f = M[r][i]
                M[r] = [x - f * y for x, y in zip(M[r], M[i])]
    return [row[n:] for row in M]


class Signature(NamedTuple):
    """Sylvester signature (#positive, #negative, #zero) of a symmetric form."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


def symmetric_diagonalize(S: Sequence[Sequence[Fraction]]) -> tuple[Mat, Vec]:
    """Exact congruence diagonalization: returns (E, d) with E S E^T = diag(d).

    Uses simultaneous row/column pivoting; when the whole remaining diagonal
    vanishes, a row+column addition manufactures a nonzero diagonal entry
    (2 S[r][c] != 0 in characteristic zero), so no square roots are needed.
    """
    n = len(S)
    if not is_symmetric(S):
        raise NonSymmetricError("symmetric_diagonalize requires a symmetric matrix")
    A = [list(r) for r in S]
    E = identity(n)

    def add_row_col(dst: int, src: int, f: Fraction) -> None:
        A[dst] = [x + f * y for x, y in zip(A[dst], A[src])]
        for r in range(n):
            A[r][dst] += f * A[r][src]
        E[dst] = [x + f * y for x, y in zip(E[dst], E[src])]

    def swap(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        for r in range(n):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        E[i], E[j] = E[j], E[i]

    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j] != 0), None)
            if j is not None:
                swap(i, j)
            else:
                found = None
                for r in range(i, n):
                    for c in range(r + 1, n):
                        if A[r][c] != 0:
                            found = (r, c)
                            break
                    if found:
                        break
                if found is None:
                    break  # remaining block is identically zero
                r, c = found
                add_row_col(r, c, ONE)
                if r != i:
                    swap(i, r)
        piv = A[i][i]
        for r in range(i + 1, n):
            if A[r][i] != 0:
                add_row_col(r, i, -A[r][i] / piv)
    return E, [A[i][i] for i in range(n)]


def signature(S: Sequence[Sequence[Fraction]]) -> Signature:
    """Sylvester signature of a symmetric matrix, computed exactly."""
    _, d = symmetric_diagonalize(S)
    return Signature(
        n_plus=sum(1 for x in d if x > 0),
        n_minus=sum(1 for x in d if x < 0),
        n_zero=sum(1 for x in d if x == 0),
    )


def adjoint(M: Sequence[Sequence[Fraction]], G: Sequence[Sequence[Fraction]]) -> Mat:
    """Adjoint M* = G^-1 M^T G, i.e. <M x, y> = <x, M* y> for the form G."""
    if det(G) == 0:
        raise DegenerateFormError("adjoint requires a nondegenerate form")
    return mat_mul(inverse(G), mat_mul(transpose(M), G))


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^n with a canonical reduced-row-echelon basis.

    Equality of subspaces is plain equality of the canonical bases.  The
    empty basis is the zero subspace.
    """

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def span(ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = []
        for v in vectors:
            w = vec(v)
            if len(w) != ambient_dim:
                raise ValueError(f"vector length {len(w)} != ambient dimension {ambient_dim}")
            if not is_zero_vec(w):
                vecs.append(w)
        if not vecs:
            return Subspace(ambient_dim, ())
        R, pivots = rref(vecs)
        return Subspace(ambient_dim, tuple(tuple(row) for row in R[: len(pivots)]))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace.span(ambient_dim, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        w = vec(v)
        for row in self.basis:
            p = next(j for j, x in enumerate(row) if x != 0)
            if w[p] != 0:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        return is_zero_vec(w)

    def basis_rows(self) -> Mat:
        return [list(r) for r in self.basis]


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    if U.ambient_dim != V.ambient_dim:
        raise ValueError("subspaces live in different ambient spaces")
    return Subspace.span(U.ambient_dim, list(U.basis) + list(V.basis))


def restrict_form(G: Sequence[Sequence[Fraction]], V: Subspace) -> Mat:
    """Gram matrix of the form restricted to V, in V's canonical basis."""
    B = V.basis_rows()
    return mat_mul(B, mat_mul(G, transpose(B))) if B else []


def orthogonal_complement(V: Subspace, G: Sequence[Sequence[Fraction]]) -> Subspace:
    """V-perp for a nondegenerate symmetric form G on the ambient space."""
    if det(G) == 0:
        raise DegenerateFormError("orthogonal complement requires a nondegenerate ambient form")
    n = V.ambient_dim
    if V.dim == 0:
        return Subspace.full(n)
    constraints = mat_mul(V.basis_rows(), G)
    return Subspace.span(n, kernel_basis(constraints))


def radical(form_restricted: Sequence[Sequence[Fraction]], on: Subspace) -> Subspace:
    """Radical {e in V : <e, x> = 0 for all x in V} of a restricted form.

    `form_restricted` must be the Gram matrix of the ambient form in V's
    canonical basis; the result is expressed in ambient coordinates.
    """
    if on.dim == 0:
        return on
    if not is_symmetric(form_restricted):
        raise NonSymmetricError("restricted form must be symmetric")
    coeff_vectors = kernel_basis(form_restricted)
    rows = on.basis_rows()
    ambient = []
    for coeffs in coeff_vectors:
        v = [ZERO] * on.ambient_dim
        for c, row in zip(coeffs, rows):
            if c:
                v = [x + c * y for x, y in zip(v, row)]
        ambient.append(v)
    return Subspace.span(on.ambient_dim, ambient)
