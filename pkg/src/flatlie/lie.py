"""Lie algebras presented by rational structure constants.

The tensor c[i][j][k] means [e_i, e_j] = sum_k c[i][j][k] e_k.  Antisymmetry
and the Jacobi identity are checked exactly at construction, so everything
downstream may assume a genuine Lie algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .errors import AntisymmetryError, JacobiError, SingularMatrixError
from .linalg import Mat, Subspace, Vec, ZERO, frac

Tensor = tuple[tuple[tuple[Fraction, ...], ...], ...]


def _freeze(c: Sequence[Sequence[Sequence]]) -> Tensor:
    return tuple(tuple(tuple(frac(x) for x in row) for row in plane) for plane in c)


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    c: Tensor
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ValueError("dimension must be a positive integer")
        if len(self.c) != n or any(len(p) != n or any(len(r) != n for r in p) for p in self.c):
            raise ValueError("structure constant tensor must be n x n x n")
        for i in range(n):
            for j in range(i, n):
                for k in range(n):
                    if self.c[i][j][k] != -self.c[j][i][k]:
                        raise AntisymmetryError(i, j, k)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    r = self._jacobi_residual(i, j, k)
                    if not linalg.is_zero_vec(r):
                        raise JacobiError(i, j, k, r)

    @classmethod
    def from_structure_constants(cls, dim: int, c, labels: Sequence[str] | None = None) -> "LieAlgebra":
        return cls(dim, _freeze(c), tuple(labels) if labels else None)

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Sequence],
        labels: Sequence[str] | None = None,
    ) -> "LieAlgebra":
        """Build from the strict upper triangle only: keys (i, j) with i < j,
        0-based; the antisymmetric completion is automatic."""
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < dim")
            if len(coeffs) != dim:
                raise ValueError(f"bracket ({i}, {j}) has {len(coeffs)} coefficients, expected {dim}")
            v = [frac(x) for x in coeffs]
            c[i][j] = v
            c[j][i] = [-x for x in v]
        return cls(dim, _freeze(c), tuple(labels) if labels else None)

    @classmethod
    def abelian(cls, dim: int, labels: Sequence[str] | None = None) -> "LieAlgebra":
        return cls.from_brackets(dim, {}, labels)

    def _jacobi_residual(self, i: int, j: int, k: int) -> Vec:
        n = self.dim
        out = [ZERO] * n
        for a, b, cc in ((i, j, k), (j, k, i), (k, i, j)):
            inner = self.c[b][cc]
            for l in range(n):
                if inner[l]:
                    f = inner[l]
                    row = self.c[a][l]
                    for m in range(n):
                        if row[m]:
                            out[m] += f * row[m]
        return out

    def bracket(self, x: Sequence, y: Sequence) -> Vec:
        n = self.dim
        out = [ZERO] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                row = self.c[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] += f * row[k]
        return out

    def ad(self, x: Sequence) -> Mat:
        """Matrix of v -> [x, v]; columns are the brackets with basis vectors."""
        n = self.dim
        A = linalg.zeros(n, n)
        for j in range(n):
            for i, xi in enumerate(x):
                if xi:
                    row = self.c[i][j]
                    for k in range(n):
                        if row[k]:
                            A[k][j] += xi * row[k]
        return A

    def derived_subalgebra(self) -> Subspace:
        """[g, g]: the span of all basis brackets."""
        vectors = [list(self.c[i][j]) for i in range(self.dim) for j in range(i + 1, self.dim)]
        return Subspace.span(self.dim, vectors)

    def center(self) -> Subspace:
        """{x : [x, y] = 0 for all y}, computed as an exact kernel."""
        n = self.dim
        constraints = [[self.c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
        return Subspace.span(n, linalg.kernel_basis(constraints, ncols=n))

    def is_unimodular(self) -> bool:
        n = self.dim
        return all(sum((self.c[i][j][j] for j in range(n)), ZERO) == 0 for i in range(n))

    def is_abelian_subspace(self, V: Subspace) -> bool:
        rows = V.basis_rows()
        return all(
            linalg.is_zero_vec(self.bracket(rows[a], rows[b]))
            for a in range(len(rows))
            for b in range(a + 1, len(rows))
        )

    def is_abelian(self) -> bool:
        return all(
            linalg.is_zero_vec(self.c[i][j]) for i in range(self.dim) for j in range(i + 1, self.dim)
        )

    def is_2_solvable(self) -> bool:
        """True iff the derived subalgebra is abelian."""
        return self.is_abelian_subspace(self.derived_subalgebra())

    def change_basis(self, P: Sequence[Sequence]) -> "LieAlgebra":
        """Transport to the basis whose j-th vector is column j of P (old
        coordinates).  Jacobi is re-validated on construction."""
        n = self.dim
        Pm = linalg.mat(P)
        if linalg.det(Pm) == 0:
            raise SingularMatrixError("change of basis matrix is singular")
        Pinv = linalg.inverse(Pm)
        cols = [[Pm[r][a] for r in range(n)] for a in range(n)]
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                w = linalg.mat_vec(Pinv, self.bracket(cols[a], cols[b]))
                c[a][b] = w
                c[b][a] = [-x for x in w]
        return LieAlgebra(n, _freeze(c))
