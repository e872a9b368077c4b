"""Seeded random instance generators and the randomized property sweeps.

Random Lie algebras are built from families that satisfy Jacobi by
construction (abelian, scalar-bracket, nilpotent, torus-rotation, simple
dim-3) and then scrambled by a random integer change of basis; Gram matrices
are built by congruence from a chosen diagonal so their signatures are
exact.  Every sweep returns a list of human-readable failure strings, empty
when the property held on every instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .classc import theorem2_check
from .lie import LieAlgebra
from .linalg import ONE, ZERO
from .metric import (
    MetricLieAlgebra,
    is_flat,
    left_mult,
    levi_civita,
    right_mult,
    verify_killing_triple_identity,
)
from .theorems import theorem1_check


def rational(rng: random.Random, zero_ok: bool = True) -> Fraction:
    num = rng.randint(-3, 3)
    if not zero_ok:
        while num == 0:
            num = rng.randint(-3, 3)
    return Fraction(num, rng.choice((1, 1, 2, 3)))


def unimodular_int_matrix(rng: random.Random, n: int) -> linalg.Mat:
    """Random invertible integer matrix built as L U with unit diagonals
    (det = 1, entries stay small)."""
    L = linalg.identity(n)
    U = linalg.identity(n)
    for i in range(n):
        for j in range(i):
            L[i][j] = Fraction(rng.randint(-1, 1))
        for j in range(i + 1, n):
            U[i][j] = Fraction(rng.randint(-1, 1))
    P = linalg.mat_mul(L, U)
    perm = list(range(n))
    rng.shuffle(perm)
    return [[P[i][perm[j]] for j in range(n)] for i in range(n)]


def gram_with_signature(rng: random.Random, n_plus: int, n_minus: int) -> linalg.Mat:
    """P^T diag(+-1) P for random invertible P: exact prescribed signature."""
    n = n_plus + n_minus
    diag = [ONE] * n_plus + [-ONE] * n_minus
    rng.shuffle(diag)
    D = [[diag[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    P = unimodular_int_matrix(rng, n)
    return linalg.mat_mul(linalg.transpose(P), linalg.mat_mul(D, P))


def scramble(m: MetricLieAlgebra, rng: random.Random) -> MetricLieAlgebra:
    return m.change_basis(unimodular_int_matrix(rng, m.dim))


# ---------------------------------------------------------------------------
# algebra shapes (all satisfy Jacobi by construction)
# ---------------------------------------------------------------------------

def rotation_algebra(rng: random.Random, dim: int) -> LieAlgebra:
    """k >= 1 commuting generators rotating p = (dim - k) / 2 planes."""
    p = rng.randint(1, (dim - 1) // 2)
    k = dim - 2 * p
    brackets: dict[tuple[int, int], list[Fraction]] = {}
    for plane in range(p):
        x, y = k + 2 * plane, k + 2 * plane + 1
        nonzero_somewhere = False
        lams = []
        for a in range(k):
            lam = rational(rng)
            lams.append(lam)
            nonzero_somewhere = nonzero_somewhere or lam != 0
        if not nonzero_somewhere:
            lams[rng.randrange(k)] = rational(rng, zero_ok=False)
        for a, lam in enumerate(lams):
            if lam:
                vx = [ZERO] * dim
                vx[y] = lam
                vy = [ZERO] * dim
                vy[x] = -lam
                brackets[(a, x)] = vx
                brackets[(a, y)] = vy
    return LieAlgebra.from_brackets(dim, brackets)


def class_c_algebra(rng: random.Random, dim: int) -> LieAlgebra:
    """[t, u_j] = alpha u_j on the codimension-1 abelian ideal."""
    alpha = rational(rng, zero_ok=False)
    brackets = {}
    for j in range(1, dim):
        v = [ZERO] * dim
        v[j] = alpha
        brackets[(0, j)] = v
    return LieAlgebra.from_brackets(dim, brackets)


def heisenberg_like(rng: random.Random, dim: int) -> LieAlgebra:
    """[e_1, e_2] = c e_3 (+ abelian directions)."""
    v = [ZERO] * dim
    v[2] = rational(rng, zero_ok=False)
    return LieAlgebra.from_brackets(dim, {(0, 1): v})


def simple3(dim: int) -> LieAlgebra:
    """so(3) in the first three coordinates."""
    def unit(k):
        v = [ZERO] * dim
        v[k] = ONE
        return v

    return LieAlgebra.from_brackets(dim, {(0, 1): unit(2), (1, 2): unit(0), (0, 2): [-x for x in unit(1)]})


def random_algebra(rng: random.Random, dim: int) -> LieAlgebra:
    shapes = ["abelian", "classc"]
    if dim >= 2:
        shapes.append("solvable2")
    if dim >= 3:
        shapes += ["rotation", "heisenberg", "simple3"]
    shape = rng.choice(shapes)
    if shape == "abelian":
        return LieAlgebra.abelian(dim)
    if shape == "classc":
        return class_c_algebra(rng, dim)
    if shape == "solvable2":
        v = [ZERO] * dim
        v[1] = rational(rng, zero_ok=False)
        return LieAlgebra.from_brackets(dim, {(0, 1): v})
    if shape == "rotation":
        return rotation_algebra(rng, dim)
    if shape == "heisenberg":
        return heisenberg_like(rng, dim)
    return simple3(dim)


def random_metric_algebra(rng: random.Random, dim: int, kind: str = "any") -> MetricLieAlgebra:
    """Random valid metric Lie algebra; kind in {"any", "lorentzian", "riemannian"}."""
    algebra = random_algebra(rng, dim)
    if kind == "lorentzian":
        n_minus = 1
    elif kind == "riemannian":
        n_minus = 0
    else:
        n_minus = rng.randint(0, dim)
    gram = gram_with_signature(rng, dim - n_minus, n_minus)
    m = MetricLieAlgebra.make(algebra, gram)
    return scramble(m, rng)


def theorem1_true_instance(rng: random.Random, dim: int) -> MetricLieAlgebra:
    """Flat Lorentzian instance with a timelike Killing vector: rotation
    algebra with an adapted block metric (Lorentzian on the torus factor,
    equal positive weights inside each rotation plane), then scrambled."""
    if dim < 3:
        algebra = LieAlgebra.abelian(dim)
        gram = gram_with_signature(rng, dim - 1, 1)
        return scramble(MetricLieAlgebra.make(algebra, gram), rng)
    algebra = rotation_algebra(rng, dim)
    p = algebra.derived_subalgebra().dim // 2
    k = dim - 2 * p
    gram = linalg.zeros(dim, dim)
    S_block = gram_with_signature(rng, k - 1, 1) if k > 1 else [[-ONE]]
    for i in range(k):
        for j in range(k):
            gram[i][j] = S_block[i][j]
    for plane in range(p):
        weight = Fraction(rng.randint(1, 3))
        gram[k + 2 * plane][k + 2 * plane] = weight
        gram[k + 2 * plane + 1][k + 2 * plane + 1] = weight
    return scramble(MetricLieAlgebra.make(algebra, gram), rng)


def class_c_instance(rng: random.Random, dim: int, degenerate: bool) -> MetricLieAlgebra:
    """Class-C algebra with a metric whose restriction to the derived ideal
    is degenerate (1-dimensional radical) or nondegenerate, by construction."""
    algebra = class_c_algebra(rng, dim)
    n = dim
    while True:
        gram = linalg.zeros(n, n)
        if degenerate:
            # <u_1, u_1> = 0 is the radical direction; <t, u_1> = 1 rescues
            # ambient nondegeneracy (determinant is -product of the others).
            gram[0][0] = rational(rng)
            gram[0][1] = gram[1][0] = ONE
            for j in range(2, n):
                w = rational(rng)
                gram[0][j] = gram[j][0] = w
                gram[j][j] = rational(rng, zero_ok=False)
        else:
            gram[0][0] = rational(rng)
            for j in range(1, n):
                w = rational(rng)
                gram[0][j] = gram[j][0] = w
                gram[j][j] = rational(rng, zero_ok=False)
        if linalg.det(gram) != 0:
            break
    return scramble(MetricLieAlgebra.make(algebra, gram), rng)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepResult:
    name: str
    count: int
    failures: tuple[str, ...]
    notes: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures


def _connection_failures(m: MetricLieAlgebra, tag: str) -> list[str]:
    """Defining identity of the product plus the connection axioms, exactly."""
    failures = []
    n = m.dim
    G = m.gram_rows()
    c = m.algebra.c
    p = levi_civita(m)
    paired = [[linalg.mat_vec(G, list(p.p[i][j])) for j in range(n)] for i in range(n)]

    def pair_with_basis(v, k):
        return sum((v[l] * G[l][k] for l in range(n) if v[l]), ZERO)

    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = 2 * paired[i][j][k]
                rhs = (
                    pair_with_basis(c[i][j], k)
                    - pair_with_basis(c[j][k], i)
                    + pair_with_basis(c[k][i], j)
                )
                if lhs != rhs:
                    failures.append(f"{tag}: defining identity fails at ({i}, {j}, {k})")

    basis = linalg.identity(n)
    for a in range(n):
        L = left_mult(p, basis[a])
        R = right_mult(p, basis[a])
        if not linalg.mat_eq(linalg.mat_sub(L, R), m.algebra.ad(basis[a])):
            failures.append(f"{tag}: L - R != ad for basis vector {a}")
        skew = linalg.mat_add(linalg.mat_mul(linalg.transpose(L), G), linalg.mat_mul(G, L))
        if not linalg.is_zero_mat(skew):
            failures.append(f"{tag}: L_u not skew-symmetric for basis vector {a}")
        for b in range(n):
            torsion = linalg.vec_sub(
                p.product(basis[a], basis[b]), p.product(basis[b], basis[a])
            )
            if torsion != m.algebra.bracket(basis[a], basis[b]):
                failures.append(f"{tag}: torsion-freeness fails at ({a}, {b})")
    return failures


def sweep_connection_axioms(seed: int, count: int, dims=(2, 3, 4, 5)) -> SweepResult:
    rng = random.Random(seed)
    failures: list[str] = []
    for idx in range(count):
        dim = rng.choice(dims)
        m = random_metric_algebra(rng, dim)
        failures += _connection_failures(m, f"instance {idx} (dim {dim})")
    return SweepResult("connection_axioms", count, tuple(failures))


def sweep_theorem1(seed: int, count: int, dims=(2, 3, 4, 5)) -> SweepResult:
    """direct side == structural side on every Lorentzian instance; on flat
    ones additionally the triple Killing identity and even derived dim."""
    rng = random.Random(seed)
    failures: list[str] = []
    flat_count = 0
    for idx in range(count):
        dim = rng.choice(dims)
        if idx % 3 == 0 and dim >= 3:
            m = theorem1_true_instance(rng, dim)
        else:
            m = random_metric_algebra(rng, dim, kind="lorentzian")
        tag = f"instance {idx} (dim {dim})"
        report = theorem1_check(m)
        if not report.equivalent:
            failures.append(f"{tag}: direct {report.direct_side} != structural {report.structural_side}")
        if report.structural_side:
            if report.even_dim_derived is False:
                failures.append(f"{tag}: split holds but derived dimension is odd")
            if report.eq2_verified is False:
                failures.append(f"{tag}: split holds but closed-form product fails")
        if report.flat:
            flat_count += 1
            triple = verify_killing_triple_identity(m)
            if not (triple.all_equal and triple.abelian):
                failures.append(f"{tag}: flat-case Killing triple identity fails")
    return SweepResult("theorem1_equivalence", count, tuple(failures), notes=f"{flat_count} flat instances")


def sweep_theorem2(seed: int, count: int, dims=(2, 3, 4, 5, 6)) -> SweepResult:
    """Flatness-by-curvature == degeneracy-of-restriction on class-C
    instances, both branches forced to appear."""
    rng = random.Random(seed)
    failures: list[str] = []
    n_deg = n_nondeg = 0
    for idx in range(count):
        dim = rng.choice(dims)
        degenerate = idx % 2 == 0
        m = class_c_instance(rng, dim, degenerate)
        report = theorem2_check(m)
        tag = f"instance {idx} (dim {dim})"
        if report.degenerate_restriction != degenerate:
            failures.append(f"{tag}: generator produced the wrong restriction type")
        if not report.equivalent:
            failures.append(
                f"{tag}: flat {report.flat} != degenerate restriction {report.degenerate_restriction}"
            )
        if report.degenerate_restriction:
            n_deg += 1
        else:
            n_nondeg += 1
    return SweepResult(
        "theorem2_equivalence", count, tuple(failures), notes=f"{n_deg} degenerate / {n_nondeg} nondegenerate"
    )


def sweep_gram_scaling(seed: int, count: int, dims=(2, 3, 4, 5)) -> SweepResult:
    """Positive rescaling of the inner product changes neither the product
    constants nor the flatness verdict."""
    rng = random.Random(seed)
    failures: list[str] = []
    for idx in range(count):
        dim = rng.choice(dims)
        m = random_metric_algebra(rng, dim)
        factor = Fraction(rng.randint(1, 5), rng.randint(1, 5))
        scaled = m.scale_gram(factor)
        tag = f"instance {idx} (dim {dim}, factor {factor})"
        if levi_civita(m).p != levi_civita(scaled).p:
            failures.append(f"{tag}: product changed under gram scaling")
        if is_flat(m).flat != is_flat(scaled).flat:
            failures.append(f"{tag}: flatness verdict changed under gram scaling")
    return SweepResult("gram_scaling_invariance", count, tuple(failures))


def run_all(seed: int, count: int) -> list[SweepResult]:
    return [
        sweep_connection_axioms(seed, count),
        sweep_theorem1(seed + 1, count),
        sweep_theorem2(seed + 2, count),
        sweep_gram_scaling(seed + 3, max(10, count // 4)),
    ]
