"""Numerical probe of geodesic completeness.

For a left-invariant metric the geodesic through the identity is determined
by its velocity curve in the Lie algebra, which satisfies v' = -(v . v) with
the Levi-Civita product; extendability of that ODE to all time is exactly
geodesic completeness (see README for the reduction).  This module
integrates the velocity equation with an adaptive embedded Runge-Kutta pair
and flags finite-time blow-up.  Floats only: the exact kernel is never used
inside the stepper.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidToleranceError, NonPositiveProductError
from .metric import LeviCivitaProduct, MetricLieAlgebra, levi_civita

BLOWUP_NORM = 1e12
MIN_STEP = 1e-14

REACHED_HORIZON = "reached_horizon"
BLOW_UP_DETECTED = "blow_up_detected"
STEP_UNDERFLOW = "step_underflow"

# Fehlberg 4(5) tableau; the 5th-order solution is propagated.
_RK_A = (
    (),
    (1 / 4,),
    (3 / 32, 9 / 32),
    (1932 / 2197, -7200 / 2197, 7296 / 2197),
    (439 / 216, -8.0, 3680 / 513, -845 / 4104),
    (-8 / 27, 2.0, -3544 / 2565, 1859 / 4104, -11 / 40),
)
_RK_B5 = (16 / 135, 0.0, 6656 / 12825, 28561 / 56430, -9 / 50, 2 / 55)
_RK_B4 = (25 / 216, 0.0, 1408 / 2565, 2197 / 4104, -1 / 5, 0.0)


def product_as_floats(p: LeviCivitaProduct) -> np.ndarray:
    """One-time conversion of the exact product constants to a float tensor."""
    return np.array(
        [[[float(x) for x in row] for row in plane] for plane in p.p], dtype=float
    )


def euler_arnold_rhs(p_float: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Velocity equation right-hand side: -(v . v) by bilinear evaluation."""
    return -np.einsum("i,j,ijk->k", v, v, p_float)


@dataclass(frozen=True)
class TrajectorySample:
    t: float
    v: tuple[float, ...]
    norm: float     # Euclidean norm, the blow-up monitor
    energy: float   # <v, v> under the metric; conserved along exact geodesics


@dataclass(frozen=True)
class GeodesicTrajectory:
    samples: tuple[TrajectorySample, ...]
    outcome: str  # REACHED_HORIZON | BLOW_UP_DETECTED | STEP_UNDERFLOW
    blowup_time: float | None = None
    rhs_evaluations: int = field(default=0, compare=False)

    @property
    def final(self) -> TrajectorySample:
        return self.samples[-1]

    def energy_drift(self) -> float:
        e0 = self.samples[0].energy
        return max(abs(s.energy - e0) for s in self.samples)


def integrate(
    m: MetricLieAlgebra,
    v0: Sequence[float],
    t_max: float,
    rel_tol: float = 1e-9,
) -> GeodesicTrajectory:
    """Adaptive RKF45 integration of v' = -(v . v) from v(0) = v0.

    Blow-up is declared when the velocity norm exceeds BLOWUP_NORM, or when
    the step size collapses below MIN_STEP while the norm has grown by a
    factor >= 1e3 (a collapsing step without growth is reported as
    STEP_UNDERFLOW instead).  The final accepted time is the blow-up
    estimate.
    """
    if not (1e-14 < rel_tol < 1e-2):
        raise InvalidToleranceError(f"rel_tol {rel_tol} outside (1e-14, 1e-2)")
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    P = product_as_floats(levi_civita(m))
    G = np.array([[float(x) for x in row] for row in m.gram], dtype=float)

    v = np.array([float(x) for x in v0], dtype=float)
    if v.shape != (m.dim,):
        raise ValueError(f"initial velocity must have {m.dim} components")
    t = 0.0
    evals = 0

    def sample(tc: float, vc: np.ndarray) -> TrajectorySample:
        return TrajectorySample(
            t=tc,
            v=tuple(float(x) for x in vc),
            norm=float(np.linalg.norm(vc)),
            energy=float(vc @ G @ vc),
        )

    samples = [sample(t, v)]
    norm0 = max(1.0, float(np.linalg.norm(v)))

    f0 = euler_arnold_rhs(P, v)
    evals += 1
    h = min(0.1, t_max / 10.0, rel_tol ** 0.2 / (1.0 + float(np.linalg.norm(f0))))

    while t < t_max:
        h = min(h, t_max - t)
        ks = [euler_arnold_rhs(P, v)]
        evals += 1
        for stage in range(1, 6):
            vs = v + h * sum(a * k for a, k in zip(_RK_A[stage], ks))
            ks.append(euler_arnold_rhs(P, vs))
            evals += 1
        v5 = v + h * sum(b * k for b, k in zip(_RK_B5, ks))
        v4 = v + h * sum(b * k for b, k in zip(_RK_B4, ks))
        err = float(np.linalg.norm(v5 - v4))
        scale = rel_tol * (1.0 + float(np.linalg.norm(v)))

        if np.isfinite(err) and err <= scale:
            t += h
            v = v5
            if not np.isfinite(v).all():
                return GeodesicTrajectory(tuple(samples), BLOW_UP_DETECTED, samples[-1].t, evals)
            samples.append(sample(t, v))
            if np.linalg.norm(v) > BLOWUP_NORM:
                return GeodesicTrajectory(tuple(samples), BLOW_UP_DETECTED, t, evals)

        if not np.isfinite(err) or err > 0:
            ratio = (scale / err) ** 0.2 if np.isfinite(err) and err > 0 else 0.2
            h *= min(5.0, max(0.2, 0.9 * ratio))
        else:
            h *= 5.0
        if h < MIN_STEP and t < t_max:
            if float(np.linalg.norm(v)) > 1e3 * norm0:
                return GeodesicTrajectory(tuple(samples), BLOW_UP_DETECTED, t, evals)
            return GeodesicTrajectory(tuple(samples), STEP_UNDERFLOW, None, evals)

    return GeodesicTrajectory(tuple(samples), REACHED_HORIZON, None, evals)


def blowup_time_classc(alpha, scale) -> float:
    """Exact blow-up time of f' = alpha f^2, f(0) = scale: geodesics along
    the null transversal d of a flat class-C metric satisfy exactly this
    scalar Riccati equation."""
    product = float(alpha) * float(scale)
    if product <= 0:
        raise NonPositiveProductError("no finite blow-up on this ray (alpha * scale <= 0)")
    return 1.0 / product


def write_csv(trajectory: GeodesicTrajectory, path) -> None:
    """Export samples as CSV with columns t, v_1..v_n, norm."""
    n = len(trajectory.samples[0].v)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t"] + [f"v_{i + 1}" for i in range(n)] + ["norm"])
        for s in trajectory.samples:
            writer.writerow([repr(s.t)] + [repr(x) for x in s.v] + [repr(s.norm)])
