"""Exact low-dimensional models of the search dynamics.

The full N-dimensional iteration leaves a small subspace invariant.  Two
reductions are built here:

* the (ell+1) x (ell+1) restrictions of the diffusion operator and of the
  full iteration to span{marked basis states, uniform unmarked state};
* the 2-D rotation acting on span{uniform marked state, uniform unmarked
  state}, with rotation angle theta and initial angle alpha given by

      cos(theta) = (N - 2*ell) / N,   sin(theta) = 2*sqrt(ell*(N - ell)) / N,
      cos(alpha) = sqrt(ell / N),     alpha = pi/2 - theta/2.

From the 2-D model the success probability after m iterations is
cos^2(m*theta - alpha) in closed form, which the full simulator must
reproduce; the test suite cross-validates the two routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded, EllOutOfRange, SizeTooSmall
from .fullsim import IterationTrace

# Restricted matrices exist for validation, not production; cap their order.
DEFAULT_MATRIX_CAP = 4097


@dataclass(frozen=True)
class SpectralAngles:
    """Rotation angle theta and initial angle alpha of the 2-D model."""

    theta: float
    alpha: float
    n: int
    ell: int


@dataclass(eq=False)
class Rotation2:
    """2x2 rotation [[cos t, sin t], [-sin t, cos t]]."""

    entries: np.ndarray


@dataclass(eq=False)
class RestrictedMatrix:
    """Dense restriction of an operator to the (ell+1)-dimensional subspace.

    `basis_label` is "diffusion" for the restricted mean-inversion
    reflection and "grover" for the restricted full iteration.
    """

    order: int
    entries: np.ndarray
    basis_label: str


def _validate(n: int, ell: int) -> None:
    if n < 2:
        raise SizeTooSmall(f"database size must be at least 2, got {n}")
    if not 1 <= ell <= n:
        raise EllOutOfRange(f"ell must lie in [1, {n}], got {ell}")


def spectral_angles(n: int, ell: int) -> SpectralAngles:
    """Compute (theta, alpha) for a size-n database with ell marked items.

    theta comes from the two-argument arctangent of
    (2*sqrt(ell*(n-ell)), n-2*ell); an arcsine would pick the wrong branch
    for ell > n/2, where cos(theta) < 0.  alpha = arccos(sqrt(ell/n)).
    """
    _validate(n, ell)
    theta = math.atan2(2.0 * math.sqrt(ell * (n - ell)), n - 2 * ell)
    alpha = math.acos(math.sqrt(ell / n))
    return SpectralAngles(theta=theta, alpha=alpha, n=n, ell=ell)


def reduced_step_matrix(angles: SpectralAngles) -> Rotation2:
    """The 2-D rotation advancing the state by theta per iteration."""
    c, s = math.cos(angles.theta), math.sin(angles.theta)
    return Rotation2(np.array([[c, s], [-s, c]]))


def restricted_diffusion_matrix(n: int, ell: int,
                                cap: int | None = None) -> RestrictedMatrix:
    """Restriction of the mean-inversion reflection to the invariant subspace.

    With respect to the basis (marked states..., uniform unmarked state):
    the top-left ell x ell block is delta_ij - 2/N, the last row and column
    carry -2*sqrt(N-ell)/N, and the corner is 2*ell/N - 1.  Symmetric and
    orthogonal.
    """
    _validate(n, ell)
    order = ell + 1
    max_order = DEFAULT_MATRIX_CAP if cap is None else cap
    if order > max_order:
        raise CapExceeded(
            f"restricted matrix order {order} exceeds the cap of {max_order}")
    a = np.full((order, order), -2.0 / n)
    a[np.diag_indices(order)] += 1.0
    edge = -2.0 * math.sqrt(n - ell) / n
    a[-1, :-1] = edge
    a[:-1, -1] = edge
    a[-1, -1] = 2.0 * ell / n - 1.0
    return RestrictedMatrix(order=order, entries=a, basis_label="diffusion")


def restricted_grover_matrix(n: int, ell: int,
                             cap: int | None = None) -> RestrictedMatrix:
    """Restriction of the full search iteration to the invariant subspace.

    Equals minus the restricted diffusion matrix times diag(-1,...,-1,+1)
    (the restricted oracle reflection): the top-left block is
    delta_ij - 2/N, the last column carries +2*sqrt(N-ell)/N, the last row
    -2*sqrt(N-ell)/N, and the corner is 1 - 2*ell/N.
    """
    _validate(n, ell)
    order = ell + 1
    max_order = DEFAULT_MATRIX_CAP if cap is None else cap
    if order > max_order:
        raise CapExceeded(
            f"restricted matrix order {order} exceeds the cap of {max_order}")
    u = np.full((order, order), -2.0 / n)
    u[np.diag_indices(order)] += 1.0
    edge = 2.0 * math.sqrt(n - ell) / n
    u[:-1, -1] = edge
    u[-1, :-1] = -edge
    u[-1, -1] = 1.0 - 2.0 * ell / n
    return RestrictedMatrix(order=order, entries=u, basis_label="grover")


def success_probability(angles: SpectralAngles, m: int) -> float:
    """Probability of measuring a marked index after m iterations."""
    if m < 0:
        raise ValueError(f"iteration count must be nonnegative, got {m}")
    c = math.cos(m * angles.theta - angles.alpha)
    return c * c


def optimal_iterations(angles: SpectralAngles) -> tuple[int, float]:
    """Iteration count maximizing the success probability, with that probability.

    The continuous maximizer is alpha/theta; of its two integer neighbors
    the one with the larger probability wins (ties go to the smaller count).
    """
    ratio = angles.alpha / angles.theta
    lo = max(0, math.floor(ratio))
    hi = math.ceil(ratio)
    m, p = lo, success_probability(angles, lo)
    if hi != lo:
        p_hi = success_probability(angles, hi)
        if p_hi > p:
            m, p = hi, p_hi
    return m, p


def asymptotic_iterations(n: int, ell: int) -> float:
    """Small-ell/N iteration-count law: (pi/4) * sqrt(n/ell)."""
    return 0.25 * math.pi * math.sqrt(n / ell)


def predicted_trace(angles: SpectralAngles, m_max: int) -> IterationTrace:
    """Closed-form probability trace cos^2(m*theta - alpha) for m = 0..m_max."""
    if m_max < 0:
        raise ValueError(f"m_max must be nonnegative, got {m_max}")
    m = np.arange(m_max + 1)
    probs = np.cos(m * angles.theta - angles.alpha) ** 2
    return IterationTrace(probabilities=probs)


def angles_summary_dict(angles: SpectralAngles) -> dict:
    """JSON-ready summary: angles plus optimal and asymptotic iteration counts."""
    m_opt, p_opt = optimal_iterations(angles)
    return {
        "n": angles.n,
        "ell": angles.ell,
        "theta": angles.theta,
        "alpha": angles.alpha,
        "m_opt": m_opt,
        "p_opt": p_opt,
        "m_asymptotic": asymptotic_iterations(angles.n, angles.ell),
    }


def matrix_csv_text(entries: np.ndarray) -> str:
    """Row-major CSV rendering of a dense matrix with round-trip floats."""
    rows = [",".join(repr(float(x)) for x in row) for row in np.atleast_2d(entries)]
    return "\n".join(rows) + "\n"
