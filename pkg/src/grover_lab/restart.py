"""Restart-strategy cost model and solver.

Strategy: run j iterations, measure, check the outcome with the oracle,
and start over on failure.  With per-trial success probability
p = cos^2(j*theta - alpha) the expected number of trials to first success
is 1/p (geometric distribution), so the expected total iteration count is

    E(j) = j / cos^2(j*theta - alpha) = j * sec^2(j*theta - alpha).

Setting E'(j) = 0 gives the stationarity condition

    2*j*theta = -cot(j*theta - alpha),

whose relevant root (the local minimum of E below the single-shot optimum
alpha/theta) is found by seeding with the closed-form first-order
approximation j1 = (alpha + sqrt(alpha^2 - 2)) / (2*theta) and iterating

    j_{k+1} = (alpha - arctan(1 / (2*theta*j_k))) / theta

to a fixed point.  When the search space is so small that no interior
stationary point exists (alpha/theta of order one; the iteration then
escapes the positive axis), the continuous model is meaningless and the
integer stop point is taken by direct scan of E over small j instead.

A Monte Carlo harness plays the strategy against the full simulator to
check the 1/p expectation empirically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (NoConvergence, OutOfValidityRegion, SingularCost,
                     SingularCotangent)
from .fullsim import _draw_indices, evolve, marked_probability
from .instance import SearchInstance
from .reduced import SpectralAngles

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class RestartPlan:
    """Solved stop point for the restart strategy.

    `j_continuous` is the stationary point of the continuous cost (or the
    scanned integer when no stationary point exists), `j_integer` the
    cost-minimizing integer stop point, and `residual` the stationarity
    residual at `j_continuous` (NaN where the cotangent is singular).
    """

    j_continuous: float
    j_integer: int
    expected_cost: float
    success_probability_per_trial: float
    residual: float
    iterations_used: int

    def to_json_dict(self) -> dict:
        return {
            "j_continuous": self.j_continuous,
            "j_integer": self.j_integer,
            "expected_cost": self.expected_cost,
            "success_probability_per_trial": self.success_probability_per_trial,
            "residual": self.residual if math.isfinite(self.residual) else None,
            "iterations_used": self.iterations_used,
        }


@dataclass(frozen=True)
class MonteCarloReport:
    """Empirical restart statistics from repeated simulated experiments."""

    trials: int
    mean_trials_to_success: float
    mean_total_iterations: float
    empirical_success_rate: float
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "mean_trials_to_success": self.mean_trials_to_success,
            "mean_total_iterations": self.mean_total_iterations,
            "empirical_success_rate": self.empirical_success_rate,
            "seed": self.seed,
        }


def _cost_terms(angles: SpectralAngles, j: float) -> tuple[float, float]:
    """(expected cost, per-trial probability) sharing one cos^2 evaluation."""
    c = math.cos(j * angles.theta - angles.alpha)
    if abs(c) < 1e-15:
        raise SingularCost(
            f"success probability vanishes at stop point j={j}; cost undefined")
    p = c * c
    return j / p, p


def expected_cost(angles: SpectralAngles, j: float) -> float:
    """Expected total iterations when restarting every j iterations."""
    if j <= 0:
        raise ValueError(f"stop point must be positive, got {j}")
    cost, _ = _cost_terms(angles, j)
    return cost


def stationarity_residual(angles: SpectralAngles, j: float) -> float:
    """2*j*theta + cot(j*theta - alpha); zero exactly at stationary points of E."""
    x = j * angles.theta - angles.alpha
    s = math.sin(x)
    if abs(s) < 1e-15:
        raise SingularCotangent(
            f"cotangent is singular at stop point j={j} (j*theta = alpha)")
    return 2.0 * j * angles.theta + math.cos(x) / s


def first_order_seed(angles: SpectralAngles) -> float:
    """Closed-form first approximation (alpha + sqrt(alpha^2 - 2)) / (2*theta).

    Only defined for alpha^2 >= 2, i.e. ell/N below about 0.0243; callers
    outside that region fall back to alpha / (2*theta).
    """
    disc = angles.alpha * angles.alpha - 2.0
    if disc < 0.0:
        raise OutOfValidityRegion(
            f"alpha^2 = {angles.alpha**2:.6f} < 2: closed-form seed undefined")
    return (angles.alpha + math.sqrt(disc)) / (2.0 * angles.theta)


def _plan_from_root(angles: SpectralAngles, j_root: float, used: int) -> RestartPlan:
    lo = max(1, math.floor(j_root))
    hi = max(lo, math.ceil(j_root))
    best_j, best_cost, best_p = 0, math.inf, 0.0
    failure: SingularCost | None = None
    for cand in sorted({lo, hi}):
        try:
            cost, p = _cost_terms(angles, float(cand))
        except SingularCost as exc:
            failure = exc
            continue
        if cost < best_cost:
            best_j, best_cost, best_p = cand, cost, p
    if not math.isfinite(best_cost):
        raise failure if failure is not None else SingularCost("no finite candidate")
    try:
        residual = stationarity_residual(angles, j_root)
    except SingularCotangent:
        residual = math.nan
    return RestartPlan(
        j_continuous=j_root,
        j_integer=best_j,
        expected_cost=best_cost,
        success_probability_per_trial=best_p,
        residual=residual,
        iterations_used=used,
    )


def refine_stop_point(angles: SpectralAngles, j0: float, tol: float = DEFAULT_TOL,
                      max_iter: int = DEFAULT_MAX_ITER) -> RestartPlan:
    """Refine a stop-point guess to the fixed point of the arctangent map.

    Iterates j <- (alpha - arctan(1/(2*theta*j))) / theta until successive
    iterates differ by at most `tol`.  Raises NoConvergence if the budget
    runs out, or (with `left_domain` set) if an iterate leaves the positive
    axis, which means the continuous cost has no interior stationary point.
    """
    if j0 <= 0:
        raise ValueError(f"initial guess must be positive, got {j0}")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}")
    j = float(j0)
    delta = math.inf
    for used in range(1, max_iter + 1):
        nxt = (angles.alpha - math.atan(1.0 / (2.0 * angles.theta * j))) / angles.theta
        if nxt <= 0.0:
            raise NoConvergence(
                f"iterate left the positive axis after {used} steps "
                f"(no interior stationary point for n={angles.n}, ell={angles.ell})",
                left_domain=True)
        delta = abs(nxt - j)
        j = nxt
        if delta <= tol:
            return _plan_from_root(angles, j, used)
    raise NoConvergence(
        f"no convergence within {max_iter} iterations (last |delta|={delta:.3e})")


def _integer_scan_plan(angles: SpectralAngles) -> RestartPlan:
    """Direct scan of E over small integers; used when no stationary point exists."""
    j_hi = max(2, math.ceil(angles.alpha / angles.theta) + 1)
    best_j, best_cost, best_p = 0, math.inf, 0.0
    for cand in range(1, j_hi + 1):
        try:
            cost, p = _cost_terms(angles, float(cand))
        except SingularCost:
            continue
        if cost < best_cost:
            best_j, best_cost, best_p = cand, cost, p
    if not math.isfinite(best_cost):
        raise SingularCost("every candidate stop point has vanishing probability")
    try:
        residual = stationarity_residual(angles, float(best_j))
    except SingularCotangent:
        residual = math.nan
    return RestartPlan(
        j_continuous=float(best_j),
        j_integer=best_j,
        expected_cost=best_cost,
        success_probability_per_trial=best_p,
        residual=residual,
        iterations_used=0,
    )


def integer_stop_point(angles: SpectralAngles, tol: float = DEFAULT_TOL,
                       max_iter: int = DEFAULT_MAX_ITER) -> RestartPlan:
    """Full pipeline: seed, refine to the stationary point, integerize.

    The seed is the closed form where valid, else alpha/(2*theta) (a safe
    interior point of (0, alpha/theta), clamped to at least 1).  If the
    refinement shows there is no interior stationary point, the plan comes
    from a direct integer scan of E instead; a plain iteration-budget
    failure still raises NoConvergence.
    """
    try:
        seed = first_order_seed(angles)
    except OutOfValidityRegion:
        seed = max(1.0, angles.alpha / (2.0 * angles.theta))
    try:
        return refine_stop_point(angles, seed, tol=tol, max_iter=max_iter)
    except NoConvergence as exc:
        if not exc.left_domain:
            raise
        return _integer_scan_plan(angles)


def simulate_restarts(inst: SearchInstance, j: int, trials: int, seed: int,
                      memory_cap: int | None = None) -> MonteCarloReport:
    """Play the restart strategy `trials` times against the full simulator.

    Each trial repeatedly measures the j-step evolved state until the
    sampled index passes the oracle's membership test, counting trials until
    first success.  The j-step state is deterministic, so it is evolved once
    and only the measurement is re-sampled; this is an optimization with no
    statistical effect.  Trials consume independent Philox streams spawned
    from the report seed, so results do not depend on execution order, and
    means are reduced with compensated summation.
    """
    if j < 1:
        raise ValueError(f"stop point must be at least 1, got {j}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    state = evolve(inst, j, keep_final=True, memory_cap=memory_cap).amplitudes_final
    if marked_probability(state, inst) <= 0.0:
        raise SingularCost(
            "evolved state carries no marked amplitude; restarts cannot terminate")
    cdf = np.cumsum(np.square(state.amplitudes))
    mask = inst.mask
    counts = np.empty(trials, dtype=np.int64)
    batch = 16
    for t, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        rng = np.random.Generator(np.random.Philox(child))
        drawn = 0
        while True:
            hits = mask[_draw_indices(cdf, rng, batch)]
            if hits.any():
                drawn += int(np.argmax(hits)) + 1
                break
            drawn += batch
        counts[t] = drawn
    total_draws = math.fsum(counts)
    mean_trials = total_draws / trials
    return MonteCarloReport(
        trials=trials,
        mean_trials_to_success=mean_trials,
        mean_total_iterations=j * mean_trials,
        empirical_success_rate=trials / total_draws,
        seed=seed,
    )
