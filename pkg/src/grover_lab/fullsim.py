"""Dense N-dimensional state-vector simulation of the search iteration.

One iteration is the composition "flip the sign of every marked amplitude,
then invert all amplitudes about their mean".  Both operators are real
orthogonal, and the initial uniform state is real, so amplitudes are kept
as plain float64 arrays; complex storage would be pure overhead.

The mean inversion is applied as the O(N) update a_i <- 2*mu - a_i rather
than as an N x N matrix, which keeps the memory footprint at one amplitude
array.  No renormalization is ever performed: norm drift is asserted by the
test suite, not corrected, so an accumulation bug stays visible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch
from .instance import SearchInstance

# Default cap on amplitude count (~0.5 GB of float64 at the cap).
DEFAULT_MEMORY_CAP = 2**26


@dataclass(eq=False)
class StateVector:
    """Real amplitudes on the computational basis."""

    amplitudes: np.ndarray

    @property
    def n(self) -> int:
        return int(self.amplitudes.size)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "StateVector":
        return StateVector(self.amplitudes.copy())


@dataclass(eq=False)
class IterationTrace:
    """Per-iteration probability of measuring a marked index.

    `probabilities[m]` is the marked-subspace probability after m
    iterations, for m = 0..m_max.  `amplitudes_final` optionally snapshots
    the state after the last iteration.
    """

    probabilities: np.ndarray
    amplitudes_final: StateVector | None = None

    @property
    def m_max(self) -> int:
        return int(self.probabilities.size) - 1

    def to_json_dict(self) -> dict:
        return {"m_max": self.m_max,
                "probabilities": [float(p) for p in self.probabilities]}

    def to_csv_text(self) -> str:
        """Render as CSV with columns m, probability (round-trip floats)."""
        lines = ["m,probability"]
        lines += [f"{m},{float(p)!r}" for m, p in enumerate(self.probabilities)]
        return "\n".join(lines) + "\n"


def _check_dims(state: StateVector, inst: SearchInstance) -> None:
    if state.n != inst.n:
        raise DimensionMismatch(
            f"state has {state.n} amplitudes but instance size is {inst.n}")


def uniform_state(n: int) -> StateVector:
    """Equal superposition: every amplitude is 1/sqrt(n)."""
    if n < 1:
        raise ValueError(f"state size must be positive, got {n}")
    return StateVector(np.full(n, 1.0 / math.sqrt(n)))


def apply_oracle_reflection(state: StateVector, inst: SearchInstance) -> StateVector:
    """Negate the amplitude at every marked index (exact involution)."""
    _check_dims(state, inst)
    out = state.amplitudes.copy()
    out[inst.marked] *= -1.0
    return StateVector(out)


def apply_average_inversion(state: StateVector) -> StateVector:
    """Invert about the mean: each amplitude a_i becomes 2*mu - a_i."""
    mu = state.amplitudes.mean()
    return StateVector(2.0 * mu - state.amplitudes)


def grover_step(state: StateVector, inst: SearchInstance) -> StateVector:
    """One search iteration: oracle sign flip, then inversion about the mean."""
    _check_dims(state, inst)
    out = state.amplitudes.copy()
    out[inst.marked] *= -1.0
    mu = out.mean()
    np.subtract(2.0 * mu, out, out=out)
    return StateVector(out)


def marked_probability(state: StateVector, inst: SearchInstance) -> float:
    """Sum of squared amplitudes over the marked indices (no clamping)."""
    _check_dims(state, inst)
    return float(np.square(state.amplitudes[inst.marked]).sum())


def evolve(inst: SearchInstance, m_max: int, keep_final: bool = False,
           memory_cap: int | None = None) -> IterationTrace:
    """Iterate the search operator from the uniform state, tracing probability.

    Returns the probability of measuring a marked index after m steps for
    every m = 0..m_max.  Refuses instances larger than `memory_cap`
    amplitudes (default 2**26).
    """
    cap = DEFAULT_MEMORY_CAP if memory_cap is None else memory_cap
    if inst.n > cap:
        raise BudgetExceeded(
            f"instance size {inst.n} exceeds the memory cap of {cap} amplitudes")
    if m_max < 0:
        raise ValueError(f"m_max must be nonnegative, got {m_max}")
    amps = np.full(inst.n, 1.0 / math.sqrt(inst.n))
    marked = inst.marked
    probs = np.empty(m_max + 1)
    probs[0] = np.square(amps[marked]).sum()
    for m in range(1, m_max + 1):
        amps[marked] *= -1.0
        mu = amps.mean()
        np.subtract(2.0 * mu, amps, out=amps)
        probs[m] = np.square(amps[marked]).sum()
    final = StateVector(amps) if keep_final else None
    return IterationTrace(probabilities=probs, amplitudes_final=final)


def _draw_indices(cdf: np.ndarray, rng: np.random.Generator, count: int) -> np.ndarray:
    # Uniforms on (0, 1] skip zero-probability prefixes; a draw landing
    # exactly on a bin edge resolves to the lower index.
    u = 1.0 - rng.random(count)
    idx = cdf.searchsorted(u, side="left")
    return np.minimum(idx, cdf.size - 1)


def sample_measurement(state: StateVector, seed: int, count: int) -> np.ndarray:
    """Draw `count` indices from the distribution p(i) = amplitude_i^2.

    Sampling is inverse-CDF over the cumulative squared amplitudes, driven
    by a Philox generator, so a given seed reproduces the same draws.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    rng = np.random.Generator(np.random.Philox(seed))
    cdf = np.cumsum(np.square(state.amplitudes))
    return _draw_indices(cdf, rng, count)


def orthocomplement_residual(inst: SearchInstance, trials: int, seed: int) -> float:
    """Probe how far the iteration is from -identity off the search plane.

    Vectors orthogonal to every marked basis state and to the uniform
    unmarked superposition (zero-sum combinations of unmarked basis
    vectors) should be exactly negated by one iteration.  Returns the
    largest ||U v + v|| over `trials` random unit probes, or 0.0 when no
    such probe exists (fewer than two unmarked indices).
    """
    if inst.n - inst.ell < 2:
        return 0.0
    rng = np.random.Generator(np.random.Philox(seed))
    unmarked = np.flatnonzero(~inst.mask)
    worst = 0.0
    for _ in range(trials):
        coeffs = rng.standard_normal(unmarked.size)
        coeffs -= coeffs.mean()
        scale = np.linalg.norm(coeffs)
        if scale < 1e-12:
            continue
        v = np.zeros(inst.n)
        v[unmarked] = coeffs / scale
        stepped = grover_step(StateVector(v), inst).amplitudes
        worst = max(worst, float(np.linalg.norm(stepped + v)))
    return worst
