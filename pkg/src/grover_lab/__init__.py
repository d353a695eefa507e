"""Multiobject amplitude-amplification search: simulation, closed forms, restarts.

The library has four layers:

* `instance` — search-problem definition and the classical query baseline;
* `fullsim` — dense N-dimensional state-vector simulation of the iteration;
* `reduced` — exact low-dimensional models and the closed-form probability
  cos^2(m*theta - alpha), optimal iteration counts, and asymptotics;
* `restart` — the run-j-then-restart cost model E(j) = j*sec^2(j*theta-alpha),
  its stationary-point solver, and a Monte Carlo validation harness.

A CLI front door lives in `grover_lab.cli` (installed as `grover-lab`).
"""

from .errors import (BudgetExceeded, CapExceeded, DimensionMismatch,
                     EllOutOfRange, EmptyMarkedSet, GroverLabError,
                     IndexOutOfRange, NoConvergence, OutOfValidityRegion,
                     SingularCost, SingularCotangent, SizeTooSmall)
from .fullsim import (DEFAULT_MEMORY_CAP, IterationTrace, StateVector,
                      apply_average_inversion, apply_oracle_reflection,
                      evolve, grover_step, marked_probability,
                      orthocomplement_residual, sample_measurement,
                      uniform_state)
from .instance import (SearchInstance, classical_expected_queries,
                       new_instance, oracle_eval, random_instance)
from .reduced import (DEFAULT_MATRIX_CAP, RestrictedMatrix, Rotation2,
                      SpectralAngles, angles_summary_dict,
                      asymptotic_iterations, matrix_csv_text,
                      optimal_iterations, predicted_trace,
                      reduced_step_matrix, restricted_diffusion_matrix,
                      restricted_grover_matrix, spectral_angles,
                      success_probability)
from .restart import (MonteCarloReport, RestartPlan, expected_cost,
                      first_order_seed, integer_stop_point, refine_stop_point,
                      simulate_restarts, stationarity_residual)

__version__ = "0.1.0"
