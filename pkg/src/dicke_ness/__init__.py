"""Exact steady state and entanglement diagnostics of a coherently driven,
collectively decaying ensemble of two-level atoms."""
from .collective_spin import (
    CouplingScheme,
    DickeBasis,
    cg_table,
    clebsch_gordan,
    collective_operator_matrix,
    ladder_coefficient,
    log_binomial,
    log_ladder_coefficient,
)
from .density import check_density_matrix, trace_distance
from .entanglement import (
    EntropyRecord,
    entropy_derivative,
    lieb_quantity,
    relative_entropy_multipartite,
    von_neumann_entropy,
)
from .errors import (
    DegeneracyError,
    DomainError,
    IntegrationError,
    NumericRangeError,
    PositivityError,
    ResourceError,
)
from .reduction import ReducedState, reduce
from .steady_state import (
    DriveParams,
    Trajectory,
    evolve,
    exact_steady_state,
    liouvillian_matrix,
    phase_averaged_steady_state,
    relaxation_time,
    steady_state_via_nullspace,
)
from .sweep import SweepResult, SweepSpec, run_sweep

__version__ = "0.1.0"
