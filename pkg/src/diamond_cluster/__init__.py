"""Exact entanglement dynamics of the four-spin Ising-Heisenberg diamond cluster."""

from .closed_form import (
    ClosedFormTerms,
    concurrence_ab_closed,
    entropy_ab12_closed,
    lambda_pm_spin_a,
    lambda_pm_spin_1,
    predict_extrema,
    rho_ab_closed,
)
from .measures import (
    Bipartition,
    concurrence_mixed,
    concurrence_pure,
    eof_from_concurrence,
    eof_two_qubit,
    reduce_state,
    vn_entropy,
)
from .model import (
    ClusterParams,
    analytic_eigensystem,
    build_hamiltonian,
    decompose,
    evolve_analytic,
    evolve_oracle,
    initial_plus_x,
)
from .sweep import MeasureSeries, SweepConfig, reproduce_figure, run_sweep
from .verify import run_battery

__all__ = [
    "Bipartition",
    "ClosedFormTerms",
    "ClusterParams",
    "MeasureSeries",
    "SweepConfig",
    "analytic_eigensystem",
    "build_hamiltonian",
    "concurrence_ab_closed",
    "concurrence_mixed",
    "concurrence_pure",
    "decompose",
    "entropy_ab12_closed",
    "eof_from_concurrence",
    "eof_two_qubit",
    "evolve_analytic",
    "evolve_oracle",
    "initial_plus_x",
    "lambda_pm_spin_a",
    "lambda_pm_spin_1",
    "predict_extrema",
    "reduce_state",
    "reproduce_figure",
    "rho_ab_closed",
    "run_battery",
    "run_sweep",
    "vn_entropy",
]
