"""Causal models built from interferometer interventions"""
from quantumEmergence.experiments.models import (
    COARSE_SOURCES,
    COARSE_TARGETS,
    FINE_SOURCES,
    FINE_TARGETS,
    Branch,
    EmergenceComparison,
    ScenarioParams,
    check_which_alternative,
    classical_aggregate,
    coarse_grained_model,
    ei_closed_form,
    emergence_comparison,
    fine_grained_model,
    fringe_visibility,
)
from quantumEmergence.experiments.sweep import (
    DEFAULT_PHI_LIST,
    DEFAULT_THETA_STEPS,
    EmergenceSweep,
    SweepRow,
    build_theta_grid,
    k_curve,
    sweep_ei,
)
