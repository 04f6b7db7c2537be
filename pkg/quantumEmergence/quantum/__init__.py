"""Quantum states, interferometer evolution and cavity measurements"""
from quantumEmergence.quantum.evolution import (
    EvolutionIsometry,
    build_interferometer_isometry,
    evolve,
)
from quantumEmergence.quantum.measurement import (
    CavityObservable,
    Outcome,
    atomic_detection_probs,
    build_cavity_observable,
    measure_cavities,
    outcome_probabilities,
    which_way_knowledge,
)
from quantumEmergence.quantum.states import (
    CAVITY_BASIS,
    EVOLVED_BASIS,
    PREPARATION_BASIS,
    BasisLabel,
    CavityConfig,
    ComplexAmplitudeVector,
)
