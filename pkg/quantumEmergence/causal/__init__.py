"""Classical causal models: transition matrices and effective information"""
from quantumEmergence.causal.coarse import coarse_grain
from quantumEmergence.causal.information import (
    CausalReport,
    degeneracy_coefficient,
    determinism_coefficient,
    effect_information,
    effective_information,
    kl_divergence,
    shannon_entropy,
)
from quantumEmergence.causal.tpm import (
    Partition,
    StateLabel,
    TransitionMatrix,
    uniform_distribution,
)
