"""Effect information, effective information and its coefficients"""
import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy.stats import entropy

from quantumEmergence.causal.tpm import (
    StateLabel,
    TransitionMatrix,
    check_distribution,
)
from quantumEmergence.exceptions import (
    DegenerateModelError,
    InfiniteDivergenceError,
    NormalizationError,
)

logger = logging.getLogger(__name__)


###############################################################################
def shannon_entropy(distribution: Sequence[float]) -> float:
    """Shannon entropy in bits with 0 log 0 = 0"""

    distribution = check_distribution(distribution)

    return float(entropy(distribution, base=2))


def kl_divergence(p: Sequence[float], q: Sequence[float]) -> float:
    """
    Kullback-Leibler divergence D(p||q) = sum p_i log2(p_i / q_i)

    PARAMETERS
        p, q: probability vectors of the same length, support of p
            contained in the support of q

    OUTPUTS
        divergence in bits, non negative
    """

    p = check_distribution(p, "p")
    q = check_distribution(q, "q")

    if p.size != q.size:
        raise NormalizationError(
            f"distributions differ in length: {p.size} != {q.size}"
        )

    return _divergence(p, q)


def _divergence(p: np.ndarray, q: np.ndarray) -> float:
    # p and q already validated, only the supports are compared

    support_mismatch = (p > 0) & (q == 0)

    if np.any(support_mismatch):
        raise InfiniteDivergenceError(
            "p > 0 where q = 0 at indices "
            f"{np.flatnonzero(support_mismatch).tolist()}"
        )

    divergence = float(entropy(p, q, base=2))

    return max(divergence, 0.0)


###############################################################################
def effect_information(tpm: TransitionMatrix, s0: StateLabel) -> float:
    """
    Ei(s0) = D(p(s_F | do(s0)) || p(s_F)), p(s_F) being the final
    state distribution under the intervention distribution of tpm
    """

    return _divergence(tpm.row(s0), tpm.marginal_final())


def _row_entropies(tpm: TransitionMatrix) -> np.ndarray:
    return np.array([float(entropy(row, base=2)) for row in tpm.rows])


def _log2_targets(tpm: TransitionMatrix) -> float:

    if tpm.number_of_targets < 2:
        raise DegenerateModelError(
            "determinism and degeneracy need at least two target states"
        )

    return math.log2(tpm.number_of_targets)


def determinism_coefficient(tpm: TransitionMatrix) -> float:
    """
    1 - <H(p(s_F | do(s0)))> / log2 n, the average taken over the
    intervention distribution and n the number of target states
    """

    log2_targets = _log2_targets(tpm)
    average_row_entropy = float(tpm.do_distribution @ _row_entropies(tpm))

    return 1.0 - average_row_entropy / log2_targets


def degeneracy_coefficient(tpm: TransitionMatrix) -> float:
    """1 - H(p(s_F)) / log2 n"""

    log2_targets = _log2_targets(tpm)
    marginal_entropy = float(entropy(tpm.marginal_final(), base=2))

    return 1.0 - marginal_entropy / log2_targets


###############################################################################
@dataclass(frozen=True, eq=False)
class CausalReport:
    """
    Effect and effective information of a causal model, in bits

    PARAMETERS
        source_states: intervention states, order of ei_per_state
        target_states: final states, order of marginal_final
        ei_per_state: Ei(s0) for every source state
        effective_information: EI = sum p(do(s0)) Ei(s0)
        determinism: determinism coefficient, nan if < 2 targets
        degeneracy: degeneracy coefficient, nan if < 2 targets
        marginal_final: p(s_F)
        do_distribution: p(do(s0))
    """

    source_states: Tuple[StateLabel, ...]
    target_states: Tuple[StateLabel, ...]
    ei_per_state: Tuple[float, ...]
    effective_information: float
    determinism: float
    degeneracy: float
    marginal_final: Tuple[float, ...]
    do_distribution: Tuple[float, ...]

    @property
    def effectiveness(self) -> float:
        """EI / log2 n = determinism - degeneracy"""
        return self.determinism - self.degeneracy

    def effect_information_of(self, s0: StateLabel) -> float:
        return self.ei_per_state[self.source_states.index(s0)]


def effective_information(tpm: TransitionMatrix) -> CausalReport:
    """
    PARAMETERS
        tpm: validated transition matrix

    OUTPUTS
        CausalReport with Ei per source state, EI and the
        determinism and degeneracy coefficients
    """

    marginal_final = tpm.marginal_final()

    ei_per_state = tuple(
        _divergence(row, marginal_final) for row in tpm.rows
    )

    ei_total = float(np.dot(tpm.do_distribution, ei_per_state))

    if tpm.number_of_targets >= 2:
        determinism = determinism_coefficient(tpm)
        degeneracy = degeneracy_coefficient(tpm)
    else:
        logger.debug("single target state, coefficients undefined")
        determinism = degeneracy = math.nan

    logger.debug(
        "EI = %.12g bits, determinism %.12g, degeneracy %.12g",
        ei_total,
        determinism,
        degeneracy,
    )

    return CausalReport(
        source_states=tpm.source_states,
        target_states=tpm.target_states,
        ei_per_state=ei_per_state,
        effective_information=ei_total,
        determinism=determinism,
        degeneracy=degeneracy,
        marginal_final=tuple(float(value) for value in marginal_final),
        do_distribution=tuple(float(value) for value in tpm.do_distribution),
    )
