"""Measurements on the cavities and atomic detection"""
import enum
import logging
import math
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from quantumEmergence.exceptions import (
    ImpossibleOutcomeError,
    NormalizationError,
)
from quantumEmergence.quantum.states import (
    CAVITY_BASIS,
    EVOLVED_BASIS,
    ComplexAmplitudeVector,
    check_finite_angle,
    check_theta,
)

###############################################################################
# CONSTANTS
IMPOSSIBLE_OUTCOME_PROBABILITY = 1e-12

PAULI_MATRICES = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

logger = logging.getLogger(__name__)
###############################################################################


class Outcome(enum.IntEnum):
    """Eigenvalue of the cavity observable"""

    PLUS = 1
    MINUS = -1


@dataclass(frozen=True, eq=False)
class CavityObservable:
    """
    Two outcome observable sigma = n . (sx, sy, sz) on the one
    excitation cavity subspace, built from its eigenvectors

        |M+> = cos(theta)|1,0> + e^{i gamma} sin(theta)|0,1>
        |M-> = sin(theta)|1,0> - e^{i gamma} cos(theta)|0,1>

    PARAMETERS
        theta: measurement angle in [0, pi/2] radians
        gamma: relative phase in radians
        m_plus: eigenvector with eigenvalue +1
        m_minus: eigenvector with eigenvalue -1
    """

    theta: float
    gamma: float
    m_plus: ComplexAmplitudeVector
    m_minus: ComplexAmplitudeVector

    @property
    def alpha(self) -> float:
        return math.cos(self.theta)

    @property
    def beta(self) -> float:
        return math.sin(self.theta)

    def eigenvector(self, outcome: Outcome) -> ComplexAmplitudeVector:

        if Outcome(outcome) is Outcome.PLUS:
            return self.m_plus

        return self.m_minus

    @property
    def operator(self) -> np.ndarray:
        """Spectral form |M+><M+| - |M-><M-| in the [C1, C2] basis"""

        plus = self.m_plus.amplitudes
        minus = self.m_minus.amplitudes

        return np.outer(plus, plus.conj()) - np.outer(minus, minus.conj())

    @property
    def bloch_vector(self) -> np.ndarray:
        """
        Unit vector n with sigma = n . (sx, sy, sz), obtained as
        n_k = tr(sigma s_k) / 2 from the operator. For the eigenvectors
        above it equals (sin2t cos g, sin2t sin g, cos2t).
        """

        operator = self.operator

        return np.array(
            [
                np.real(np.trace(operator @ pauli)) / 2
                for pauli in PAULI_MATRICES
            ]
        )


###############################################################################
def build_cavity_observable(theta: float, gamma: float) -> CavityObservable:
    """
    PARAMETERS
        theta: angle in [0, pi/2] radians, alpha = cos(theta),
            beta = sin(theta)
        gamma: phase in radians

    OUTPUTS
        CavityObservable with orthonormal eigenvectors
    """

    theta = check_theta(theta)
    gamma = check_finite_angle("gamma", gamma)

    alpha, beta = math.cos(theta), math.sin(theta)
    phase = np.exp(1j * gamma)

    m_plus = ComplexAmplitudeVector(CAVITY_BASIS, [alpha, phase * beta])
    m_minus = ComplexAmplitudeVector(CAVITY_BASIS, [beta, -phase * alpha])

    return CavityObservable(theta, gamma, m_plus, m_minus)


def which_way_knowledge(theta: float) -> float:
    """
    Which-way knowledge K = |cos 2 theta| available from a measurement
    of the cavity observable: 1 for which-alternative measurements
    (theta = 0, pi/2) and 0 for the quantum eraser (theta = pi/4)
    """

    theta = check_theta(theta)

    return abs(math.cos(2 * theta))


###############################################################################
def _path_by_cavity(state: ComplexAmplitudeVector) -> np.ndarray:
    # rows: atom path 1, 2; columns: cavity C1, C2
    return state.amplitudes_on(EVOLVED_BASIS).reshape(2, len(CAVITY_BASIS))


def measure_cavities(
    state: ComplexAmplitudeVector,
    obs: CavityObservable,
    outcome: Outcome,
) -> Tuple[float, ComplexAmplitudeVector]:
    """
    Projective measurement of obs on the cavities with the atom path
    untouched, i.e, projector 1_path x |M><M|

    PARAMETERS
        state: normalized state over EVOLVED_BASIS
        obs: cavity observable
        outcome: requested eigenvalue, +1 or -1

    OUTPUTS
        probability: Born probability of outcome
        post_state: renormalized projection, global phase as produced
            by the projection
    """

    outcome = Outcome(outcome)
    eigenvector = obs.eigenvector(outcome).amplitudes_on(CAVITY_BASIS)

    amplitudes = _path_by_cavity(state)
    # <M|psi_path> for each atom path
    overlaps = amplitudes @ eigenvector.conj()
    projection = np.outer(overlaps, eigenvector)

    probability = float(np.sum(np.abs(overlaps) ** 2))

    if probability < IMPOSSIBLE_OUTCOME_PROBABILITY:
        raise ImpossibleOutcomeError(int(outcome), probability)

    post_state = ComplexAmplitudeVector(
        EVOLVED_BASIS, projection.reshape(-1) / math.sqrt(probability)
    )

    logger.debug(
        "outcome %+d (theta=%.6g, gamma=%.6g): probability %.12g",
        outcome,
        obs.theta,
        obs.gamma,
        probability,
    )

    return probability, post_state


def outcome_probabilities(
    state: ComplexAmplitudeVector, obs: CavityObservable
) -> Dict[Outcome, float]:
    """Born probabilities of both outcomes, no post-selection"""

    amplitudes = _path_by_cavity(state)
    probabilities = {}

    for outcome in Outcome:

        eigenvector = obs.eigenvector(outcome).amplitudes_on(CAVITY_BASIS)
        overlaps = amplitudes @ eigenvector.conj()
        probabilities[outcome] = float(np.sum(np.abs(overlaps) ** 2))

    return probabilities


def atomic_detection_probs(
    post_state: ComplexAmplitudeVector,
) -> Tuple[float, float]:
    """
    Probabilities of detecting the atom in D1 (path 1) and D2 (path 2)
    after the second beam splitter, summed over cavity states

    OUTPUTS
        (p_D1, p_D2), p_D1 + p_D2 = 1
    """

    if not post_state.physical:
        raise NormalizationError("detection requires a normalized state")

    probabilities = np.abs(_path_by_cavity(post_state)) ** 2
    p_d1, p_d2 = probabilities.sum(axis=1)

    return float(p_d1), float(p_d2)
