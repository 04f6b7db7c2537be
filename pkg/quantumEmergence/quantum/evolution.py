"""Evolution of the atom through the interferometer and both cavities"""
import logging
from dataclasses import dataclass

import numpy as np

from quantumEmergence.exceptions import DomainError, NormalizationError
from quantumEmergence.quantum.states import (
    EVOLVED_BASIS,
    NORMALIZATION_TOLERANCE,
    PREPARATION_BASIS,
    BasisLabel,
    ComplexAmplitudeVector,
    check_finite_angle,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EvolutionIsometry:
    """
    End-to-end map from the preparation space |a, 0_C1, 0_C2> to the
    state after the second beam splitter and before atomic detection.
    The atomic excitation is left out since it factors throughout.

    PARAMETERS
        phi: relative phase between both arms in radians
        matrix: 4x2 complex matrix, rows follow EVOLVED_BASIS and
            columns follow PREPARATION_BASIS
    """

    phi: float
    matrix: np.ndarray

    def __post_init__(self):

        matrix = np.array(self.matrix, dtype=complex)
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

        expected_shape = (len(EVOLVED_BASIS), len(PREPARATION_BASIS))

        if matrix.shape != expected_shape:
            raise NormalizationError(
                f"isometry must be {expected_shape}, got {matrix.shape}"
            )

        gram = matrix.conj().T @ matrix

        if not np.allclose(
            gram, np.eye(matrix.shape[1]), rtol=0, atol=NORMALIZATION_TOLERANCE
        ):
            raise NormalizationError(
                f"columns are not orthonormal, U^dagger U = {gram}"
            )

    def column(self, prep: BasisLabel) -> np.ndarray:
        """Image of a preparation label"""

        if prep not in PREPARATION_BASIS:
            raise DomainError(
                f"{prep} is not a preparation label, cavities must be empty"
            )

        return self.matrix[:, PREPARATION_BASIS.index(prep)]


###############################################################################
def build_interferometer_isometry(phi: float) -> EvolutionIsometry:
    """
    Isometry of the atomic interferometer with a pi pulse in each
    cavity. Column for path 1:

        1/2 [-|1>(e^{i phi}|1,0> + |0,1>) + i|2>(e^{i phi}|1,0> - |0,1>)]

    column for path 2:

        1/2 [i|1>(-e^{i phi}|1,0> + |0,1>) - |2>(e^{i phi}|1,0> + |0,1>)]

    PARAMETERS
        phi: phase in radians

    OUTPUTS
        EvolutionIsometry with rows ordered as EVOLVED_BASIS
    """

    phi = check_finite_angle("phi", phi)
    phase = np.exp(1j * phi)

    path_1 = 0.5 * np.array([-phase, -1.0, 1j * phase, -1j])
    path_2 = 0.5 * np.array([-1j * phase, 1j, -phase, -1.0])

    return EvolutionIsometry(phi=phi, matrix=np.column_stack([path_1, path_2]))


def evolve(
    iso: EvolutionIsometry, prep: BasisLabel
) -> ComplexAmplitudeVector:
    """
    PARAMETERS
        iso: interferometer isometry
        prep: preparation label, cavity_config must be VAC

    OUTPUTS
        normalized state over EVOLVED_BASIS
    """

    if not prep.is_preparation:
        raise DomainError(
            f"cannot evolve {prep}: preparation requires empty cavities"
        )

    state = ComplexAmplitudeVector(EVOLVED_BASIS, iso.column(prep))
    logger.debug("evolved %s with phi=%.6g: %r", prep, iso.phi, state)

    return state
