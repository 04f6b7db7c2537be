"""State labels and normalized amplitude vectors of the interferometer"""
import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Hashable, Tuple

import numpy as np

from quantumEmergence.exceptions import (
    DomainError,
    InvalidParameterError,
    NormalizationError,
)

###############################################################################
# CONSTANTS
NORMALIZATION_TOLERANCE = 1e-12
HALF_PI = math.pi / 2

logger = logging.getLogger(__name__)
###############################################################################


class CavityConfig(enum.Enum):
    """Photon numbers (n_C1, n_C2) in the one excitation subspace"""

    VAC = (0, 0)
    C1 = (1, 0)
    C2 = (0, 1)

    @property
    def photons(self) -> Tuple[int, int]:
        return self.value


@dataclass(frozen=True)
class BasisLabel:
    """
    Label of a basis state |atom_path> |n_C1, n_C2>

    PARAMETERS
        atom_path: interferometer port, 1 or 2
        cavity_config: photon numbers of both cavities
    """

    atom_path: int
    cavity_config: CavityConfig

    def __post_init__(self):

        if self.atom_path not in (1, 2):
            raise DomainError(f"atom path must be 1 or 2: {self.atom_path}")

        if not isinstance(self.cavity_config, CavityConfig):
            raise DomainError(
                f"unknown cavity configuration: {self.cavity_config!r}"
            )

    @property
    def is_preparation(self) -> bool:
        """Preparation labels carry empty cavities"""
        return self.cavity_config is CavityConfig.VAC

    def __str__(self) -> str:
        n_c1, n_c2 = self.cavity_config.photons
        return f"|{self.atom_path}_a,{n_c1}_C1,{n_c2}_C2>"


###############################################################################
PREPARATION_BASIS = (
    BasisLabel(1, CavityConfig.VAC),
    BasisLabel(2, CavityConfig.VAC),
)
# order of the rows of the evolution isometry
EVOLVED_BASIS = (
    BasisLabel(1, CavityConfig.C1),
    BasisLabel(1, CavityConfig.C2),
    BasisLabel(2, CavityConfig.C1),
    BasisLabel(2, CavityConfig.C2),
)
CAVITY_BASIS = (CavityConfig.C1, CavityConfig.C2)
###############################################################################


@dataclass(frozen=True, eq=False)
class ComplexAmplitudeVector:
    """
    Complex amplitudes over an ordered, labeled finite basis.
    The amplitudes array is copied and made read only on construction.

    PARAMETERS
        basis: distinct labels, one per amplitude
        amplitudes: complex amplitudes
        physical: if True, the squared norm must be 1 within
            NORMALIZATION_TOLERANCE
    """

    basis: Tuple[Hashable, ...]
    amplitudes: np.ndarray
    physical: bool = field(default=True)

    def __post_init__(self):

        basis = tuple(self.basis)
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        amplitudes.setflags(write=False)

        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "amplitudes", amplitudes)

        if len(set(basis)) != len(basis):
            raise DomainError(f"basis labels are not distinct: {basis}")

        if amplitudes.size != len(basis):
            raise DomainError(
                f"{amplitudes.size} amplitudes for {len(basis)} labels"
            )

        if not np.all(np.isfinite(amplitudes)):
            raise NormalizationError("amplitudes must be finite")

        if self.physical:

            squared_norm = self.squared_norm()

            if abs(squared_norm - 1.0) > NORMALIZATION_TOLERANCE:
                raise NormalizationError(
                    f"state is not normalized: |psi|^2 = {squared_norm!r}"
                )

    ###########################################################################
    def squared_norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def index(self, label: Hashable) -> int:

        try:
            return self.basis.index(label)
        except ValueError as error:
            raise DomainError(f"{label} is not in the basis") from error

    def amplitude(self, label: Hashable) -> complex:
        return complex(self.amplitudes[self.index(label)])

    def probability(self, label: Hashable) -> float:
        return abs(self.amplitude(label)) ** 2

    def inner(self, other: "ComplexAmplitudeVector") -> complex:
        """
        Inner product <self|other>, both vectors on the same basis
        """

        if self.basis != other.basis:
            raise DomainError("inner product of vectors on different bases")

        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def amplitudes_on(self, basis: Tuple[Hashable, ...]) -> np.ndarray:
        """
        Amplitudes reordered to follow basis. Labels of this vector
        missing from basis raise DomainError.

        PARAMETERS
            basis: target ordering, same label set as self.basis

        OUTPUTS
            array of amplitudes in the order of basis
        """

        if set(basis) != set(self.basis):
            raise DomainError(
                "vector basis does not match the requested ordering"
            )

        return np.array([self.amplitude(label) for label in basis])

    def scaled(self, factor: complex) -> "ComplexAmplitudeVector":
        """Multiply by a scalar, e.g, a global phase"""

        return ComplexAmplitudeVector(
            self.basis, factor * self.amplitudes, physical=self.physical
        )

    def normalized(self) -> "ComplexAmplitudeVector":

        norm = math.sqrt(self.squared_norm())

        if norm < NORMALIZATION_TOLERANCE:
            raise NormalizationError("cannot normalize a null vector")

        return ComplexAmplitudeVector(self.basis, self.amplitudes / norm)

    def __repr__(self) -> str:

        terms = ", ".join(
            f"{label}: {amplitude:.6g}"
            for label, amplitude in zip(self.basis, self.amplitudes)
        )

        return f"ComplexAmplitudeVector({terms})"


###############################################################################
def check_finite_angle(name: str, value: float) -> float:
    """
    Convert an angle in radians to float and reject nan or inf
    """

    try:
        value = float(value)
    except (TypeError, ValueError) as error:
        message = f"{name} is not a number: {value!r}"
        raise InvalidParameterError(message) from error

    if not math.isfinite(value):
        raise InvalidParameterError(f"{name} must be finite: {value}")

    return value


def check_theta(theta: float) -> float:
    """Measurement angle theta must lie in [0, pi/2] radians"""

    theta = check_finite_angle("theta", theta)

    if not 0.0 <= theta <= HALF_PI:
        raise InvalidParameterError(
            f"theta must be in [0, pi/2] radians: {theta}"
        )

    return theta
