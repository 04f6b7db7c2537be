"""Fine and coarse grained causal models of the interferometer"""
import dataclasses
import enum
import logging
import math
from dataclasses import dataclass
from typing import Dict

import numpy as np
from scipy.stats import entropy

from quantumEmergence.causal import (
    CausalReport,
    Partition,
    StateLabel,
    TransitionMatrix,
    coarse_grain,
    effective_information,
)
from quantumEmergence.exceptions import (
    ImpossibleOutcomeError,
    InvalidParameterError,
)
from quantumEmergence.quantum import (
    CAVITY_BASIS,
    PREPARATION_BASIS,
    CavityObservable,
    ComplexAmplitudeVector,
    Outcome,
    atomic_detection_probs,
    build_cavity_observable,
    build_interferometer_isometry,
    evolve,
    measure_cavities,
)
from quantumEmergence.quantum.states import (
    HALF_PI,
    check_finite_angle,
    check_theta,
)

###############################################################################
# CONSTANTS
WHICH_ALTERNATIVE_THETAS = (0.0, HALF_PI)
ANGLE_TOLERANCE = 1e-12

FINE_SOURCES = (
    StateLabel.from_values(a=1, c1=0, c2=0),
    StateLabel.from_values(a=2, c1=0, c2=0),
)
FINE_TARGETS = (
    StateLabel.from_values(a=1, c1=1, c2=0),
    StateLabel.from_values(a=1, c1=0, c2=1),
    StateLabel.from_values(a=2, c1=1, c2=0),
    StateLabel.from_values(a=2, c1=0, c2=1),
)
COARSE_SOURCES = (
    StateLabel.from_values(a=1, c=0),
    StateLabel.from_values(a=2, c=0),
)
COARSE_TARGETS = (
    StateLabel.from_values(a=1, c=1),
    StateLabel.from_values(a=2, c=1),
)

logger = logging.getLogger(__name__)
###############################################################################


class Branch(enum.Enum):
    """Post-selected outcome of the cavity observable"""

    FRINGES = "fringes"
    ANTI_FRINGES = "anti-fringes"

    @property
    def outcome(self) -> Outcome:

        if self is Branch.FRINGES:
            return Outcome.PLUS

        return Outcome.MINUS

    @property
    def sign(self) -> int:
        return int(self.outcome)

    @classmethod
    def from_text(cls, text: str) -> "Branch":
        """
        Accepts 'fringes', 'anti-fringes', 'anti_fringes', '+1', '1'
        and '-1'
        """

        if isinstance(text, Branch):
            return text

        normalized = str(text).strip().lower().replace("_", "-")

        if normalized in ("fringes", "+1", "1"):
            return cls.FRINGES

        if normalized in ("anti-fringes", "-1"):
            return cls.ANTI_FRINGES

        raise InvalidParameterError(f"unknown branch: {text!r}")


@dataclass(frozen=True)
class ScenarioParams:
    """
    PARAMETERS
        theta: measurement angle in [0, pi/2] radians
        gamma: phase of the cavity observable in radians
        phi: interferometer phase in radians
        branch: fringes (+1) or anti-fringes (-1)
    """

    theta: float
    gamma: float = 0.0
    phi: float = 0.0
    branch: Branch = Branch.FRINGES

    def __post_init__(self):

        object.__setattr__(self, "theta", check_theta(self.theta))
        object.__setattr__(
            self, "gamma", check_finite_angle("gamma", self.gamma)
        )
        object.__setattr__(self, "phi", check_finite_angle("phi", self.phi))
        object.__setattr__(self, "branch", Branch.from_text(self.branch))

    def replace(self, **changes) -> "ScenarioParams":
        return dataclasses.replace(self, **changes)


###############################################################################
def _cavity_state_of(eigenvector: ComplexAmplitudeVector):
    # which-alternative eigenvectors sit on a single cavity basis state
    return max(CAVITY_BASIS, key=eigenvector.probability)


def check_which_alternative(theta: float) -> float:
    """theta snapped to 0 or pi/2 within ANGLE_TOLERANCE"""

    theta = check_theta(theta)

    for which_alternative in WHICH_ALTERNATIVE_THETAS:
        if abs(theta - which_alternative) <= ANGLE_TOLERANCE:
            return which_alternative

    raise InvalidParameterError(
        f"fine grained model needs theta = 0 or pi/2, got {theta}"
    )


def fine_grained_model(
    phi: float, theta: float = 0.0, gamma: float = 0.0
) -> TransitionMatrix:
    """
    Markov chain of the which-path description. The cavities are
    measured in the photon number basis (theta = 0 or pi/2), so both
    c1 and c2 are known, then the atom is detected in D1 or D2.

    PARAMETERS
        phi: interferometer phase in radians
        theta: which-alternative angle, 0 or pi/2
        gamma: observable phase, irrelevant for the outcome statistics

    OUTPUTS
        2x4 TransitionMatrix over FINE_SOURCES -> FINE_TARGETS with
        uniform intervention distribution
    """

    theta = check_which_alternative(theta)
    isometry = build_interferometer_isometry(phi)
    observable = build_cavity_observable(theta, gamma)

    rows = np.zeros((len(FINE_SOURCES), len(FINE_TARGETS)))

    for row_idx, prep in enumerate(PREPARATION_BASIS):

        state = evolve(isometry, prep)

        for outcome in Outcome:

            try:
                probability, post_state = measure_cavities(
                    state, observable, outcome
                )
            except ImpossibleOutcomeError:
                continue

            cavity = _cavity_state_of(observable.eigenvector(outcome))
            n_c1, n_c2 = cavity.photons
            detection = atomic_detection_probs(post_state)

            for atom_path, p_detection in zip((1, 2), detection):

                target = StateLabel.from_values(a=atom_path, c1=n_c1, c2=n_c2)
                column_idx = FINE_TARGETS.index(target)
                rows[row_idx, column_idx] += probability * p_detection

    return TransitionMatrix(FINE_SOURCES, FINE_TARGETS, rows)


def _detection_row(
    state: ComplexAmplitudeVector,
    observable: CavityObservable,
    branch: Branch,
    averaged_branches: bool,
) -> np.ndarray:

    if not averaged_branches:
        _, post_state = measure_cavities(state, observable, branch.outcome)
        return np.array(atomic_detection_probs(post_state))

    # both outcomes weighted by their probability, no post-selection
    row = np.zeros(2)

    for outcome in Outcome:

        try:
            probability, post_state = measure_cavities(
                state, observable, outcome
            )
        except ImpossibleOutcomeError:
            continue

        row += probability * np.array(atomic_detection_probs(post_state))

    return row


def coarse_grained_model(
    params: ScenarioParams, averaged_branches: bool = False
) -> TransitionMatrix:
    """
    Markov chain of the description with a single cavity variable c.
    The cavity observable is measured, the selected branch is kept and
    the atomic detection probabilities are renormalized within it.

    PARAMETERS
        params: theta, gamma, phi and branch
        averaged_branches: mix both branches without post-selection

    OUTPUTS
        2x2 TransitionMatrix over COARSE_SOURCES -> COARSE_TARGETS with
        uniform intervention distribution
    """

    isometry = build_interferometer_isometry(params.phi)
    observable = build_cavity_observable(params.theta, params.gamma)

    rows = [
        _detection_row(
            evolve(isometry, prep),
            observable,
            params.branch,
            averaged_branches,
        )
        for prep in PREPARATION_BASIS
    ]

    return TransitionMatrix(COARSE_SOURCES, COARSE_TARGETS, np.array(rows))


###############################################################################
def fringe_visibility(params: ScenarioParams) -> float:
    """
    Signed visibility V = +-sin(2 theta) cos(phi + gamma) of the
    conditioned fringes, the sign being the branch eigenvalue
    """

    visibility = math.sin(2 * params.theta) * math.cos(
        params.phi + params.gamma
    )

    return params.branch.sign * visibility


def ei_closed_form(params: ScenarioParams) -> float:
    """
    EI of the coarse grained model, 1 - H2((1 + V) / 2) with H2 the
    binary entropy in bits. H2 is symmetric, so both branches agree.
    """

    p_same_port = min(max((1.0 + fringe_visibility(params)) / 2, 0.0), 1.0)

    return 1.0 - float(entropy([p_same_port, 1.0 - p_same_port], base=2))


###############################################################################
def merge_cavity_variables(state: StateLabel) -> StateLabel:
    """(a, c1, c2) -> (a, c = c1 + c2)"""

    return StateLabel.from_values(
        a=state.value("a"), c=state.value("c1") + state.value("c2")
    )


def classical_aggregate(fine_tpm: TransitionMatrix) -> TransitionMatrix:
    """Fine grained model with c1 and c2 merged into c on both axes"""

    partition = Partition.from_functions(
        fine_tpm, merge_cavity_variables, merge_cavity_variables
    )

    return coarse_grain(fine_tpm, partition)


@dataclass(frozen=True)
class EmergenceComparison:
    """
    EI of the fine grained, coarse grained and classically aggregated
    models for one scenario, in bits
    """

    params: ScenarioParams
    ei_fine: float
    ei_coarse: float
    ei_classical_aggregate: float
    reports: Dict[str, CausalReport] = dataclasses.field(
        default_factory=dict, compare=False, repr=False
    )

    @property
    def delta(self) -> float:
        return self.ei_coarse - self.ei_fine

    @property
    def causal_emergence(self) -> bool:
        return self.delta > 0


def emergence_comparison(
    phi: float, params: ScenarioParams, averaged_branches: bool = False
) -> EmergenceComparison:
    """
    PARAMETERS
        phi: interferometer phase of the fine grained model
        params: scenario of the coarse grained model, params.phi = phi

    OUTPUTS
        EmergenceComparison, causal emergence when delta > 0
    """

    phi = check_finite_angle("phi", phi)

    if phi != params.phi:
        raise InvalidParameterError(
            f"phi = {phi} differs from the scenario phase {params.phi}"
        )

    fine_tpm = fine_grained_model(phi)

    reports = {
        "fine": effective_information(fine_tpm),
        "coarse": effective_information(
            coarse_grained_model(params, averaged_branches)
        ),
        "classical_aggregate": effective_information(
            classical_aggregate(fine_tpm)
        ),
    }

    comparison = EmergenceComparison(
        params=params,
        ei_fine=reports["fine"].effective_information,
        ei_coarse=reports["coarse"].effective_information,
        ei_classical_aggregate=(
            reports["classical_aggregate"].effective_information
        ),
        reports=reports,
    )

    logger.info(
        "EI fine %.6g, coarse %.6g, aggregate %.6g bits",
        comparison.ei_fine,
        comparison.ei_coarse,
        comparison.ei_classical_aggregate,
    )

    return comparison

