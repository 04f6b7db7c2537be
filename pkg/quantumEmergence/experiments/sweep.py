"""Sweep effective information over the measurement angle and phase"""
import itertools
import logging
import math
import multiprocessing as mp
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from quantumEmergence.causal import effective_information
from quantumEmergence.exceptions import (
    ImpossibleOutcomeError,
    InvalidParameterError,
)
from quantumEmergence.experiments.models import (
    COARSE_SOURCES,
    Branch,
    ScenarioParams,
    coarse_grained_model,
)
from quantumEmergence.quantum import which_way_knowledge
from quantumEmergence.quantum.states import (
    HALF_PI,
    check_finite_angle,
    check_theta,
)

###############################################################################
# CONSTANTS
DEFAULT_THETA_STEPS = 181
DEFAULT_PHI_LIST = (0.0, math.pi / 8, math.pi / 4, 3 * math.pi / 8, HALF_PI)

logger = logging.getLogger(__name__)
###############################################################################


@dataclass(frozen=True)
class SweepRow:
    """
    One (theta, phi) point of a sweep. Numeric fields are None when the
    selected branch is impossible for some preparation.
    """

    theta: float
    phi: float
    gamma: float
    branch: Branch
    ei_bits: Optional[float]
    determinism: Optional[float]
    degeneracy: Optional[float]
    k_sigma: float
    ei_first_state: Optional[float] = None

    @property
    def applicable(self) -> bool:
        return self.ei_bits is not None


def build_theta_grid(
    steps: int = DEFAULT_THETA_STEPS, theta_max: float = HALF_PI
) -> np.ndarray:
    """
    Evenly spaced angles from 0 to theta_max, both included. The
    default grid has a pi/360 step and contains pi/4.

    PARAMETERS
        steps: number of angles, 0 gives an empty grid
        theta_max: last angle, in [0, pi/2]
    """

    if int(steps) != steps or steps < 0:
        raise InvalidParameterError(f"theta steps must be >= 0: {steps}")

    theta_max = check_theta(theta_max)

    if steps == 1:
        return np.array([0.0])

    return np.linspace(0.0, theta_max, int(steps))


###############################################################################
class EmergenceSweep:
    """Compute the coarse grained causal report on grid points"""

    def __init__(
        self,
        gamma: float = 0.0,
        branch: Branch = Branch.FRINGES,
        averaged_branches: bool = False,
    ):
        """
        PARAMETERS
            gamma: phase of the cavity observable in radians
            branch: post-selected branch
            averaged_branches: mix both branches without post-selection
        """

        self.gamma = check_finite_angle("gamma", gamma)
        self.branch = Branch.from_text(branch)
        self.averaged_branches = averaged_branches

    ###########################################################################
    def compute_point(self, point: Tuple[float, float]) -> SweepRow:
        """
        PARAMETERS
            point: (theta, phi) in radians

        OUTPUTS
            SweepRow, not applicable if the branch cannot occur
        """

        theta, phi = point
        params = ScenarioParams(theta, self.gamma, phi, self.branch)
        k_sigma = which_way_knowledge(params.theta)

        try:
            tpm = coarse_grained_model(params, self.averaged_branches)

        except ImpossibleOutcomeError as error:

            logger.warning(
                "theta=%.6g phi=%.6g not applicable: %s", theta, phi, error
            )

            return SweepRow(
                params.theta,
                params.phi,
                params.gamma,
                params.branch,
                None,
                None,
                None,
                k_sigma,
            )

        report = effective_information(tpm)

        logger.debug(
            "theta=%.6g phi=%.6g EI=%.12g",
            theta,
            phi,
            report.effective_information,
        )

        return SweepRow(
            params.theta,
            params.phi,
            params.gamma,
            params.branch,
            report.effective_information,
            report.determinism,
            report.degeneracy,
            k_sigma,
            report.effect_information_of(COARSE_SOURCES[0]),
        )

    ###########################################################################
    def run(
        self,
        thetas: Sequence[float],
        phis: Sequence[float],
        processes: int = 1,
    ) -> List[SweepRow]:
        """
        Evaluate every (theta, phi) pair. Points are sorted by
        (theta, phi) and Pool.map keeps that order in the output.

        PARAMETERS
            thetas: angles in [0, pi/2]
            phis: interferometer phases
            processes: number of worker processes
        """

        thetas = [check_theta(theta) for theta in thetas]
        phis = [check_finite_angle("phi", phi) for phi in phis]

        points = sorted(itertools.product(thetas, phis))

        if processes < 1:
            raise InvalidParameterError(f"processes must be >= 1: {processes}")

        logger.info(
            "sweep over %d points with %d process(es)", len(points), processes
        )

        if processes == 1 or len(points) < 2:
            return [self.compute_point(point) for point in points]

        with mp.Pool(processes=processes) as pool:
            results = pool.map(self.compute_point, points)

        return results


def sweep_ei(
    theta_grid: Sequence[float],
    phi_list: Sequence[float],
    gamma: float = 0.0,
    branch: Branch = Branch.FRINGES,
    processes: int = 1,
    averaged_branches: bool = False,
) -> List[SweepRow]:
    """
    Table of (theta, phi, EI, determinism, degeneracy, K) for the
    coarse grained model, one row per (theta, phi) pair
    """

    sweep = EmergenceSweep(gamma, branch, averaged_branches)

    return sweep.run(theta_grid, phi_list, processes=processes)


def k_curve(
    theta_grid: Sequence[float],
    phi: float = 0.0,
    gamma: float = 0.0,
    branch: Branch = Branch.FRINGES,
) -> List[SweepRow]:
    """
    Which-way knowledge K(theta) next to the EI it leaves to the
    coarse grained model at a fixed phase
    """

    return sweep_ei(theta_grid, [phi], gamma, branch)
