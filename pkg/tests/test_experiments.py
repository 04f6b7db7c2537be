"""Tests for the interferometer causal models and the EI sweeps"""

# pylint: disable=missing-function-docstring

import math

import numpy as np
import pytest

from quantumEmergence.causal import effective_information
from quantumEmergence.exceptions import (
    ImpossibleOutcomeError,
    InvalidParameterError,
)
from quantumEmergence.experiments import (
    COARSE_SOURCES,
    DEFAULT_PHI_LIST,
    FINE_TARGETS,
    Branch,
    EmergenceSweep,
    ScenarioParams,
    build_theta_grid,
    check_which_alternative,
    classical_aggregate,
    coarse_grained_model,
    ei_closed_form,
    emergence_comparison,
    fine_grained_model,
    fringe_visibility,
    k_curve,
    sweep_ei,
)
from quantumEmergence.experiments import sweep as sweep_module

TOLERANCE = 1e-12
BRANCHES = (Branch.FRINGES, Branch.ANTI_FRINGES)


def binary_entropy(p: float) -> float:
    return -sum(x * math.log2(x) for x in (p, 1 - p) if x > 0)


class TestScenarioParams:
    """Tests validation of the scenario angles and branch"""

    def test_defaults(self):
        params = ScenarioParams(theta=0.3)
        assert (params.gamma, params.phi) == (0.0, 0.0)
        assert params.branch is Branch.FRINGES

    @pytest.mark.parametrize(
        "changes",
        [{"theta": 9.0}, {"theta": -0.1}, {"gamma": math.nan}],
    )
    def test_invalid_parameters(self, changes):
        with pytest.raises(InvalidParameterError):
            ScenarioParams(**{"theta": 0.3, **changes})

    @pytest.mark.parametrize(
        "text, branch",
        [
            ("fringes", Branch.FRINGES),
            ("+1", Branch.FRINGES),
            ("anti-fringes", Branch.ANTI_FRINGES),
            ("anti_fringes", Branch.ANTI_FRINGES),
            ("-1", Branch.ANTI_FRINGES),
        ],
    )
    def test_branch_from_text(self, text, branch):
        assert Branch.from_text(text) is branch

    def test_unknown_branch(self):
        with pytest.raises(InvalidParameterError):
            ScenarioParams(theta=0.3, branch="sideways")

    def test_replace_validates(self):
        params = ScenarioParams(theta=0.3)
        assert params.replace(phi=1.0).phi == 1.0
        with pytest.raises(InvalidParameterError):
            params.replace(theta=2.0)


class TestFineGrainedModel:
    """Tests the which-path model"""

    @pytest.mark.parametrize("phi", [0.0, math.pi / 3, math.pi, -2.0])
    def test_rows_are_uniform(self, phi):
        tpm = fine_grained_model(phi)
        np.testing.assert_allclose(tpm.rows, np.full((2, 4), 0.25))
        assert [state.name for state in tpm.target_states] == [
            state.name for state in FINE_TARGETS
        ]

    def test_effective_information_vanishes(self, fine_tpm):
        report = effective_information(fine_tpm)
        assert report.effective_information == pytest.approx(
            0.0, abs=TOLERANCE
        )
        assert report.determinism == pytest.approx(0.0, abs=TOLERANCE)
        assert report.degeneracy == pytest.approx(0.0, abs=TOLERANCE)

    def test_other_which_alternative_angle(self):
        tpm = fine_grained_model(0.4, theta=math.pi / 2, gamma=1.0)
        np.testing.assert_allclose(tpm.rows, np.full((2, 4), 0.25))

    def test_which_alternative_angles(self):
        assert check_which_alternative(math.pi / 2 - 1e-13) == math.pi / 2
        assert check_which_alternative(1e-13) == 0.0
        with pytest.raises(InvalidParameterError):
            check_which_alternative(math.pi / 4)
        with pytest.raises(InvalidParameterError):
            fine_grained_model(0.0, theta=0.3)


class TestCoarseGrainedModel:
    """Tests the single cavity variable model"""

    def test_eraser_is_deterministic(self, eraser_tpm):
        np.testing.assert_allclose(eraser_tpm.rows, np.eye(2), atol=1e-12)
        report = effective_information(eraser_tpm)
        assert report.effective_information == pytest.approx(1.0, abs=1e-12)
        assert report.effect_information_of(COARSE_SOURCES[0]) == (
            pytest.approx(1.0, abs=1e-12)
        )

    def test_eraser_anti_fringes(self, eraser_params):
        tpm = coarse_grained_model(
            eraser_params.replace(branch=Branch.ANTI_FRINGES)
        )
        np.testing.assert_allclose(tpm.rows, [[0, 1], [1, 0]], atol=1e-12)

    def test_which_alternative_is_uninformative(self):
        tpm = coarse_grained_model(ScenarioParams(theta=0.0))
        np.testing.assert_allclose(tpm.rows, np.full((2, 2), 0.5))
        assert effective_information(tpm).effective_information == (
            pytest.approx(0.0, abs=TOLERANCE)
        )

    def test_rows_follow_visibility(self):
        params = ScenarioParams(theta=0.3, gamma=0.2, phi=0.9)
        visibility = fringe_visibility(params)
        np.testing.assert_allclose(
            coarse_grained_model(params).rows,
            [
                [(1 + visibility) / 2, (1 - visibility) / 2],
                [(1 - visibility) / 2, (1 + visibility) / 2],
            ],
            atol=1e-12,
        )

    def test_partial_eraser_value(self):
        params = ScenarioParams(theta=math.pi / 8)
        expected = 1 - binary_entropy((1 + math.sqrt(2) / 2) / 2)

        ei = effective_information(coarse_grained_model(params))

        assert ei.effective_information == pytest.approx(expected, abs=1e-12)
        assert ei_closed_form(params) == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(0.39902, abs=2e-4)

    def test_closed_form_over_default_grid(self):
        for theta in build_theta_grid():
            for phi in DEFAULT_PHI_LIST:
                for branch in BRANCHES:
                    params = ScenarioParams(theta, 0.0, phi, branch)
                    report = effective_information(
                        coarse_grained_model(params)
                    )
                    assert report.effective_information == pytest.approx(
                        ei_closed_form(params), abs=1e-9
                    )

    def test_branch_symmetry(self, rng):
        for _ in range(200):
            params = ScenarioParams(
                rng.uniform(0, math.pi / 2),
                rng.uniform(-math.pi, math.pi),
                rng.uniform(-math.pi, math.pi),
            )
            anti = params.replace(branch=Branch.ANTI_FRINGES)
            assert effective_information(
                coarse_grained_model(params)
            ).effective_information == pytest.approx(
                effective_information(
                    coarse_grained_model(anti)
                ).effective_information,
                abs=1e-12,
            )

    def test_depends_on_phase_sum(self, rng):
        for _ in range(200):
            theta = rng.uniform(0, math.pi / 2)
            gamma, phi, shift = rng.uniform(-math.pi, math.pi, size=3)
            first = ScenarioParams(theta, gamma, phi)
            second = ScenarioParams(theta, gamma + shift, phi - shift)
            np.testing.assert_allclose(
                coarse_grained_model(first).rows,
                coarse_grained_model(second).rows,
                atol=1e-12,
            )

    def test_averaged_branches_erase_fringes(self, rng):
        for _ in range(50):
            params = ScenarioParams(
                rng.uniform(0, math.pi / 2),
                rng.uniform(-math.pi, math.pi),
                rng.uniform(-math.pi, math.pi),
            )
            tpm = coarse_grained_model(params, averaged_branches=True)
            np.testing.assert_allclose(
                tpm.rows, np.full((2, 2), 0.5), atol=1e-12
            )

    def test_complementarity(self, rng):
        for _ in range(200):
            params = ScenarioParams(
                rng.uniform(0, math.pi / 2),
                rng.uniform(-math.pi, math.pi),
                rng.uniform(-math.pi, math.pi),
            )
            knowledge = abs(math.cos(2 * params.theta))
            visibility = fringe_visibility(params)
            assert knowledge**2 + visibility**2 <= 1 + 1e-12

            aligned = params.replace(phi=-params.gamma)
            assert knowledge**2 + fringe_visibility(aligned) ** 2 == (
                pytest.approx(1.0, abs=1e-12)
            )


class TestEmergenceComparison:
    """Tests fine against coarse grained EI"""

    def test_eraser_shows_causal_emergence(self, eraser_params):
        comparison = emergence_comparison(0.0, eraser_params)

        assert comparison.ei_fine == pytest.approx(0.0, abs=TOLERANCE)
        assert comparison.ei_coarse == pytest.approx(1.0, abs=1e-12)
        assert comparison.ei_classical_aggregate == pytest.approx(
            0.0, abs=TOLERANCE
        )
        assert comparison.delta == pytest.approx(1.0, abs=1e-12)
        assert comparison.causal_emergence

    def test_which_alternative_shows_none(self):
        comparison = emergence_comparison(0.0, ScenarioParams(theta=0.0))
        assert not comparison.causal_emergence

    def test_phase_must_match(self, eraser_params):
        with pytest.raises(InvalidParameterError):
            emergence_comparison(0.5, eraser_params)

    def test_classical_aggregate_is_uninformative(self, fine_tpm):
        aggregate = classical_aggregate(fine_tpm)

        assert [state.name for state in aggregate.source_states] == [
            "1,0",
            "2,0",
        ]
        assert [state.name for state in aggregate.target_states] == [
            "1,1",
            "2,1",
        ]
        np.testing.assert_allclose(aggregate.rows, np.full((2, 2), 0.5))


class TestThetaGrid:
    """Tests the measurement angle grid"""

    def test_default_grid(self):
        grid = build_theta_grid()
        assert len(grid) == 181
        assert grid[0] == 0.0
        assert grid[-1] == pytest.approx(math.pi / 2, abs=TOLERANCE)
        assert grid[90] == pytest.approx(math.pi / 4, abs=TOLERANCE)

    def test_small_grids(self):
        assert len(build_theta_grid(0)) == 0
        np.testing.assert_array_equal(build_theta_grid(1), [0.0])

    @pytest.mark.parametrize(
        "steps, theta_max", [(-1, math.pi / 2), (2.5, 1.0), (10, 2.0)]
    )
    def test_invalid_grid(self, steps, theta_max):
        with pytest.raises(InvalidParameterError):
            build_theta_grid(steps, theta_max)


class TestSweep:
    """Tests EI sweeps over theta and phi"""

    def test_three_angles(self):
        rows = sweep_ei([0.0, math.pi / 8, math.pi / 4], [0.0])

        assert [row.ei_bits for row in rows] == pytest.approx(
            [0.0, 1 - binary_entropy((1 + math.sqrt(2) / 2) / 2), 1.0],
            abs=1e-12,
        )
        assert [row.k_sigma for row in rows] == pytest.approx(
            [1.0, math.sqrt(2) / 2, 0.0], abs=1e-12
        )

    def test_default_grid_shape(self):
        grid = build_theta_grid()
        rows = sweep_ei(grid, DEFAULT_PHI_LIST)

        assert len(rows) == len(grid) * len(DEFAULT_PHI_LIST)

        for phi in DEFAULT_PHI_LIST:
            curve = [row for row in rows if row.phi == phi]
            values = [row.ei_bits for row in curve]

            assert all(0.0 <= value <= 1.0 + 1e-12 for value in values)
            assert values[0] == pytest.approx(0.0, abs=1e-12)
            assert values[-1] == pytest.approx(0.0, abs=1e-12)
            assert values[90] >= max(values) - 1e-9

        eraser = [row for row in rows if row.theta == grid[90]]
        assert eraser[0].ei_bits == pytest.approx(1.0, abs=1e-9)

    def test_rows_are_sorted(self):
        rows = sweep_ei([0.5, 0.1], [1.0, 0.0])
        assert [(row.theta, row.phi) for row in rows] == [
            (0.1, 0.0),
            (0.1, 1.0),
            (0.5, 0.0),
            (0.5, 1.0),
        ]

    def test_first_state_effect_information(self):
        for row in sweep_ei(build_theta_grid(19), [0.0, 0.7]):
            assert row.ei_first_state == pytest.approx(row.ei_bits, abs=1e-12)

    def test_empty_grid(self):
        assert not sweep_ei([], DEFAULT_PHI_LIST)

    def test_parallel_sweep_matches(self):
        grid = build_theta_grid(7)
        assert sweep_ei(grid, [0.0, 0.3], processes=2) == sweep_ei(
            grid, [0.0, 0.3]
        )

    def test_invalid_processes(self):
        with pytest.raises(InvalidParameterError):
            sweep_ei([0.1], [0.0], processes=0)

    def test_not_applicable_point(self, monkeypatch):
        def impossible(params, averaged_branches=False):
            raise ImpossibleOutcomeError(Branch.FRINGES.outcome, 0.0)

        monkeypatch.setattr(sweep_module, "coarse_grained_model", impossible)

        row = EmergenceSweep().compute_point((0.3, 0.0))

        assert not row.applicable
        assert row.ei_bits is None
        assert row.determinism is None
        assert row.k_sigma == pytest.approx(abs(math.cos(0.6)))

    def test_k_curve_is_non_increasing(self):
        rows = k_curve(build_theta_grid(), phi=0.3)
        rows = sorted(rows, key=lambda row: row.k_sigma)
        values = [row.ei_bits for row in rows]
        assert all(np.diff(values) <= 1e-9)
