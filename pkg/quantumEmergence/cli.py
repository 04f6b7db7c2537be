"""Command line interface: fine, coarse, sweep, kcurve and compare"""
import argparse
import logging
import math
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from quantumEmergence.causal import effective_information
from quantumEmergence.exceptions import (
    EmergenceError,
    InvalidParameterError,
    OutputError,
    UsageError,
)
from quantumEmergence.experiments import (
    DEFAULT_PHI_LIST,
    DEFAULT_THETA_STEPS,
    Branch,
    ScenarioParams,
    build_theta_grid,
    check_which_alternative,
    coarse_grained_model,
    emergence_comparison,
    fine_grained_model,
    k_curve,
    sweep_ei,
)
from quantumEmergence.output import (
    ALL_BRANCHES,
    COLUMN_NAMES,
    COMPARISON_COLUMN_NAMES,
    OUTPUT_FORMATS,
    comparison_row,
    emit_report,
    report_row,
    sweep_rows,
)
from quantumEmergence.quantum.states import HALF_PI, check_finite_angle
from quantumEmergence.utils.configfile import ConfigurationFile
from quantumEmergence.utils.filedir import FileDirectory

###############################################################################
# CONSTANTS
CONFIG_FILE_NAME = "emergence.ini"

EXIT_SUCCESS = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

# used when the configuration file lacks a key
DEFAULTS = {
    "scenario": {
        "theta": math.pi / 4,
        "gamma": 0.0,
        "phi": 0.0,
        "branch": Branch.FRINGES.value,
    },
    "sweep": {
        "theta_steps": DEFAULT_THETA_STEPS,
        "theta_max": HALF_PI,
        "phi_list": ", ".join(repr(phi) for phi in DEFAULT_PHI_LIST),
    },
    "output": {"format": "csv"},
    "configuration": {"processes": 1},
    "logging": {"level": "WARNING"},
}

logger = logging.getLogger(__name__)
###############################################################################


@dataclass(frozen=True)
class RunConfig:
    """
    Resolved run parameters: defaults < configuration file < flags

    PARAMETERS
        command: fine, coarse, sweep, kcurve or compare
        params: scenario angles in radians and branch
        theta_grid: angles of sweep and kcurve
        phi_list: phases of sweep
        output_path: file location, standard output if None
        output_format: csv or json
        averaged_branches: mix both branches without post-selection
        processes: worker processes of the sweep
        log_level: logging level name
    """

    command: str
    params: ScenarioParams
    theta_grid: Tuple[float, ...] = ()
    phi_list: Tuple[float, ...] = ()
    output_path: Optional[str] = None
    output_format: str = "csv"
    averaged_branches: bool = False
    processes: int = 1
    log_level: str = "WARNING"
    theta_steps: int = field(default=0, compare=False)
    theta_max: float = field(default=HALF_PI, compare=False)


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser raising UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


###############################################################################
def _add_common_flags(parser: argparse.ArgumentParser) -> None:

    parser.add_argument(
        "--config",
        default=None,
        help=f"configuration file, default ./{CONFIG_FILE_NAME} if present",
    )
    parser.add_argument(
        "--out", default=None, help="output file, standard output if absent"
    )
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
    parser.add_argument(
        "--log-level",
        default=None,
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
    )


def _add_angle_flags(
    parser: argparse.ArgumentParser, theta: bool = True, phi: bool = True
) -> None:

    if theta:
        parser.add_argument(
            "--theta", type=float, default=None, help="radians, [0, pi/2]"
        )
    parser.add_argument("--gamma", type=float, default=None, help="radians")

    if phi:
        parser.add_argument("--phi", type=float, default=None, help="radians")

    parser.add_argument(
        "--branch",
        default=None,
        choices=[branch.value for branch in Branch],
        help="post-selected outcome: fringes (+1) or anti-fringes (-1)",
    )


def _add_grid_flags(parser: argparse.ArgumentParser) -> None:

    parser.add_argument(
        "--theta-steps", type=int, default=None, help="points of theta grid"
    )
    parser.add_argument(
        "--theta-max", type=float, default=None, help="radians, last theta"
    )


def build_parser() -> argparse.ArgumentParser:
    """
    Parser with one sub-command per model or table. All angles are
    radians, there is no degree option.
    """

    parser = _ArgumentParser(
        prog="emergence",
        description=(
            "Causal emergence in an atomic Mach-Zehnder interferometer "
            "with two which-path cavities. Angles are in radians."
        ),
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    fine = commands.add_parser(
        "fine", help="which-path model, theta = 0 or pi/2"
    )
    _add_angle_flags(fine)

    coarse = commands.add_parser("coarse", help="quantum eraser model")
    _add_angle_flags(coarse)
    coarse.add_argument("--averaged-branches", action="store_true")

    sweep = commands.add_parser("sweep", help="EI over theta and phi")
    _add_angle_flags(sweep, theta=False, phi=False)
    _add_grid_flags(sweep)
    sweep.add_argument(
        "--phi-list", default=None, help="comma separated phases, radians"
    )
    sweep.add_argument("--processes", type=int, default=None)
    sweep.add_argument("--averaged-branches", action="store_true")

    kcurve = commands.add_parser("kcurve", help="which-way knowledge and EI")
    _add_angle_flags(kcurve, theta=False)
    _add_grid_flags(kcurve)

    compare = commands.add_parser("compare", help="fine vs coarse EI")
    _add_angle_flags(compare)
    compare.add_argument("--averaged-branches", action="store_true")

    for subparser in (fine, coarse, sweep, kcurve, compare):
        _add_common_flags(subparser)

    return parser


###############################################################################
def load_configuration(config_path: Optional[str] = None) -> dict:
    """
    DEFAULTS updated with the typed values of the configuration file

    PARAMETERS
        config_path: explicit file, must exist; if None the file
            CONFIG_FILE_NAME in the working directory is read when present
    """

    if config_path is not None:

        try:
            FileDirectory.file_exists(config_path, exit_operation=True)
        except OutputError as error:
            raise UsageError(f"configuration: {error}") from error

    parser = ConfigurationFile.read([config_path or CONFIG_FILE_NAME])
    configuration = {
        section: dict(values) for section, values in DEFAULTS.items()
    }

    for section in parser.sections():

        values = ConfigurationFile().section_to_dictionary(
            parser.items(section)
        )
        configuration.setdefault(section, {}).update(values)

    return configuration


def _first(*values):
    # first value that is not None: flag, then configuration
    for value in values:
        if value is not None:
            return value
    return None


def _phi_list(entry) -> List[float]:

    if isinstance(entry, (int, float)):
        return [float(entry)]

    return ConfigurationFile().entry_to_list(str(entry), "float")


def parse_args(argv: Sequence[str]) -> RunConfig:
    """
    PARAMETERS
        argv: command line without the program name

    OUTPUTS
        RunConfig with validated angles

    Raises UsageError for unknown flags, out of range angles and
    malformed lists.
    """

    arguments = build_parser().parse_args(list(argv))
    configuration = load_configuration(arguments.config)

    scenario = configuration["scenario"]
    sweep = configuration["sweep"]
    command = arguments.command

    try:

        theta_default = 0.0 if command == "fine" else scenario["theta"]

        params = ScenarioParams(
            theta=_first(getattr(arguments, "theta", None), theta_default),
            gamma=_first(arguments.gamma, scenario["gamma"]),
            phi=_first(getattr(arguments, "phi", None), scenario["phi"]),
            branch=_first(arguments.branch, scenario["branch"]),
        )

        if command == "fine":
            params = params.replace(
                theta=check_which_alternative(params.theta)
            )

        theta_grid: Tuple[float, ...] = ()
        phi_list: Tuple[float, ...] = ()
        theta_steps = int(
            _first(
                getattr(arguments, "theta_steps", None), sweep["theta_steps"]
            )
        )
        theta_max = float(
            _first(getattr(arguments, "theta_max", None), sweep["theta_max"])
        )

        if command in ("sweep", "kcurve"):
            theta_grid = tuple(build_theta_grid(theta_steps, theta_max))

        if command == "sweep":
            phi_list = tuple(
                check_finite_angle("phi", phi)
                for phi in _phi_list(
                    _first(arguments.phi_list, sweep["phi_list"])
                )
            )
            if not phi_list:
                raise InvalidParameterError("--phi-list is empty")

        processes = int(
            _first(
                getattr(arguments, "processes", None),
                configuration["configuration"]["processes"],
            )
        )

        if processes < 1:
            raise InvalidParameterError("--processes must be >= 1")

    except (EmergenceError, TypeError, ValueError) as error:
        raise UsageError(str(error)) from error

    output_format = _first(arguments.format, configuration["output"]["format"])

    if output_format not in OUTPUT_FORMATS:
        raise UsageError(f"unknown output format: {output_format}")

    return RunConfig(
        command=command,
        params=params,
        theta_grid=theta_grid,
        phi_list=phi_list,
        output_path=arguments.out,
        output_format=output_format,
        averaged_branches=getattr(arguments, "averaged_branches", False),
        processes=processes,
        log_level=str(
            _first(arguments.log_level, configuration["logging"]["level"])
        ).upper(),
        theta_steps=theta_steps,
        theta_max=theta_max,
    )


###############################################################################
def configure_logging(level: str = "WARNING") -> None:
    """Log records go to standard error, standard output carries data"""

    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _run_parameters(config: RunConfig) -> dict:

    params = config.params
    run_parameters = {"command": config.command}

    if config.command in ("sweep", "kcurve"):
        run_parameters.update(
            gamma_rad=params.gamma,
            branch=params.branch.value,
            theta_steps=config.theta_steps,
            theta_max_rad=config.theta_max,
        )
        if config.command == "sweep":
            run_parameters["phi_list_rad"] = list(config.phi_list)
        else:
            run_parameters["phi_rad"] = params.phi
    else:
        run_parameters.update(
            theta_rad=params.theta,
            gamma_rad=params.gamma,
            phi_rad=params.phi,
            branch=params.branch.value,
        )

    if config.command in ("coarse", "sweep", "compare"):
        run_parameters["averaged_branches"] = config.averaged_branches

    return run_parameters


def run(config: RunConfig) -> None:
    """Compute the table requested by config and emit it"""

    params = config.params
    columns = COLUMN_NAMES

    if config.command == "fine":
        tpm = fine_grained_model(params.phi, params.theta, params.gamma)
        rows = [
            report_row(effective_information(tpm), params, ALL_BRANCHES)
        ]

    elif config.command == "coarse":
        tpm = coarse_grained_model(params, config.averaged_branches)
        rows = [report_row(effective_information(tpm), params)]

    elif config.command == "sweep":
        rows = sweep_rows(
            sweep_ei(
                config.theta_grid,
                config.phi_list,
                params.gamma,
                params.branch,
                processes=config.processes,
                averaged_branches=config.averaged_branches,
            )
        )

    elif config.command == "kcurve":
        rows = sweep_rows(
            k_curve(config.theta_grid, params.phi, params.gamma, params.branch)
        )

    else:
        comparison = emergence_comparison(
            params.phi, params, config.averaged_branches
        )
        rows = [comparison_row(comparison)]
        columns = COMPARISON_COLUMN_NAMES

    emit_report(
        rows,
        output_format=config.output_format,
        output_path=config.output_path,
        params=_run_parameters(config),
        columns=columns,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Exit codes: 0 success, 2 argument error, 3 output or numeric
    validation failure
    """

    argv = sys.argv[1:] if argv is None else argv

    try:
        config = parse_args(argv)
    except UsageError as error:
        sys.stderr.write(f"usage error: {error}\n")
        return EXIT_USAGE

    configure_logging(config.log_level)
    logger.info("running %s", config.command)

    try:
        run(config)
    except OutputError as error:
        logger.error("%s", error)
        return EXIT_FAILURE
    except EmergenceError as error:
        logger.error("numeric validation failed: %s", error)
        return EXIT_FAILURE

    return EXIT_SUCCESS
